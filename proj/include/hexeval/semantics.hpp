#ifndef HEXEVAL_SEMANTICS_HPP
#define HEXEVAL_SEMANTICS_HPP

#include "hexeval/ast.hpp"
#include "hexeval/oracle.hpp"

namespace hexeval {

/// Truth of a single ground body literal under I (external atoms via the
/// registry, builtins directly).
bool satisfies_literal(const Interpretation& I, const BodyLiteral& lit,
                       const OracleRegistry& reg);

/// I |= B(r) for a ground rule.
bool satisfies_body(const Interpretation& I, const Rule& r, const OracleRegistry& reg);

/// I |= H(r) for a ground rule (some head atom true; false for constraints).
bool satisfies_head(const Interpretation& I, const Rule& r);

/// I |= r: the head holds whenever the body does.
bool satisfies(const Interpretation& I, const Rule& r, const OracleRegistry& reg);

/// I |= P for a ground program.
bool models(const Interpretation& I, const Program& ground, const OracleRegistry& reg);

/// fP^I: the rules of the ground program whose body I satisfies.
Program flp_reduct(const Program& ground, const Interpretation& I, const OracleRegistry& reg);

}  // namespace hexeval

#endif
