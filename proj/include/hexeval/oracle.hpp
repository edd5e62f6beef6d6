#ifndef HEXEVAL_ORACLE_HPP
#define HEXEVAL_ORACLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hexeval/ast.hpp"

namespace hexeval {

/// An input position type: either const or a predicate arity.
struct InputType {
    bool is_const;
    int arity;  // meaningful when !is_const

    static InputType constant() { return {true, 0}; }
    static InputType predicate(int arity) { return {false, arity}; }
    auto operator<=>(const InputType&) const = default;
};

using TypeSignature = std::vector<InputType>;

/// Result of the projection function: the constant itself for const
/// positions, the projected extension { (p,x1,...,xa) | p(x1,...,xa) in I }
/// for predicate positions.
struct ProjectedInput {
    bool is_const;
    std::string constant;
    std::set<std::vector<std::string>> extension;

    bool has_tuple(const std::vector<std::string>& t) const { return extension.count(t) != 0; }
    auto operator<=>(const ProjectedInput&) const = default;
};

ProjectedInput project(const InputType& t, const Interpretation& I, const std::string& p);

using OutputTuple = std::vector<std::string>;

/// Oracle decision over projected inputs; extensionality holds by
/// construction since the full interpretation is never visible.
using DecisionFn = std::function<bool(const std::vector<ProjectedInput>&, const OutputTuple&)>;

/// Enumerates all true output tuples for fixed projected inputs, or nullopt
/// when the output set cannot be enumerated (e.g. &not).
using EnumerateFn =
    std::function<std::optional<std::set<OutputTuple>>(const std::vector<ProjectedInput>&)>;

struct ExternalPredicateDef {
    std::string name;
    TypeSignature signature;
    int out_arity = 0;
    bool monotonic = false;
    DecisionFn decide;
    EnumerateFn enumerate;

    int in_arity() const { return static_cast<int>(signature.size()); }
};

class OracleRegistry {
  public:
    /// Throws SignatureConflict if the name is already registered.
    void add(ExternalPredicateDef def);

    const ExternalPredicateDef* find(const std::string& name) const;
    const ExternalPredicateDef& require(const std::string& name) const;
    bool has(const std::string& name) const { return defs_.count(name) != 0; }

    /// f_&g(I, ins, outs); throws UnknownExternalPredicate / ArityMismatch.
    bool eval(const std::string& g, const Interpretation& I,
              const std::vector<std::string>& ins, const std::vector<std::string>& outs) const;

    /// Evaluation of a ground external atom.
    bool eval(const ExternalAtom& e, const Interpretation& I) const;

    std::vector<ProjectedInput> project_inputs(const ExternalPredicateDef& def,
                                               const Interpretation& I,
                                               const std::vector<std::string>& ins) const;

    /// F_&g over already-projected inputs; throws InfiniteOutputGuard when
    /// the oracle cannot enumerate.
    std::set<OutputTuple> extensional(const std::string& g,
                                      const std::vector<ProjectedInput>& proj) const;

    std::vector<std::string> names() const;

  private:
    std::map<std::string, ExternalPredicateDef> defs_;
};

/// Exhaustively verifies the monotonicity of &g over all pairs I subseteq I'
/// of subsets of the universe, with input/output tuples drawn from the
/// universe's predicates and constants. Guarded by UniverseTooLarge.
bool check_monotonic(const OracleRegistry& reg, const std::string& g,
                     const std::set<Atom>& universe);

/// One row of a declarative table oracle: emit the output tuple when every
/// guard holds in the interpretation projected at the guarded position.
struct TableGuard {
    int position;  // 1-based input position, predicate-typed
    bool positive; // has vs hasnot
    std::vector<std::string> tuple;  // argument tuple, without the predicate
    auto operator<=>(const TableGuard&) const = default;
};

struct TableRow {
    OutputTuple emit;
    std::vector<TableGuard> guards;
    auto operator<=>(const TableRow&) const = default;
};

struct ConditionalTableOracle {
    std::string name;
    TypeSignature signature;
    int out_arity = 0;
    bool monotonic = false;
    std::vector<TableRow> rows;

    ExternalPredicateDef compile() const;
};

/// Parses a .etab file; throws EtabParseError with a line number.
ConditionalTableOracle parse_table_oracle(const std::string& text);
ExternalPredicateDef load_table_oracle(const std::string& path);

/// Registry preloaded with the shipped oracle families
/// (&concat, &not, &reach).
OracleRegistry builtin_registry();
ExternalPredicateDef concat_oracle();
ExternalPredicateDef not_oracle();
ExternalPredicateDef reach_oracle();

}  // namespace hexeval

#endif
