#include "hexeval/semantics.hpp"

namespace hexeval {

bool satisfies_literal(const Interpretation& I, const BodyLiteral& lit,
                       const OracleRegistry& reg) {
    if (const auto* a = std::get_if<Atom>(&lit)) return I.contains(*a);
    if (const auto* e = std::get_if<ExternalAtom>(&lit)) return reg.eval(*e, I);
    return std::get<BuiltinAtom>(lit).holds();
}

bool satisfies_body(const Interpretation& I, const Rule& r, const OracleRegistry& reg) {
    for (const auto& l : r.body_pos)
        if (!satisfies_literal(I, l, reg)) return false;
    for (const auto& l : r.body_neg)
        if (satisfies_literal(I, l, reg)) return false;
    return true;
}

bool satisfies_head(const Interpretation& I, const Rule& r) {
    for (const auto& a : r.head)
        if (I.contains(a)) return true;
    return false;
}

bool satisfies(const Interpretation& I, const Rule& r, const OracleRegistry& reg) {
    return !satisfies_body(I, r, reg) || satisfies_head(I, r);
}

bool models(const Interpretation& I, const Program& ground, const OracleRegistry& reg) {
    for (const auto& r : ground.rules)
        if (!satisfies(I, r, reg)) return false;
    return true;
}

Program flp_reduct(const Program& ground, const Interpretation& I, const OracleRegistry& reg) {
    Program out;
    for (const auto& r : ground.rules)
        if (satisfies_body(I, r, reg)) out.rules.push_back(r);
    return out;
}

}  // namespace hexeval
