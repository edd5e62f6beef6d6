#ifndef HEXEVAL_AST_HPP
#define HEXEVAL_AST_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace hexeval {

enum class TermKind { Constant, Variable };

/// A term is a constant (lowercase-initial or quoted) or a variable
/// (uppercase-initial).
struct Term {
    TermKind kind;
    std::string name;

    static Term constant(std::string n) { return {TermKind::Constant, std::move(n)}; }
    static Term variable(std::string n) { return {TermKind::Variable, std::move(n)}; }

    bool is_constant() const { return kind == TermKind::Constant; }
    bool is_variable() const { return kind == TermKind::Variable; }

    auto operator<=>(const Term&) const = default;
};

/// An ordinary atom p(t1,...,tn); the predicate is always a constant symbol.
struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const;
    auto operator<=>(const Atom&) const = default;
};

/// An external atom &g[inputs](outputs).
struct ExternalAtom {
    std::string name;  // without the leading '&'
    std::vector<Term> inputs;
    std::vector<Term> outputs;

    bool ground() const;
    auto operator<=>(const ExternalAtom&) const = default;
};

enum class BuiltinOp { Eq, Neq };

/// A comparison t1 = t2 or t1 != t2; only allowed in positive rule bodies and
/// resolved away at grounding time.
struct BuiltinAtom {
    BuiltinOp op;
    Term lhs;
    Term rhs;

    bool ground() const { return lhs.is_constant() && rhs.is_constant(); }
    bool holds() const;  // requires ground()
    auto operator<=>(const BuiltinAtom&) const = default;
};

using BodyLiteral = std::variant<Atom, ExternalAtom, BuiltinAtom>;

bool literal_ground(const BodyLiteral& lit);

struct Rule {
    std::vector<Atom> head;
    std::vector<BodyLiteral> body_pos;
    std::vector<BodyLiteral> body_neg;  // never contains builtins

    bool is_constraint() const { return head.empty() && !(body_pos.empty() && body_neg.empty()); }
    bool is_fact() const { return body_pos.empty() && body_neg.empty() && !head.empty(); }
    bool ground() const;
    bool has_external_atom() const;

    auto operator<=>(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;

    /// const(P): exactly the constant symbols occurring in the rules.
    std::set<std::string> constants() const;

    auto operator<=>(const Program&) const = default;
};

/// A set of ground ordinary atoms.
struct Interpretation {
    std::set<Atom> atoms;

    bool contains(const Atom& a) const { return atoms.count(a) != 0; }
    bool empty() const { return atoms.empty(); }
    auto operator<=>(const Interpretation&) const = default;
};

Interpretation interpretation_union(const Interpretation& a, const Interpretation& b);
Interpretation interpretation_minus(const Interpretation& a, const Interpretation& b);

// ---- printing (canonical .hex syntax; atoms sort lexicographically) ----

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const ExternalAtom& e);
std::string to_string(const BuiltinAtom& b);
std::string to_string(const BodyLiteral& lit);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);
std::string to_string(const Interpretation& i);

// ---- variables and substitution ----

using Substitution = std::map<std::string, std::string>;  // variable -> constant

std::set<std::string> variables_of(const Atom& a);
std::set<std::string> variables_of(const BodyLiteral& lit);
std::set<std::string> variables_of(const Rule& r);

Atom substitute(const Atom& a, const Substitution& s);
Rule substitute(const Rule& r, const Substitution& s);

/// First-order unification of two atoms, with the variables of the two sides
/// treated as disjointly renamed.
bool unifies(const Atom& a, const Atom& b);

/// All ground instances of r over the given constants. Builtin atoms are
/// evaluated and removed; instances with a false builtin are dropped.
std::vector<Rule> ground_rule(const Rule& r, const std::set<std::string>& consts);

/// gh(P): the set of ground head atoms occurring in the grounding of P.
std::set<Atom> ground_heads(const Program& p, const std::set<std::string>& consts);

/// facts(I): one fact rule per atom of I.
Program facts_of(const Interpretation& i);

}  // namespace hexeval

#endif
