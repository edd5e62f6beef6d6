#include "hexeval/ast.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hexeval {

bool Atom::ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_constant(); });
}

bool ExternalAtom::ground() const {
    auto is_const = [](const Term& t) { return t.is_constant(); };
    return std::all_of(inputs.begin(), inputs.end(), is_const) &&
           std::all_of(outputs.begin(), outputs.end(), is_const);
}

bool BuiltinAtom::holds() const {
    bool eq = lhs.name == rhs.name;
    return op == BuiltinOp::Eq ? eq : !eq;
}

bool literal_ground(const BodyLiteral& lit) {
    return std::visit([](const auto& x) { return x.ground(); }, lit);
}

bool Rule::ground() const {
    return std::all_of(head.begin(), head.end(), [](const Atom& a) { return a.ground(); }) &&
           std::all_of(body_pos.begin(), body_pos.end(), literal_ground) &&
           std::all_of(body_neg.begin(), body_neg.end(), literal_ground);
}

bool Rule::has_external_atom() const {
    auto is_ext = [](const BodyLiteral& l) { return std::holds_alternative<ExternalAtom>(l); };
    return std::any_of(body_pos.begin(), body_pos.end(), is_ext) ||
           std::any_of(body_neg.begin(), body_neg.end(), is_ext);
}

namespace {

void collect_constants(const Term& t, std::set<std::string>& out) {
    if (t.is_constant()) out.insert(t.name);
}

void collect_constants(const Atom& a, std::set<std::string>& out) {
    out.insert(a.predicate);
    for (const auto& t : a.args) collect_constants(t, out);
}

void collect_constants(const BodyLiteral& lit, std::set<std::string>& out) {
    if (const auto* a = std::get_if<Atom>(&lit)) {
        collect_constants(*a, out);
    } else if (const auto* e = std::get_if<ExternalAtom>(&lit)) {
        for (const auto& t : e->inputs) collect_constants(t, out);
        for (const auto& t : e->outputs) collect_constants(t, out);
    } else {
        const auto& b = std::get<BuiltinAtom>(lit);
        collect_constants(b.lhs, out);
        collect_constants(b.rhs, out);
    }
}

}  // namespace

std::set<std::string> Program::constants() const {
    std::set<std::string> out;
    for (const auto& r : rules) {
        for (const auto& a : r.head) collect_constants(a, out);
        for (const auto& l : r.body_pos) collect_constants(l, out);
        for (const auto& l : r.body_neg) collect_constants(l, out);
    }
    return out;
}

Interpretation interpretation_union(const Interpretation& a, const Interpretation& b) {
    Interpretation out = a;
    out.atoms.insert(b.atoms.begin(), b.atoms.end());
    return out;
}

Interpretation interpretation_minus(const Interpretation& a, const Interpretation& b) {
    Interpretation out;
    for (const auto& atom : a.atoms)
        if (!b.contains(atom)) out.atoms.insert(atom);
    return out;
}

// ---- printing ----

namespace {

bool needs_quotes(const std::string& name) {
    if (name.empty()) return true;
    if (!(std::islower(static_cast<unsigned char>(name[0])) ||
          std::isdigit(static_cast<unsigned char>(name[0]))))
        return true;
    return !std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

std::string to_string(const Term& t) {
    if (t.is_constant() && needs_quotes(t.name)) return "\"" + t.name + "\"";
    return t.name;
}

std::string to_string(const Atom& a) {
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out += "(";
        for (size_t i = 0; i < a.args.size(); ++i) {
            if (i) out += ",";
            out += to_string(a.args[i]);
        }
        out += ")";
    }
    return out;
}

std::string to_string(const ExternalAtom& e) {
    std::string out = "&" + e.name + "[";
    for (size_t i = 0; i < e.inputs.size(); ++i) {
        if (i) out += ",";
        out += to_string(e.inputs[i]);
    }
    out += "]";
    if (!e.outputs.empty()) {
        out += "(";
        for (size_t i = 0; i < e.outputs.size(); ++i) {
            if (i) out += ",";
            out += to_string(e.outputs[i]);
        }
        out += ")";
    }
    return out;
}

std::string to_string(const BuiltinAtom& b) {
    return to_string(b.lhs) + (b.op == BuiltinOp::Eq ? " = " : " != ") + to_string(b.rhs);
}

std::string to_string(const BodyLiteral& lit) {
    return std::visit([](const auto& x) { return to_string(x); }, lit);
}

std::string to_string(const Rule& r) {
    std::string out;
    for (size_t i = 0; i < r.head.size(); ++i) {
        if (i) out += " | ";
        out += to_string(r.head[i]);
    }
    if (!r.body_pos.empty() || !r.body_neg.empty()) {
        if (!r.head.empty()) out += " ";
        out += ":- ";
        bool first = true;
        for (const auto& l : r.body_pos) {
            if (!first) out += ", ";
            first = false;
            out += to_string(l);
        }
        for (const auto& l : r.body_neg) {
            if (!first) out += ", ";
            first = false;
            out += "not " + to_string(l);
        }
    }
    out += ".";
    return out;
}

std::string to_string(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += to_string(r);
        out += "\n";
    }
    return out;
}

std::string to_string(const Interpretation& i) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : i.atoms) {
        if (!first) out += ", ";
        first = false;
        out += to_string(a);
    }
    out += "}";
    return out;
}

// ---- variables and substitution ----

std::set<std::string> variables_of(const Atom& a) {
    std::set<std::string> out;
    for (const auto& t : a.args)
        if (t.is_variable()) out.insert(t.name);
    return out;
}

std::set<std::string> variables_of(const BodyLiteral& lit) {
    std::set<std::string> out;
    auto add = [&out](const Term& t) {
        if (t.is_variable()) out.insert(t.name);
    };
    if (const auto* a = std::get_if<Atom>(&lit)) {
        for (const auto& t : a->args) add(t);
    } else if (const auto* e = std::get_if<ExternalAtom>(&lit)) {
        for (const auto& t : e->inputs) add(t);
        for (const auto& t : e->outputs) add(t);
    } else {
        const auto& b = std::get<BuiltinAtom>(lit);
        add(b.lhs);
        add(b.rhs);
    }
    return out;
}

std::set<std::string> variables_of(const Rule& r) {
    std::set<std::string> out;
    for (const auto& a : r.head) {
        auto v = variables_of(a);
        out.insert(v.begin(), v.end());
    }
    for (const auto& l : r.body_pos) {
        auto v = variables_of(l);
        out.insert(v.begin(), v.end());
    }
    for (const auto& l : r.body_neg) {
        auto v = variables_of(l);
        out.insert(v.begin(), v.end());
    }
    return out;
}

namespace {

Term substitute_term(const Term& t, const Substitution& s) {
    if (t.is_variable()) {
        auto it = s.find(t.name);
        if (it != s.end()) return Term::constant(it->second);
    }
    return t;
}

BodyLiteral substitute_literal(const BodyLiteral& lit, const Substitution& s) {
    if (const auto* a = std::get_if<Atom>(&lit)) return substitute(*a, s);
    if (const auto* e = std::get_if<ExternalAtom>(&lit)) {
        ExternalAtom out = *e;
        for (auto& t : out.inputs) t = substitute_term(t, s);
        for (auto& t : out.outputs) t = substitute_term(t, s);
        return out;
    }
    BuiltinAtom out = std::get<BuiltinAtom>(lit);
    out.lhs = substitute_term(out.lhs, s);
    out.rhs = substitute_term(out.rhs, s);
    return out;
}

}  // namespace

Atom substitute(const Atom& a, const Substitution& s) {
    Atom out = a;
    for (auto& t : out.args) t = substitute_term(t, s);
    return out;
}

Rule substitute(const Rule& r, const Substitution& s) {
    Rule out;
    out.head.reserve(r.head.size());
    for (const auto& a : r.head) out.head.push_back(substitute(a, s));
    for (const auto& l : r.body_pos) out.body_pos.push_back(substitute_literal(l, s));
    for (const auto& l : r.body_neg) out.body_neg.push_back(substitute_literal(l, s));
    return out;
}

bool unifies(const Atom& a, const Atom& b) {
    if (a.predicate != b.predicate || a.args.size() != b.args.size()) return false;
    // Flat terms only, so unification reduces to union-find over variables
    // with at most one constant per class. Variables of the two atoms are
    // kept apart by tagging with the side.
    using Var = std::pair<int, std::string>;
    std::map<Var, Var> parent;
    std::map<Var, std::string> constant;

    std::function<Var(Var)> find = [&](Var v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return v;
        Var root = find(it->second);
        parent[v] = root;
        return root;
    };

    auto bind = [&](Var v, const std::string& c) {
        Var root = find(v);
        auto it = constant.find(root);
        if (it != constant.end()) return it->second == c;
        constant[root] = c;
        return true;
    };

    auto join = [&](Var x, Var y) {
        Var rx = find(x), ry = find(y);
        if (rx == ry) return true;
        auto cx = constant.find(rx);
        auto cy = constant.find(ry);
        if (cx != constant.end() && cy != constant.end() && cx->second != cy->second)
            return false;
        parent[rx] = ry;
        if (cx != constant.end()) constant[ry] = cx->second;
        return true;
    };

    for (size_t i = 0; i < a.args.size(); ++i) {
        const Term& ta = a.args[i];
        const Term& tb = b.args[i];
        if (ta.is_constant() && tb.is_constant()) {
            if (ta.name != tb.name) return false;
        } else if (ta.is_constant()) {
            if (!bind({1, tb.name}, ta.name)) return false;
        } else if (tb.is_constant()) {
            if (!bind({0, ta.name}, tb.name)) return false;
        } else {
            if (!join({0, ta.name}, {1, tb.name})) return false;
        }
    }
    return true;
}

std::vector<Rule> ground_rule(const Rule& r, const std::set<std::string>& consts) {
    std::vector<std::string> vars;
    for (const auto& v : variables_of(r)) vars.push_back(v);

    std::vector<Rule> out;
    if (vars.empty()) {
        Rule g = r;
        // evaluate builtins even on already-ground rules
        std::vector<BodyLiteral> body;
        for (const auto& l : g.body_pos) {
            if (const auto* b = std::get_if<BuiltinAtom>(&l)) {
                if (!b->holds()) return out;  // instance dropped
            } else {
                body.push_back(l);
            }
        }
        g.body_pos = std::move(body);
        out.push_back(std::move(g));
        return out;
    }
    if (consts.empty()) return out;

    std::vector<std::string> pool(consts.begin(), consts.end());
    std::vector<size_t> idx(vars.size(), 0);
    for (;;) {
        Substitution s;
        for (size_t i = 0; i < vars.size(); ++i) s[vars[i]] = pool[idx[i]];
        Rule g = substitute(r, s);
        bool keep = true;
        std::vector<BodyLiteral> body;
        for (const auto& l : g.body_pos) {
            if (const auto* b = std::get_if<BuiltinAtom>(&l)) {
                if (!b->holds()) {
                    keep = false;
                    break;
                }
            } else {
                body.push_back(l);
            }
        }
        if (keep) {
            g.body_pos = std::move(body);
            out.push_back(std::move(g));
        }
        // next substitution
        size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < pool.size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return out;
}

std::set<Atom> ground_heads(const Program& p, const std::set<std::string>& consts) {
    std::set<Atom> out;
    for (const auto& r : p.rules)
        for (const auto& g : ground_rule(r, consts))
            for (const auto& a : g.head) out.insert(a);
    return out;
}

Program facts_of(const Interpretation& i) {
    Program p;
    for (const auto& a : i.atoms) {
        Rule r;
        r.head.push_back(a);
        p.rules.push_back(std::move(r));
    }
    return p;
}

}  // namespace hexeval
