#include "hexeval/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hexeval/errors.hpp"

namespace hexeval {

ProjectedInput project(const InputType& t, const Interpretation& I, const std::string& p) {
    ProjectedInput out;
    out.is_const = t.is_const;
    if (t.is_const) {
        out.constant = p;
        return out;
    }
    for (const auto& a : I.atoms) {
        if (a.predicate != p || static_cast<int>(a.args.size()) != t.arity) continue;
        std::vector<std::string> tuple;
        tuple.reserve(a.args.size() + 1);
        tuple.push_back(p);
        for (const auto& arg : a.args) tuple.push_back(arg.name);
        out.extension.insert(std::move(tuple));
    }
    return out;
}

void OracleRegistry::add(ExternalPredicateDef def) {
    if (defs_.count(def.name))
        throw SignatureConflict("external predicate &" + def.name + " already registered");
    defs_.emplace(def.name, std::move(def));
}

const ExternalPredicateDef* OracleRegistry::find(const std::string& name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
}

const ExternalPredicateDef& OracleRegistry::require(const std::string& name) const {
    const auto* def = find(name);
    if (!def) throw UnknownExternalPredicate(name);
    return *def;
}

std::vector<ProjectedInput> OracleRegistry::project_inputs(
    const ExternalPredicateDef& def, const Interpretation& I,
    const std::vector<std::string>& ins) const {
    std::vector<ProjectedInput> proj;
    proj.reserve(ins.size());
    for (size_t i = 0; i < ins.size(); ++i)
        proj.push_back(project(def.signature[i], I, ins[i]));
    return proj;
}

bool OracleRegistry::eval(const std::string& g, const Interpretation& I,
                          const std::vector<std::string>& ins,
                          const std::vector<std::string>& outs) const {
    const auto& def = require(g);
    if (static_cast<int>(ins.size()) != def.in_arity() ||
        static_cast<int>(outs.size()) != def.out_arity)
        throw ArityMismatch("&" + g + " called with " + std::to_string(ins.size()) + "/" +
                            std::to_string(outs.size()) + " arguments, registered " +
                            std::to_string(def.in_arity()) + "/" +
                            std::to_string(def.out_arity));
    return def.decide(project_inputs(def, I, ins), outs);
}

bool OracleRegistry::eval(const ExternalAtom& e, const Interpretation& I) const {
    std::vector<std::string> ins, outs;
    for (const auto& t : e.inputs) ins.push_back(t.name);
    for (const auto& t : e.outputs) outs.push_back(t.name);
    return eval(e.name, I, ins, outs);
}

std::set<OutputTuple> OracleRegistry::extensional(
    const std::string& g, const std::vector<ProjectedInput>& proj) const {
    const auto& def = require(g);
    if (proj.size() != def.signature.size())
        throw ArityMismatch("&" + g + " projected input length mismatch");
    auto result = def.enumerate(proj);
    if (!result)
        throw InfiniteOutputGuard("&" + g + " cannot enumerate its outputs");
    return *result;
}

std::vector<std::string> OracleRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : defs_) out.push_back(k);
    return out;
}

bool check_monotonic(const OracleRegistry& reg, const std::string& g,
                     const std::set<Atom>& universe) {
    const auto& def = reg.require(g);
    std::vector<Atom> atoms(universe.begin(), universe.end());
    // each atom independently absent / in I' only / in both: 3^n pairs
    if (atoms.size() > 10) throw UniverseTooLarge("monotonicity check over > 10 atoms");

    std::set<std::string> consts;
    std::set<std::string> preds;
    for (const auto& a : atoms) {
        preds.insert(a.predicate);
        for (const auto& t : a.args) consts.insert(t.name);
    }
    if (consts.empty()) consts.insert("c0");

    // candidate values per input position
    std::vector<std::vector<std::string>> in_choices;
    for (const auto& t : def.signature) {
        std::vector<std::string> vals;
        if (t.is_const) {
            vals.assign(consts.begin(), consts.end());
        } else {
            vals.assign(preds.begin(), preds.end());
            if (vals.empty()) vals.assign(consts.begin(), consts.end());
        }
        in_choices.push_back(std::move(vals));
    }
    std::vector<std::vector<std::string>> in_tuples{{}};
    for (const auto& vals : in_choices) {
        std::vector<std::vector<std::string>> next;
        for (const auto& partial : in_tuples)
            for (const auto& v : vals) {
                auto t = partial;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        in_tuples = std::move(next);
    }
    std::vector<OutputTuple> out_tuples{{}};
    for (int i = 0; i < def.out_arity; ++i) {
        std::vector<OutputTuple> next;
        for (const auto& partial : out_tuples)
            for (const auto& c : consts) {
                auto t = partial;
                t.push_back(c);
                next.push_back(std::move(t));
            }
        out_tuples = std::move(next);
    }

    const size_t n = atoms.size();
    std::vector<int> state(n, 0);  // 0: absent, 1: in I' only, 2: in both
    for (;;) {
        Interpretation small, large;
        for (size_t i = 0; i < n; ++i) {
            if (state[i] >= 1) large.atoms.insert(atoms[i]);
            if (state[i] == 2) small.atoms.insert(atoms[i]);
        }
        for (const auto& ins : in_tuples) {
            auto proj_small = reg.project_inputs(def, small, ins);
            auto proj_large = reg.project_inputs(def, large, ins);
            for (const auto& outs : out_tuples) {
                if (def.decide(proj_small, outs) && !def.decide(proj_large, outs))
                    return false;
            }
        }
        size_t i = 0;
        while (i < n && ++state[i] == 3) state[i++] = 0;
        if (i == n) break;
    }
    return true;
}

// ---- table oracles ----

ExternalPredicateDef ConditionalTableOracle::compile() const {
    ExternalPredicateDef def;
    def.name = name;
    def.signature = signature;
    def.out_arity = out_arity;
    def.monotonic = monotonic;
    auto rows_copy = rows;
    auto sig = signature;
    auto matches = [rows_copy](const std::vector<ProjectedInput>& proj) {
        std::set<OutputTuple> out;
        for (const auto& row : rows_copy) {
            bool ok = true;
            for (const auto& g : row.guards) {
                const auto& p = proj[g.position - 1];
                // guard tuples are stored without the predicate; the projected
                // extension carries it in front
                bool found = false;
                for (const auto& t : p.extension) {
                    if (t.size() == g.tuple.size() + 1 &&
                        std::equal(g.tuple.begin(), g.tuple.end(), t.begin() + 1)) {
                        found = true;
                        break;
                    }
                }
                if (found != g.positive) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.insert(row.emit);
        }
        return out;
    };
    def.decide = [matches](const std::vector<ProjectedInput>& proj, const OutputTuple& outs) {
        return matches(proj).count(outs) != 0;
    };
    def.enumerate = [matches](const std::vector<ProjectedInput>& proj)
        -> std::optional<std::set<OutputTuple>> { return matches(proj); };
    return def;
}

namespace {

struct EtabScanner {
    std::string line;
    size_t pos = 0;
    int lineno = 0;

    void skip_ws() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= line.size();
    }
    bool try_consume(const std::string& tok) {
        skip_ws();
        if (line.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!try_consume(tok))
            throw EtabParseError(lineno, "expected '" + tok + "'");
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
            ++pos;
        if (pos == start) throw EtabParseError(lineno, "expected identifier");
        return line.substr(start, pos - start);
    }
    std::vector<std::string> tuple() {
        expect("(");
        std::vector<std::string> out;
        skip_ws();
        if (try_consume(")")) return out;
        for (;;) {
            out.push_back(word());
            if (try_consume(")")) break;
            expect(",");
        }
        return out;
    }
};

}  // namespace

ConditionalTableOracle parse_table_oracle(const std::string& text) {
    ConditionalTableOracle oracle;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++lineno;
        auto comment = raw.find('%');
        if (comment != std::string::npos) raw.erase(comment);
        EtabScanner sc{raw, 0, lineno};
        if (sc.at_end()) continue;
        if (!header_seen) {
            // &NAME in=(T1,...,Tn) out=M monotonic=yes|no
            sc.expect("&");
            oracle.name = sc.word();
            sc.expect("in=");
            sc.expect("(");
            if (!sc.try_consume(")")) {
                for (;;) {
                    std::string t = sc.word();
                    if (t == "const") {
                        oracle.signature.push_back(InputType::constant());
                    } else {
                        for (char c : t)
                            if (!std::isdigit(static_cast<unsigned char>(c)))
                                throw EtabParseError(lineno, "bad input type '" + t + "'");
                        oracle.signature.push_back(InputType::predicate(std::stoi(t)));
                    }
                    if (sc.try_consume(")")) break;
                    sc.expect(",");
                }
            }
            sc.expect("out=");
            std::string m = sc.word();
            for (char c : m)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw EtabParseError(lineno, "bad output arity '" + m + "'");
            oracle.out_arity = std::stoi(m);
            sc.expect("monotonic=");
            std::string flag = sc.word();
            if (flag == "yes")
                oracle.monotonic = true;
            else if (flag == "no")
                oracle.monotonic = false;
            else
                throw EtabParseError(lineno, "monotonic must be yes or no");
            if (!sc.at_end()) throw EtabParseError(lineno, "trailing input after header");
            header_seen = true;
            continue;
        }
        // emit (c1,...,cM) [if has I (d...) [and has|hasnot J (d...)]*] [.]
        sc.expect("emit");
        TableRow row;
        row.emit = sc.tuple();
        if (static_cast<int>(row.emit.size()) != oracle.out_arity)
            throw EtabParseError(lineno, "emit tuple arity mismatch");
        if (sc.try_consume("if")) {
            bool first = true;
            for (;;) {
                if (!first && !sc.try_consume("and")) break;
                TableGuard g;
                if (sc.try_consume("hasnot"))
                    g.positive = false;
                else if (sc.try_consume("has"))
                    g.positive = true;
                else if (first)
                    throw EtabParseError(lineno, "expected has or hasnot");
                else
                    break;
                std::string posword = sc.word();
                for (char c : posword)
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw EtabParseError(lineno, "bad guard position '" + posword + "'");
                g.position = std::stoi(posword);
                if (g.position < 1 || g.position > oracle.in_arity())
                    throw EtabParseError(lineno, "guard position out of range");
                const auto& t = oracle.signature[g.position - 1];
                if (t.is_const)
                    throw EtabParseError(lineno, "guard on const-typed input position");
                g.tuple = sc.tuple();
                if (static_cast<int>(g.tuple.size()) != t.arity)
                    throw EtabParseError(lineno, "guard tuple arity mismatch");
                if (!g.positive && oracle.monotonic)
                    throw EtabParseError(lineno, "hasnot guard in a monotonic oracle");
                row.guards.push_back(std::move(g));
                first = false;
            }
        }
        sc.try_consume(".");
        if (!sc.at_end()) throw EtabParseError(lineno, "trailing input after row");
        oracle.rows.push_back(std::move(row));
    }
    if (!header_seen) throw EtabParseError(lineno, "missing header line");
    return oracle;
}

ExternalPredicateDef load_table_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open oracle file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_table_oracle(buf.str()).compile();
}

// ---- built-in oracle families ----

ExternalPredicateDef concat_oracle() {
    ExternalPredicateDef def;
    def.name = "concat";
    def.signature = {InputType::constant(), InputType::constant()};
    def.out_arity = 1;
    def.monotonic = true;  // independent of I
    def.decide = [](const std::vector<ProjectedInput>& in, const OutputTuple& out) {
        return out.size() == 1 && out[0] == in[0].constant + in[1].constant;
    };
    def.enumerate =
        [](const std::vector<ProjectedInput>& in) -> std::optional<std::set<OutputTuple>> {
        return std::set<OutputTuple>{{in[0].constant + in[1].constant}};
    };
    return def;
}

ExternalPredicateDef not_oracle() {
    ExternalPredicateDef def;
    def.name = "not";
    def.signature = {InputType::predicate(1)};
    def.out_arity = 1;
    def.monotonic = false;
    def.decide = [](const std::vector<ProjectedInput>& in, const OutputTuple& out) {
        if (out.size() != 1) return false;
        for (const auto& t : in[0].extension)
            if (t.size() == 2 && t[1] == out[0]) return false;
        return true;
    };
    def.enumerate = [](const std::vector<ProjectedInput>&) -> std::optional<std::set<OutputTuple>> {
        return std::nullopt;  // complement of a finite set
    };
    return def;
}

ExternalPredicateDef reach_oracle() {
    ExternalPredicateDef def;
    def.name = "reach";
    def.signature = {InputType::predicate(2), InputType::constant()};
    def.out_arity = 1;
    def.monotonic = true;
    auto reachable = [](const std::vector<ProjectedInput>& in) {
        std::map<std::string, std::vector<std::string>> adj;
        for (const auto& t : in[0].extension)
            if (t.size() == 3) adj[t[1]].push_back(t[2]);
        std::set<std::string> seen{in[1].constant};
        std::vector<std::string> queue{in[1].constant};
        while (!queue.empty()) {
            auto v = queue.back();
            queue.pop_back();
            for (const auto& w : adj[v])
                if (seen.insert(w).second) queue.push_back(w);
        }
        return seen;
    };
    def.decide = [reachable](const std::vector<ProjectedInput>& in, const OutputTuple& out) {
        return out.size() == 1 && reachable(in).count(out[0]) != 0;
    };
    def.enumerate =
        [reachable](const std::vector<ProjectedInput>& in) -> std::optional<std::set<OutputTuple>> {
        std::set<OutputTuple> out;
        for (const auto& v : reachable(in)) out.insert({v});
        return out;
    };
    return def;
}

OracleRegistry builtin_registry() {
    OracleRegistry reg;
    reg.add(concat_oracle());
    reg.add(not_oracle());
    reg.add(reach_oracle());
    return reg;
}

}  // namespace hexeval
