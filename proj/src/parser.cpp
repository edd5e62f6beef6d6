#include "hexeval/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace hexeval {

namespace {

enum class Tok {
    Ident,   // lowercase-initial identifier or number
    Var,     // uppercase-initial identifier
    String,  // quoted constant
    Amp,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Pipe,
    Implies,  // :-
    Dot,
    Eq,
    Neq,
    End,
    Bad,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws_and_comments();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (c == '%') {  // unreachable; comments consumed above
            return {Tok::Bad, "%", line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                word.push_back(advance());
            Tok kind = std::isupper(static_cast<unsigned char>(word[0])) ? Tok::Var : Tok::Ident;
            if (word[0] == '_') kind = Tok::Bad;
            return {kind, word, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                word.push_back(advance());
            return {Tok::Ident, word, line, col};
        }
        if (c == '"') {
            advance();
            std::string word;
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n')
                word.push_back(advance());
            if (pos_ >= text_.size() || text_[pos_] != '"')
                return {Tok::Bad, "unterminated string", line, col};
            advance();
            return {Tok::String, word, line, col};
        }
        advance();
        switch (c) {
            case '&': return {Tok::Amp, "&", line, col};
            case '[': return {Tok::LBrack, "[", line, col};
            case ']': return {Tok::RBrack, "]", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            case ',': return {Tok::Comma, ",", line, col};
            case '|': return {Tok::Pipe, "|", line, col};
            case '.': return {Tok::Dot, ".", line, col};
            case '=': return {Tok::Eq, "=", line, col};
            case '!':
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    advance();
                    return {Tok::Neq, "!=", line, col};
                }
                return {Tok::Bad, "!", line, col};
            case ':':
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    return {Tok::Implies, ":-", line, col};
                }
                return {Tok::Bad, ":", line, col};
            default: return {Tok::Bad, std::string(1, c), line, col};
        }
    }

  private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

    ParseResult run() {
        while (cur_.kind != Tok::End) {
            size_t before = result_.diagnostics.size();
            parse_rule();
            if (result_.diagnostics.size() > before) recover();
        }
        return std::move(result_);
    }

  private:
    Lexer lex_;
    Token cur_;
    ParseResult result_;
    std::map<std::string, size_t> arity_seen_;

    void bump() { cur_ = lex_.next(); }

    void error(const std::string& msg) { error_at(cur_, msg); }
    void error_at(const Token& t, const std::string& msg) {
        result_.diagnostics.push_back(
            {t.line, t.column, msg, ParseDiagnostic::Severity::Error});
    }
    void warn_at(const Token& t, const std::string& msg) {
        result_.diagnostics.push_back(
            {t.line, t.column, msg, ParseDiagnostic::Severity::Warning});
    }

    // skip to just past the next '.' so later rules still get parsed
    void recover() {
        while (cur_.kind != Tok::Dot && cur_.kind != Tok::End) bump();
        if (cur_.kind == Tok::Dot) bump();
    }

    bool starts_atom() const {
        return cur_.kind == Tok::Ident || cur_.kind == Tok::Var || cur_.kind == Tok::String ||
               cur_.kind == Tok::Amp;
    }

    std::optional<Term> parse_term() {
        switch (cur_.kind) {
            case Tok::Ident:
            case Tok::String: {
                Term t = Term::constant(cur_.text);
                bump();
                return t;
            }
            case Tok::Var: {
                Term t = Term::variable(cur_.text);
                bump();
                return t;
            }
            default:
                error("expected term");
                return std::nullopt;
        }
    }

    std::optional<std::vector<Term>> parse_term_list(Tok open, Tok close,
                                                     const char* closing) {
        std::vector<Term> out;
        if (cur_.kind != open) return out;  // empty list when bracket absent
        bump();
        if (cur_.kind == close) {
            bump();
            return out;
        }
        for (;;) {
            auto t = parse_term();
            if (!t) return std::nullopt;
            out.push_back(*t);
            if (cur_.kind == close) {
                bump();
                return out;
            }
            if (cur_.kind != Tok::Comma) {
                error(std::string("expected ',' or '") + closing + "'");
                return std::nullopt;
            }
            bump();
        }
    }

    std::optional<Atom> parse_atom() {
        if (cur_.kind == Tok::Var) {
            error_at(cur_, "higher-order atom: predicate '" + cur_.text +
                               "' must be a constant");
            return std::nullopt;
        }
        if (cur_.kind != Tok::Ident && cur_.kind != Tok::String) {
            error("expected atom");
            return std::nullopt;
        }
        if (cur_.text == "not") {
            error_at(cur_, "'not' is reserved");
            return std::nullopt;
        }
        Atom a;
        Token name = cur_;
        a.predicate = cur_.text;
        bump();
        auto args = parse_term_list(Tok::LParen, Tok::RParen, ")");
        if (!args) return std::nullopt;
        a.args = std::move(*args);
        note_arity(name, a.predicate, a.args.size());
        return a;
    }

    std::optional<ExternalAtom> parse_external() {
        bump();  // '&'
        if (cur_.kind != Tok::Ident) {
            error("expected external predicate name after '&'");
            return std::nullopt;
        }
        ExternalAtom e;
        e.name = cur_.text;
        bump();
        if (cur_.kind != Tok::LBrack) {
            error("expected '[' after external predicate name");
            return std::nullopt;
        }
        auto ins = parse_term_list(Tok::LBrack, Tok::RBrack, "]");
        if (!ins) return std::nullopt;
        e.inputs = std::move(*ins);
        auto outs = parse_term_list(Tok::LParen, Tok::RParen, ")");
        if (!outs) return std::nullopt;
        e.outputs = std::move(*outs);
        return e;
    }

    // ordinary atom, external atom, or builtin comparison
    std::optional<BodyLiteral> parse_body_atom(bool negated) {
        if (cur_.kind == Tok::Amp) {
            auto e = parse_external();
            if (!e) return std::nullopt;
            return BodyLiteral{*e};
        }
        // builtin lookahead: a single term followed by = or !=
        if (cur_.kind == Tok::Ident || cur_.kind == Tok::Var || cur_.kind == Tok::String) {
            Token first = cur_;
            // peek requires one-token buffer: emulate by checking after the term
            if (cur_.kind == Tok::Var || cur_.kind == Tok::Ident || cur_.kind == Tok::String) {
                // try atom path first; builtins have no parentheses on the lhs
                Term lhs = cur_.kind == Tok::Var ? Term::variable(cur_.text)
                                                 : Term::constant(cur_.text);
                bump();
                if (cur_.kind == Tok::Eq || cur_.kind == Tok::Neq) {
                    if (negated) {
                        error("builtin comparison cannot be negated");
                        return std::nullopt;
                    }
                    BuiltinAtom b;
                    b.op = cur_.kind == Tok::Eq ? BuiltinOp::Eq : BuiltinOp::Neq;
                    bump();
                    auto rhs = parse_term();
                    if (!rhs) return std::nullopt;
                    b.lhs = lhs;
                    b.rhs = *rhs;
                    return BodyLiteral{b};
                }
                if (first.kind == Tok::Var) {
                    error_at(first, "higher-order atom: predicate '" + first.text +
                                        "' must be a constant");
                    return std::nullopt;
                }
                if (first.text == "not") {
                    error_at(first, "'not' is reserved");
                    return std::nullopt;
                }
                Atom a;
                a.predicate = first.text;
                auto args = parse_term_list(Tok::LParen, Tok::RParen, ")");
                if (!args) return std::nullopt;
                a.args = std::move(*args);
                note_arity(first, a.predicate, a.args.size());
                return BodyLiteral{a};
            }
        }
        error("expected body literal");
        return std::nullopt;
    }

    void parse_rule() {
        Rule r;
        Token start = cur_;
        if (cur_.kind == Tok::Dot) {
            error("empty rule");
            bump();
            return;
        }
        if (cur_.kind != Tok::Implies) {
            // head: atom ('|' atom | 'v' atom)*
            for (;;) {
                auto a = parse_atom();
                if (!a) return;
                r.head.push_back(*a);
                if (cur_.kind == Tok::Pipe) {
                    bump();
                    continue;
                }
                if (cur_.kind == Tok::Ident && cur_.text == "v") {
                    bump();
                    continue;
                }
                break;
            }
        }
        if (cur_.kind == Tok::Implies) {
            bump();
            bool first = true;
            while (first || cur_.kind == Tok::Comma) {
                if (!first) bump();
                first = false;
                bool negated = false;
                if (cur_.kind == Tok::Ident && cur_.text == "not") {
                    negated = true;
                    bump();
                }
                auto lit = parse_body_atom(negated);
                if (!lit) return;
                if (negated)
                    r.body_neg.push_back(*lit);
                else
                    r.body_pos.push_back(*lit);
            }
        }
        if (cur_.kind != Tok::Dot) {
            if (cur_.kind == Tok::End)
                error_at(start, "unterminated rule (missing '.')");
            else
                error("expected '.', ':-', ',' or '|'");
            return;
        }
        bump();
        if (r.head.empty() && r.body_pos.empty() && r.body_neg.empty()) {
            error_at(start, "rule with empty head and body");
            return;
        }
        result_.program.rules.push_back(std::move(r));
    }

    void note_arity(const Token& where, const std::string& pred, size_t arity) {
        auto [it, inserted] = arity_seen_.emplace(pred, arity);
        if (!inserted && it->second != arity)
            warn_at(where, "predicate '" + pred + "' used with arity " + std::to_string(arity) +
                               " and " + std::to_string(it->second));
    }

    void check_arities() {}  // warnings are emitted on the fly
};

}  // namespace

ParseResult parse_program(std::string_view text) { return Parser(text).run(); }

}  // namespace hexeval
