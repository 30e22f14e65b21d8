#include "stirlab/grammar.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace stirlab {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, arrow, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        skip_space();
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size() || s_[pos_] == '#') return {Tok::end, "", line_, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            // rational literal: digits '/' digits
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return {Tok::number, s_.substr(start, pos_ - start), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Tok::ident, s_.substr(start, pos_ - start), line_, col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Tok::plus, "+", line_, col};
            case '-':
                if (pos_ < s_.size() && s_[pos_] == '>') {
                    ++pos_;
                    return {Tok::arrow, "->", line_, col};
                }
                return {Tok::minus, "-", line_, col};
            case '*': return {Tok::star, "*", line_, col};
            case '^': return {Tok::caret, "^", line_, col};
            case '(': return {Tok::lparen, "(", line_, col};
            case ')': return {Tok::rparen, ")", line_, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
        }
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_;
};

class ExprParser {
public:
    ExprParser(const std::string& src, int line) : lex_(src, line), line_(line) { advance(); }

    Poly parse_expr() {
        bool negate = false;
        if (cur_.kind == Tok::minus) {
            negate = true;
            advance();
        } else if (cur_.kind == Tok::plus) {
            advance();
        }
        Poly p = parse_term();
        if (negate) p = -p;
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            bool sub = cur_.kind == Tok::minus;
            Token op = cur_;
            advance();
            Poly t = parse_term_after(op);
            if (sub)
                p -= t;
            else
                p += t;
        }
        return p;
    }

    Token current() const { return cur_; }

private:
    Poly parse_term() {
        Poly p = parse_factor(cur_);
        while (cur_.kind == Tok::star) {
            Token op = cur_;
            advance();
            p *= parse_factor(op);
        }
        return p;
    }

    Poly parse_term_after(const Token& op) {
        Poly p = parse_factor(op);
        while (cur_.kind == Tok::star) {
            Token star = cur_;
            advance();
            p *= parse_factor(star);
        }
        return p;
    }

    // `after` is the operator that demanded this factor; parse errors at end
    // of input point at it.
    Poly parse_factor(const Token& after) {
        Poly base = parse_primary(after);
        if (cur_.kind == Tok::caret) {
            Token caret = cur_;
            advance();
            if (cur_.kind != Tok::number || cur_.text.find('/') != std::string::npos)
                throw ParseError("expected nonnegative integer exponent after '^'", line_, caret.col);
            int e = std::stoi(cur_.text);
            advance();
            base = base.pow(e);
        }
        return base;
    }

    Poly parse_primary(const Token& after) {
        switch (cur_.kind) {
            case Tok::number: {
                Rat r(cur_.text);
                r.canonicalize();
                advance();
                return Poly(r);
            }
            case Tok::ident: {
                Poly v = Poly::var(cur_.text);
                advance();
                return v;
            }
            case Tok::lparen: {
                advance();
                Poly p = parse_expr();
                if (cur_.kind != Tok::rparen)
                    throw ParseError("expected ')'", line_, cur_.col);
                advance();
                return p;
            }
            case Tok::minus: {
                advance();
                return -parse_factor(after);
            }
            case Tok::end:
                throw ParseError("expected a value after '" + after.text + "'", line_, after.col);
            default:
                throw ParseError("unexpected '" + cur_.text + "'", line_, cur_.col);
        }
    }

    void advance() { cur_ = lex_.next(); }

    Lexer lex_;
    Token cur_{Tok::end, "", 0, 0};
    int line_;
};

} // namespace

Poly parse_poly(const std::string& src) {
    ExprParser p(src, 1);
    Poly result = p.parse_expr();
    if (p.current().kind != Tok::end)
        throw ParseError("trailing input '" + p.current().text + "'", 1, p.current().col);
    return result;
}

Grammar parse_grammar(const std::string& src) {
    Grammar g;
    std::istringstream in(src);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        Lexer probe(line, lineno);
        Token first = probe.next();
        if (first.kind == Tok::end) continue; // blank or comment-only line
        if (first.kind != Tok::ident)
            throw ParseError("rule must start with a letter name", lineno, first.col);
        Token arrow = probe.next();
        if (arrow.kind != Tok::arrow)
            throw ParseError("expected '->' after letter '" + first.text + "'", lineno, arrow.col);
        if (g.rules.count(first.text))
            throw ParseError("duplicate rule for letter '" + first.text + "'", lineno, first.col);

        // Re-lex the right-hand side only.
        size_t rhs_start = line.find("->");
        std::string rhs = line.substr(rhs_start + 2);
        std::string padded(rhs_start + 2, ' ');
        padded += rhs;
        ExprParser p(padded, lineno);
        Poly rule = p.parse_expr();
        if (p.current().kind != Tok::end)
            throw ParseError("trailing input '" + p.current().text + "'", lineno, p.current().col);
        g.rules.emplace(first.text, std::move(rule));
    }
    return g;
}

Grammar load_grammar_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open grammar file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_grammar(ss.str());
}

Poly derive(const Grammar& g, const Poly& p) {
    Poly out;
    for (const auto& [v, rule] : g.rules) {
        Poly d = p.derivative(v);
        if (!d.is_zero()) out += d * rule;
    }
    return out;
}

Poly derive_n(const Grammar& g, const Poly& p, int n) {
    if (n < 0) throw Error("derive_n: negative iteration count");
    Poly cur = p;
    for (int i = 0; i < n; ++i) cur = derive(g, cur);
    return cur;
}

Poly derive_then_substitute(const Grammar& g, const Poly& p, int n,
                            const std::map<VarName, Poly>& bindings) {
    return derive_n(g, p, n).substitute(bindings);
}

bool verify_alias(const Grammar& base, const Grammar& alias,
                  const std::map<VarName, Poly>& definitions) {
    for (const auto& [letter, rule] : alias.rules) {
        auto it = definitions.find(letter);
        Poly def = it == definitions.end() ? Poly::var(letter) : it->second;
        if (derive(base, def) != rule.substitute(definitions)) return false;
    }
    return true;
}

} // namespace stirlab
