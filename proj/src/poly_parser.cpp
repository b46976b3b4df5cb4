#include "dcrit/poly_parser.hpp"

#include <cctype>

namespace dcrit {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line, col;

    Lexer(const std::string& text, int line0, int col0) : s(text), line(line0), col(col0) {}

    void bump(char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            bump(s[pos]);
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    char take() {
        skip_ws();
        char c = s[pos++];
        bump(c);
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    std::string take_integer() {
        skip_ws();
        std::string out;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out += s[pos];
            bump(s[pos]);
            ++pos;
        }
        if (out.empty()) fail("expected integer");
        return out;
    }

    std::string take_ident() {
        skip_ws();
        std::string out;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            out += s[pos];
            bump(s[pos]);
            ++pos;
        }
        if (out.empty()) fail("expected identifier");
        return out;
    }
};

struct Parser {
    Lexer lex;
    const VarTable* ctx;

    Parser(const std::string& text, const VarTable* c, int line0, int col0)
        : lex(text, line0, col0), ctx(c) {}

    Polynomial expr() {
        bool neg = false;
        if (lex.peek() == '-') {
            lex.take();
            neg = true;
        } else if (lex.peek() == '+') {
            lex.take();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                lex.take();
                acc = acc + term();
            } else if (c == '-') {
                lex.take();
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex.peek() == '*') {
            lex.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex.peek() == '^') {
            lex.take();
            bool neg = false;
            if (lex.peek() == '-') {
                lex.take();
                neg = true;
            }
            std::string digits = lex.take_integer();
            int e = 0;
            try {
                e = std::stoi(digits);
            } catch (...) {
                lex.fail("exponent out of range");
            }
            b = b.pow(neg ? -e : e);
        }
        return b;
    }

    Polynomial base() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            Polynomial inner = expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.take();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.take_integer();
            if (lex.peek() == '/') {
                lex.take();
                std::string den = lex.take_integer();
                return Polynomial::constant(ctx, rat_parse(num + "/" + den));
            }
            return Polynomial::constant(ctx, rat_parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = lex.line, co = lex.col;
            std::string name = lex.take_ident();
            int idx = ctx->index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", l, co);
            return Polynomial::variable(ctx, idx);
        }
        lex.fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarTable* ctx, int line0, int col0) {
    Parser p(text, ctx, line0, col0);
    if (p.lex.eof()) p.lex.fail("empty polynomial literal");
    Polynomial result = p.expr();
    if (!p.lex.eof()) p.lex.fail("trailing input in polynomial literal");
    return result;
}

} // namespace dcrit
