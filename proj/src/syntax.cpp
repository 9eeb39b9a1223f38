#include "meadow/syntax.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace meadow {

SyntaxError::SyntaxError(int line_, int column_, const std::string& what,
                         std::vector<std::string> expected_)
    : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(column_) +
            ": " + what),
      line(line_),
      column(column_),
      expected(std::move(expected_)) {}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

std::string tok_name(Tok t) {
    switch (t) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

bool is_reserved(const std::string& id) {
    return id == "s" || id == "floor" || id == "ceil" || id == "one" || id == "zero" ||
           id == "inv";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += take();
            return {Tok::Int, digits, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                id += take();
            return {Tok::Ident, id, line, col};
        }
        take();
        switch (c) {
        case '+': return {Tok::Plus, "+", line, col};
        case '-': return {Tok::Minus, "-", line, col};
        case '*': return {Tok::Star, "*", line, col};
        case '/': return {Tok::Slash, "/", line, col};
        case '^': return {Tok::Caret, "^", line, col};
        case '(': return {Tok::LParen, "(", line, col};
        case ')': return {Tok::RParen, ")", line, col};
        default:
            throw SyntaxError(line, col, std::string("stray character '") + c + "'");
        }
    }

private:
    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            take();
    }
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

constexpr long kMaxExponent = 1000000;

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text), cur_(lex_.next()) {}

    Term parse_all() {
        Term t = parse_add();
        if (cur_.kind != Tok::End)
            fail("unexpected " + tok_name(cur_.kind),
                 {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
        throw SyntaxError(cur_.line, cur_.col, what, std::move(expected));
    }

    void advance() { cur_ = lex_.next(); }

    void expect(Tok kind) {
        if (cur_.kind != kind)
            fail("unexpected " + tok_name(cur_.kind) + ", expected " + tok_name(kind),
                 {tok_name(kind)});
        advance();
    }

    Term parse_add() {
        Term t = parse_mul();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            advance();
            Term rhs = parse_mul();
            t = Term::add(std::move(t), minus ? Term::neg(std::move(rhs)) : std::move(rhs));
        }
        return t;
    }

    Term parse_mul() {
        Term t = parse_unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            bool div = cur_.kind == Tok::Slash;
            advance();
            Term rhs = parse_unary();
            t = Term::mul(std::move(t), div ? Term::inv(std::move(rhs)) : std::move(rhs));
        }
        return t;
    }

    Term parse_unary() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return Term::neg(parse_unary());
        }
        return parse_postfix();
    }

    Term parse_postfix() {
        Term t = parse_atom();
        while (cur_.kind == Tok::Caret) {
            advance();
            bool neg = false;
            if (cur_.kind == Tok::Minus) {
                neg = true;
                advance();
            }
            if (cur_.kind != Tok::Int)
                fail("unexpected " + tok_name(cur_.kind) + ", expected integer exponent",
                     {"integer"});
            long k = std::strtol(cur_.text.c_str(), nullptr, 10);
            if (k > kMaxExponent)
                fail("exponent " + cur_.text + " too large", {"integer"});
            advance();
            Term base = neg ? Term::inv(t) : t;
            if (k == 0) {
                t = Term::one();
            } else {
                Term acc = base;
                for (long i = 1; i < k; ++i) acc = Term::mul(acc, base);
                t = acc;
            }
        }
        return t;
    }

    Term parse_atom() {
        switch (cur_.kind) {
        case Tok::Int: {
            long n = std::strtol(cur_.text.c_str(), nullptr, 10);
            if (n > kMaxExponent)
                fail("integer literal " + cur_.text + " too large", {"integer"});
            advance();
            return numeral(n);
        }
        case Tok::LParen: {
            advance();
            Term t = parse_add();
            expect(Tok::RParen);
            return t;
        }
        case Tok::Ident: {
            std::string id = cur_.text;
            advance();
            if (!is_reserved(id)) return Term::var(id);
            expect(Tok::LParen);
            Term arg = parse_add();
            expect(Tok::RParen);
            if (id == "s") return Term::sign(arg);
            if (id == "floor") return Term::floor(arg);
            if (id == "ceil") return Term::ceil(arg);
            if (id == "inv") return Term::inv(arg);
            if (id == "one") return pseudo_unit(arg);
            return pseudo_zero(arg);
        }
        default:
            fail("unexpected " + tok_name(cur_.kind),
                 {"integer", "identifier", "'('", "'-'"});
        }
    }

    Lexer lex_;
    Token cur_;
};

// Precedence levels: 0 add, 1 mul, 2 unary minus, 3 postfix ^-1, 4 atom.
int level(const Term& t) {
    switch (t.op()) {
    case Op::Add: return 0;
    case Op::Mul: return 1;
    case Op::Neg: return 2;
    case Op::Inv: return 3;
    default: return 4;
    }
}

void pr(const Term& t, int need, std::string& out) {
    bool parens = level(t) < need;
    if (parens) out += '(';
    switch (t.op()) {
    case Op::Zero: out += '0'; break;
    case Op::One: out += '1'; break;
    case Op::Var: out += t.var_name(); break;
    case Op::Add:
        pr(t.child(0), 0, out);
        if (t.child(1).op() == Op::Neg) {
            out += " - ";
            pr(t.child(1).child(0), 1, out);
        } else {
            out += " + ";
            pr(t.child(1), 1, out);
        }
        break;
    case Op::Mul:
        pr(t.child(0), 1, out);
        out += " * ";
        pr(t.child(1), 2, out);
        break;
    case Op::Neg:
        out += '-';
        pr(t.child(0), 2, out);
        break;
    case Op::Inv:
        pr(t.child(0), 3, out); // postfix chains: x^-1^-1 needs no parens
        out += "^-1";
        break;
    case Op::Sign:
        out += "s(";
        pr(t.child(0), 0, out);
        out += ')';
        break;
    case Op::Floor:
        out += "floor(";
        pr(t.child(0), 0, out);
        out += ')';
        break;
    case Op::Ceil:
        out += "ceil(";
        pr(t.child(0), 0, out);
        out += ')';
        break;
    }
    if (parens) out += ')';
}

} // namespace

Term parse(std::string_view text) {
    return Parser(text).parse_all();
}

std::string print(const Term& t) {
    std::string out;
    pr(t, 0, out);
    return out;
}

} // namespace meadow
