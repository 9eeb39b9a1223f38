#ifndef MEADOW_SYNTAX_HPP
#define MEADOW_SYNTAX_HPP

#include <string>
#include <string_view>
#include <vector>

#include "meadow/errors.hpp"
#include "meadow/term.hpp"

namespace meadow {

struct SyntaxError : Error {
    int line;
    int column;
    std::vector<std::string> expected;
    SyntaxError(int line_, int column_, const std::string& what,
                std::vector<std::string> expected_ = {});
};

// Concrete syntax:
//   expr    := add
//   add     := mul (("+" | "-") mul)*
//   mul     := unary (("*" | "/") unary)*
//   unary   := "-" unary | postfix
//   postfix := atom ("^" "-"? integer)*
//   atom    := integer | ident | "(" expr ")" | "s(" expr ")" | "floor(" expr ")"
//            | "ceil(" expr ")" | "one(" expr ")" | "zero(" expr ")" | "inv(" expr ")"
// a - b and a / b abbreviate a + -b and a * b^-1; x^-1 is inv(x); x^k for k >= 2
// expands to a left-nested product, x^1 to x, x^0 to 1, x^-k to inv(x)^k.
// "s", "floor", "ceil", "one", "zero", "inv" are reserved and never variables.
Term parse(std::string_view text); // throws SyntaxError

// Minimal-parenthesis rendering; parse(print(t)) == t for every term.
std::string print(const Term& t);

} // namespace meadow

#endif
