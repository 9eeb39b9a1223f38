#ifndef MEADOW_ERRORS_HPP
#define MEADOW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace meadow {

// Child-index path into a term; empty path = root.
using Path = std::vector<int>;

std::string path_to_string(const Path& p);

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnboundVariable : Error {
    std::string name;
    explicit UnboundVariable(const std::string& var)
        : Error("unbound variable: " + var), name(var) {}
};

struct UnsupportedSymbol : Error {
    std::string symbol;
    UnsupportedSymbol(const std::string& sym, const std::string& model)
        : Error("symbol " + sym + " is not supported under " + model), symbol(sym) {}
};

struct InvalidPath : Error {
    Path path;
    explicit InvalidPath(const Path& p)
        : Error("path " + path_to_string(p) + " does not address a subterm"), path(p) {}
};

struct NotPrime : Error {
    explicit NotPrime(unsigned long long p)
        : Error("modulus " + std::to_string(p) + " is not a prime") {}
};

struct NotAPolynomial : Error {
    Path path;
    NotAPolynomial(const std::string& node, const Path& p)
        : Error("term is not a polynomial: " + node + " at path " + path_to_string(p)),
          path(p) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has an infinite zero set") {}
};

struct Multivariate : Error {
    explicit Multivariate(const std::string& what)
        : Error("operation requires at most one variable: " + what) {}
};

struct NotSigmaM : Error {
    Path path;
    NotSigmaM(const std::string& node, const Path& p)
        : Error("term is outside the inverse-ring fragment: " + node + " at path " +
                path_to_string(p)),
          path(p) {}
};

struct SizeBudgetExceeded : Error {
    std::size_t cap;
    SizeBudgetExceeded(std::size_t cap_, std::size_t reached)
        : Error("normal form exceeds the size cap (" + std::to_string(reached) + " > " +
                std::to_string(cap_) + " nodes)"),
          cap(cap_) {}
};

struct UnknownRule : Error {
    std::string rule;
    explicit UnknownRule(const std::string& name)
        : Error("unknown rule or lemma: " + name), rule(name) {}
};

struct RedexMismatch : Error {
    RedexMismatch(const std::string& expected, const std::string& found, const Path& p)
        : Error("redex mismatch at path " + path_to_string(p) + ": expected `" + expected +
                "`, found `" + found + "`") {}
};

struct DuplicateRule : Error {
    explicit DuplicateRule(const std::string& name)
        : Error("rule name already registered: " + name) {}
};

} // namespace meadow

#endif
