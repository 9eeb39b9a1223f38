#ifndef MEADOW_SMF_HPP
#define MEADOW_SMF_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "meadow/poly.hpp"
#include "meadow/term.hpp"

namespace meadow {

// Standard meadow form. Level 0 is a ratio of polynomials s/t, denoting
// s * t^-1. Level n+1 is a conditional  0_g * P + 1_g * Q  that selects P
// where the guard polynomial g vanishes and Q elsewhere; it renders as
// [g == 0 ? P : Q]. Nodes are immutable and shared; level and node count
// are cached so budget checks stay O(1).
class Smf {
public:
    static Smf ratio(Polynomial num, Polynomial den);
    static Smf split(Polynomial guard, Smf on_zero, Smf on_unit);

    bool is_ratio() const { return node_->ratio; }
    bool is_split() const { return !node_->ratio; }

    const Polynomial& num() const;   // ratio only
    const Polynomial& den() const;   // ratio only
    const Polynomial& guard() const; // split only
    Smf on_zero() const;             // split only
    Smf on_unit() const;             // split only

    int level() const { return node_->level; }
    std::size_t node_count() const { return node_->count; }

private:
    struct Node {
        bool ratio;
        Polynomial a; // num or guard
        Polynomial b; // den (ratio only)
        std::shared_ptr<const Node> zero, unit;
        int level;
        std::size_t count;
    };

    explicit Smf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

inline constexpr std::size_t kNoSmfCap = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultSmfCap = 1000000;

// Closure combinators. Each one throws SizeBudgetExceeded as soon as any
// constructed form would pass `cap` nodes, before the blowup materializes.
Smf smf_add(const Smf& a, const Smf& b, std::size_t cap = kNoSmfCap);
Smf smf_mul(const Smf& a, const Smf& b, std::size_t cap = kNoSmfCap);
Smf smf_neg(const Smf& a, std::size_t cap = kNoSmfCap);
Smf smf_inv(const Smf& a, std::size_t cap = kNoSmfCap);

// Rewrites a ring-signature term (0, 1, variables, +, *, -, ^-1) into
// standard meadow form. Sign/floor/ceiling nodes raise NotSigmaM with the
// offending path.
Smf normalize(const Term& t, std::size_t cap = kDefaultSmfCap);

// Evaluates lazily: only the branch selected by each guard is visited.
Rational smf_eval(const Smf& f, const std::map<std::string, Rational>& env);

std::set<std::string> smf_vars(const Smf& f);

// "[g == 0 ? P : Q]" for splits, "(num)/(den)" for ratios.
std::string render(const Smf& f);

} // namespace meadow

#endif
