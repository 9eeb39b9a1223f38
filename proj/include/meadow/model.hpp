#ifndef MEADOW_MODEL_HPP
#define MEADOW_MODEL_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "meadow/prime_field.hpp"
#include "meadow/rational.hpp"

namespace meadow {

// Carrier for evaluation: the zero-totalized rationals (with sign, floor,
// ceiling) or a prime field Z_p (ring + inverse only).
class Model {
public:
    enum class Kind { Q0, Zp };

    static Model q0() { return Model(Kind::Q0, 0); }
    static Model zp(std::uint64_t p); // throws NotPrime

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }

    // sign, floor and ceiling are only interpreted over Q0
    bool supports_ordered_ops() const { return kind_ == Kind::Q0; }

    std::string name() const;

private:
    Model(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

using Scalar = std::variant<Rational, Zp>;

std::string to_string(const Scalar& s);

} // namespace meadow

#endif
