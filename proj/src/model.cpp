#include "meadow/model.hpp"

#include "meadow/errors.hpp"

namespace meadow {

Model Model::zp(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    return Model(Kind::Zp, p);
}

std::string Model::name() const {
    if (kind_ == Kind::Q0) return "Q0";
    return "Z_" + std::to_string(p_);
}

std::string to_string(const Scalar& s) {
    if (std::holds_alternative<Rational>(s)) return std::get<Rational>(s).to_string();
    return std::get<Zp>(s).to_string();
}

} // namespace meadow
