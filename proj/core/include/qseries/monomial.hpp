#pragma once

#include <cstdint>
#include <string>

#include "qseries/errors.hpp"

namespace qseries {

using Exp = std::int64_t;

// A signed power of q: sign * q^exponent with sign = +-1. These are the only
// admissible specializations of the parameters x, y, z, a, b, c.
struct QMonomial {
    int sign = 1;
    Exp exponent = 0;

    constexpr QMonomial() = default;
    constexpr QMonomial(int s, Exp e) : sign(s), exponent(e) {}

    static constexpr QMonomial one() { return {1, 0}; }
    static constexpr QMonomial q(Exp e = 1) { return {1, e}; }
    static constexpr QMonomial minus_q(Exp e = 1) { return {-1, e}; }

    constexpr bool is_one() const { return sign == 1 && exponent == 0; }

    constexpr QMonomial operator*(const QMonomial& o) const {
        return {sign * o.sign, exponent + o.exponent};
    }
    constexpr QMonomial operator-() const { return {-sign, exponent}; }
    constexpr QMonomial inverse() const { return {sign, -exponent}; }

    // Integer powers, negative allowed; sign^k only depends on parity.
    constexpr QMonomial pow(Exp k) const {
        return {(k % 2 == 0) ? 1 : sign, exponent * k};
    }

    // The substitution q -> q^m.
    constexpr QMonomial scale_base(Exp m) const { return {sign, exponent * m}; }

    constexpr bool operator==(const QMonomial& o) const = default;

    std::string str() const;

    // Accepts "q^3", "-q^3", "q^-2", "-1", "1", "q", "-q".
    static QMonomial parse(const std::string& text);
};

}  // namespace qseries
