#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qseries {

// Exact rational coefficients. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the invariant the engine relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "3", "-3", "1/2", "-7/4"
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qseries
