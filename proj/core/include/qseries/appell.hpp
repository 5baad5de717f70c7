#pragma once

#include "qseries/series.hpp"

namespace qseries {

// m(x, q^base, z): the normalized bilateral Appell-Lerch sum
//   (1/j(z,q^base)) * sum_r (-1)^r q^{base*C(r,2)} z^r / (1 - q^{base*(r-1)} x z).
//
// Denominators expand per the geometric rule: 1 - s q^d with d > 0 expands
// geometrically; d < 0 is first rewritten as -s q^{-d} (1 - s q^{-d})^{-1};
// d = 0 is the rational constant 1/(1-s), an error when s = +1.
// `window_scale` widens the bilateral window (used by doubling tests).
LaurentSeries appell_m(const QMonomial& x, Exp base, const QMonomial& z, Exp N,
                       int window_scale = 1);

// The theta-quotient correction in the q -> q^4 rewriting
//   m(x,q,z) = m(-qx^2, q^4, -1) - q^{-1} x m(-q^{-1}x^2, q^4, -1) - xi(x,q,z),
// here with q -> q^base throughout.
LaurentSeries xi(const QMonomial& x, Exp base, const QMonomial& z, Exp N);

// Level-ell Appell sum A_ell(a,b,q) = a^{ell/2} sum_n (-1)^{ell n} q^{ell n(n+1)/2} b^n / (1 - a q^n).
LaurentSeries appell_level(Exp ell, const QMonomial& a, const QMonomial& b, Exp N,
                           int window_scale = 1);

// The bilateral sum above without the a^{ell/2} prefactor (which is not a
// q-monomial for odd ell and negative a).
LaurentSeries appell_level_sum(Exp ell, const QMonomial& a, const QMonomial& b, Exp N,
                               int window_scale = 1);

// Checks sum_{n in Z} (-1)^n q^{C(n+1,2)} / (1 - x q^n) = (q)_inf^3 / j(x,q) below N.
bool partial_fraction_check(const QMonomial& x, Exp N);

// The two sides of the partial-fraction identity (exposed for tests/registry).
LaurentSeries partial_fraction_lhs(const QMonomial& x, Exp N, int window_scale = 1);
LaurentSeries partial_fraction_rhs(const QMonomial& x, Exp N);

namespace detail {
// Series of 1/(1 - s q^d) per the geometric expansion rule.
LaurentSeries geometric_inverse(int s, Exp d, Exp N);
}  // namespace detail

}  // namespace qseries
