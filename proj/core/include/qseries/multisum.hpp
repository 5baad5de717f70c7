#pragma once

#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// B_k(n_k, ..., n_1; q^{base_mult}): the product of sign, q-power, numerator
// Pochhammers and denominator Pochhammers at geometrically growing bases.
// `tuple` holds (n_k, n_{k-1}, ..., n_1), non-increasing, k >= 3 entries.
LaurentSeries b_factor(Exp k, const std::vector<Exp>& tuple, Exp base_mult, Exp N);

// sum over n_k >= n_{k-1} >= ... >= n_1 >= 0 of B_k with fixed outermost n_k.
LaurentSeries b_inner_sum(Exp k, Exp n_k, Exp base_mult, Exp N);

// The four multisum families of mock theta functions (i = 1..4), k >= 3.
// `bound_scale` widens the certified outer enumeration bound (doubling tests).
LaurentSeries r_series(int i, Exp k, Exp N, int bound_scale = 1);

enum class ClassicalName { F1, foq, nu, phi, mu };
LaurentSeries classical(ClassicalName name, Exp N);

enum class MixedName { B1, B2 };
LaurentSeries mixed_multisum(MixedName name, Exp k, Exp N, int bound_scale = 1);

enum class Side { lhs, rhs };

// Andrews-Gordon: (k-1)-fold multisum vs the triple-product quotient, k >= 2.
LaurentSeries andrews_gordon(Exp k, Side side, Exp N, int bound_scale = 1);

// Rogers-Ramanujan at s = 0 or 1.
LaurentSeries rogers_ramanujan(int s, Side side, Exp N);

// (2/(q)_inf) sum_{n in Z} q^{k n^2 + C(n+1,2)} (-1)^n / (1 + q^n).
LaurentSeries bilateral_f_sum(Exp k, Exp N, int window_scale = 1);

}  // namespace qseries
