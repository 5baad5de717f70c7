#pragma once

#include "qseries/series.hpp"

namespace qseries {

// j(x, q^base) = (x; q^base)_inf (q^base/x; q^base)_inf (q^base; q^base)_inf.
//
// Arbitrary monomial arguments are first reduced into the convergent range
// with j(q^{n*base} x, q^base) = (-1)^n q^{-base*C(n,2)} x^{-n} j(x, q^base).
// Returns the exact zero series when x = +q^{k*base}.
LaurentSeries jtheta(const QMonomial& x, Exp base, Exp N);

// j factored as prefactor * unit with unit.min_exp() == 0. `zero` marks
// arguments +q^{k*base}, where j vanishes identically (unit is then unused).
struct JThetaParts {
    bool zero = false;
    QMonomial prefactor;  // the (j1)-normalization monomial
};

// Prefactor and vanishing flag alone; no series work.
JThetaParts jtheta_parts(const QMonomial& x, Exp base);

// The unit factor at relative precision relN (coefficients of q^0..q^{relN-1});
// requires that j does not vanish at x. Results are memoized.
LaurentSeries jtheta_unit(const QMonomial& x, Exp base, Exp relN);

enum class JKind { J_m, J_am, Jbar_am };

// J_m = J_{m,3m}, J_{a,m} = j(q^a, q^m), Jbar_{a,m} = j(-q^a, q^m).
// The `a` argument is ignored for J_m.
LaurentSeries J_const(JKind kind, Exp a, Exp m, Exp N);

// sum_{n in Z} z^n q^{n^2} truncated at N (left side of the triple product).
LaurentSeries theta_series(const QMonomial& z, Exp N);

}  // namespace qseries
