#include "qseries/appell.hpp"

#include <cstdlib>

#include "qseries/theta.hpp"

namespace qseries {

namespace detail {

LaurentSeries geometric_inverse(int s, Exp d, Exp N) {
    if (d == 0) {
        if (s == 1) throw PolarParametersError("vanishing denominator 1 - q^0");
        return LaurentSeries::constant(rational(1, 2), N);
    }
    if (d < 0) {
        // 1/(1 - s q^d) = -s q^{-d} / (1 - s q^{-d})
        return monomial_mul(geometric_inverse(s, -d, N + d), -s, -d);
    }
    if (N <= 0) return LaurentSeries::zero(N);
    std::vector<Rational> cs(static_cast<std::size_t>(N));
    int t = 1;
    for (Exp e = 0; e < N; e += d) {
        cs[static_cast<std::size_t>(e)] = rational(t);
        t *= s;
    }
    return LaurentSeries::from_coeffs(0, std::move(cs), N);
}

namespace {

Exp binom2(Exp n) { return n * (n - 1) / 2; }

// Bilateral sum of monomial_sign,monomial_exp(r) / (1 - den_sign q^{den_exp(r)}),
// with the window chosen so omitted terms sit at exponent >= N.
template <typename NumSign, typename NumExp, typename DenExp>
LaurentSeries bilateral_sum(int den_sign, NumSign num_sign, NumExp num_exp, DenExp den_exp,
                            Exp quad_coeff, Exp lin_bound, Exp slack, Exp N, int window_scale) {
    auto min_bound = [&](Exp r) { return quad_coeff * binom2(r) - lin_bound * std::llabs(r) - slack; };
    Exp rmax = 1, rmin = -1;
    while (min_bound(rmax) < N) ++rmax;
    while (min_bound(rmin) < N) --rmin;
    rmax *= window_scale;
    rmin *= window_scale;
    LaurentSeries total = LaurentSeries::zero(N);
    for (Exp r = rmin; r <= rmax; ++r) {
        const Exp d = den_exp(r);
        if (d == 0 && den_sign == 1)
            throw PolarParametersError("bilateral sum: denominator vanishes identically");
        LaurentSeries term = geometric_inverse(den_sign, d, N - std::min<Exp>(num_exp(r), 0));
        term = monomial_mul(term, num_sign(r), num_exp(r));
        total = add(total, truncate(term, std::min(term.prec(), total.prec())));
    }
    return total;
}

}  // namespace
}  // namespace detail

LaurentSeries appell_m(const QMonomial& x, Exp base, const QMonomial& z, Exp N,
                       int window_scale) {
    if (base < 1) throw BadParamsError("appell_m: base must be >= 1");
    const int s = x.sign * z.sign;
    if (s == 1) {
        // polar iff base*(r-1) + xe + ze = 0 for some integer r
        const Exp t = x.exponent + z.exponent;
        if ((t % base + base) % base == 0)
            throw PolarParametersError("appell_m: denominator vanishes at some r");
    }
    return eval_to_prec(N, 2 * base + std::llabs(x.exponent) + std::llabs(z.exponent) + 8,
                        [&](Exp P) {
        LaurentSeries jz = jtheta(z, base, P);
        if (jz.is_zero()) throw ZeroDivisorError("appell_m: j(z, q^base) = 0");
        const Exp slack = std::llabs(x.exponent) + std::llabs(z.exponent) + base;
        LaurentSeries sum = detail::bilateral_sum(
            s, [&](Exp r) { return (r % 2 == 0) ? 1 : -z.sign; },
            [&](Exp r) { return base * detail::binom2(r) + r * z.exponent; },
            [&](Exp r) { return base * (r - 1) + x.exponent + z.exponent; }, base,
            std::llabs(z.exponent), slack, P, window_scale);
        return divide(sum, jz);
    });
}

LaurentSeries xi(const QMonomial& x, Exp base, const QMonomial& z, Exp N) {
    const Exp M = base;
    return eval_to_prec(
        N, 8 * M + 6 * std::llabs(x.exponent) + 6 * std::llabs(z.exponent) + 16, [&](Exp P) {
            const QMonomial xz = x * z;
            const QMonomial zx = z * x.inverse();
            const QMonomial x2 = x.pow(2);
            const QMonomial z2 = z.pow(2);
            LaurentSeries t1 =
                divide(mul(jtheta(-(QMonomial{1, 2 * M} * x2 * z2), 4 * M, P),
                           jtheta(zx, 2 * M, P)),
                       jtheta(QMonomial{1, M} * xz, 2 * M, P));
            LaurentSeries t2 =
                divide(mul(jtheta(-(x2 * z2), 4 * M, P),
                           jtheta(QMonomial{1, M} * zx, 2 * M, P)),
                       jtheta(xz, 2 * M, P));
            t2 = monomial_mul(t2, x.sign, -x.exponent);
            LaurentSeries j2 = J_const(JKind::J_m, 0, 2 * M, P);
            LaurentSeries num = mul(mul(j2, mul(j2, j2)), add(t1, t2));
            LaurentSeries den = mul(jtheta(z, M, P),
                                    mul(J_const(JKind::Jbar_am, 0, 4 * M, P),
                                        jtheta(QMonomial{1, M} * x2, 2 * M, P)));
            return divide(num, den);
        });
}

LaurentSeries appell_level_sum(Exp ell, const QMonomial& a, const QMonomial& b, Exp N,
                               int window_scale) {
    if (ell < 1) throw BadParamsError("appell_level: level must be >= 1");
    return eval_to_prec(N, std::llabs(a.exponent) + std::llabs(b.exponent) + ell + 8,
                        [&](Exp P) {
        const Exp slack = std::llabs(a.exponent) + std::llabs(b.exponent) + ell + 2;
        return detail::bilateral_sum(
            a.sign,
            [&](Exp n) {
                int sg = (n % 2 == 0) ? 1 : b.sign;
                if (ell % 2 != 0 && n % 2 != 0) sg = -sg;
                return sg;
            },
            [&](Exp n) { return ell * (n * (n + 1) / 2) + n * b.exponent; },
            [&](Exp n) { return a.exponent + n; }, ell, std::llabs(b.exponent) + ell, slack, P,
            window_scale);
    });
}

LaurentSeries appell_level(Exp ell, const QMonomial& a, const QMonomial& b, Exp N,
                           int window_scale) {
    if (ell < 1) throw BadParamsError("appell_level: level must be >= 1");
    QMonomial pref;
    if (ell % 2 == 0) {
        pref = a.pow(ell / 2);
    } else {
        if ((ell * a.exponent) % 2 != 0 || a.sign != 1)
            throw NonIntegerExponentError("appell_level: a^{ell/2} is not a monomial");
        pref = QMonomial{1, a.exponent * ell / 2};
    }
    LaurentSeries sum = appell_level_sum(ell, a, b, N - std::min<Exp>(pref.exponent, 0),
                                         window_scale);
    return truncate(monomial_mul(sum, pref.sign, pref.exponent), N);
}

LaurentSeries partial_fraction_lhs(const QMonomial& x, Exp N, int window_scale) {
    if (x.sign == 1)
        throw PolarParametersError("partial fraction: denominator vanishes at n = -exponent");
    return eval_to_prec(N, std::llabs(x.exponent) + 8, [&](Exp P) {
        const Exp slack = std::llabs(x.exponent) + 3;
        return detail::bilateral_sum(
            x.sign, [](Exp n) { return (n % 2 == 0) ? 1 : -1; },
            [](Exp n) { return n * (n + 1) / 2; }, [&](Exp n) { return x.exponent + n; }, 1, 1,
            slack, P, window_scale);
    });
}

LaurentSeries partial_fraction_rhs(const QMonomial& x, Exp N) {
    return eval_to_prec(N, 2 * std::llabs(x.exponent) + 8, [&](Exp P) {
        LaurentSeries j1 = pochhammer_inf(QMonomial::q(), 1, P);
        return divide(mul(j1, mul(j1, j1)), jtheta(x, 1, P));
    });
}

bool partial_fraction_check(const QMonomial& x, Exp N) {
    return equal_below(partial_fraction_lhs(x, N), partial_fraction_rhs(x, N), N);
}

}  // namespace qseries
