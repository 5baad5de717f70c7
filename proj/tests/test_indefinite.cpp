#include <doctest.h>

#include "qseries/appell.hpp"
#include "qseries/indefinite.hpp"
#include "qseries/multisum.hpp"
#include "qseries/theta.hpp"

using namespace qseries;

TEST_CASE("indefinite_f basics") {
    // constant term of f_{1,3,1}(q,q,q): only (r,s) = (0,0) sits at exponent 0
    LaurentSeries f = indefinite_f(FabcParams(1, 3, 1, QMonomial::q(), QMonomial::q(), 1), 20);
    CHECK(f.min_exp() == 0);
    CHECK(f.coeff(0) == 1);

    CHECK_THROWS_AS(FabcParams(1, 1, 1, QMonomial::q(), QMonomial::q(), 1), BadParamsError);
}

TEST_CASE("phi(q) = ((-q)_inf/(q)_inf) f_{2,3,2}(q^2,q^2,q)") {
    const Exp N = 30;
    LaurentSeries phi = classical(ClassicalName::phi, N);
    LaurentSeries rhs = eval_to_prec(N, 8, [&](Exp P) {
        LaurentSeries pre = divide(pochhammer_inf(QMonomial{-1, 1}, 1, P),
                                   pochhammer_inf(QMonomial{1, 1}, 1, P));
        return mul(pre, indefinite_f(FabcParams(2, 3, 2, QMonomial{1, 2}, QMonomial{1, 2}, 1), P));
    });
    CHECK(equal_below(phi, rhs, N));
}

TEST_CASE("f_{1,5,1}(q^3,q^3,q^2) matches the (n,j) enumeration") {
    // oracle: the bilateralized double sum with n == j (mod 2); see the k=3
    // instance, exponent 3n^2 + 2n - 2j^2 after folding n -> -n-1
    const Exp N = 40;
    std::vector<Rational> cs(static_cast<std::size_t>(N + 60));
    const Exp lo = -30;
    auto put = [&](Exp e, int sgn) {
        if (e < N) cs[static_cast<std::size_t>(e - lo)] += rational(sgn);
    };
    // n >= 0: the j = +-n edge gives the minimal exponent n^2 + 2n, so n <= sqrt(N)+3 covers N
    Exp nb = 0;
    while (nb * nb + 2 * nb < N + 4) ++nb;
    for (Exp n = 0; n <= nb; ++n)
        for (Exp j = -n; j <= n; ++j) {
            if ((n - j) % 2 != 0) continue;
            put(3 * n * n + 2 * n - 2 * j * j, (j % 2 == 0) ? 1 : -1);
        }
    // n < 0 (after n -> -n-1 folding): minimal exponent n^2 - 2n - 2
    Exp nc = -1;
    while (nc * nc - 2 * nc - 2 < N + 4) --nc;
    for (Exp n = -1; n >= nc; --n)
        for (Exp j = n + 1; j <= -n - 1; ++j) {
            if ((n - j) % 2 != 0) continue;
            put(3 * n * n + 2 * n - 2 * j * j, (j % 2 == 0) ? -1 : 1);
        }
    LaurentSeries oracle = LaurentSeries::from_coeffs(lo, std::move(cs), N);
    LaurentSeries f = indefinite_f(FabcParams(1, 5, 1, QMonomial{1, 3}, QMonomial{1, 3}, 2), N);
    CHECK(equal_below(f, oracle, N));
}

TEST_CASE("enumeration bound: doubling the window changes nothing") {
    for (auto p : {FabcParams(1, 5, 1, QMonomial{1, 3}, QMonomial{1, 3}, 2),
                   FabcParams(2, 3, 2, QMonomial{1, 2}, QMonomial{1, 2}, 1),
                   FabcParams(3, 11, 3, QMonomial{1, 4}, QMonomial{1, 4}, 1),
                   FabcParams(1, 3, 1, QMonomial{-1, -2}, QMonomial{1, 1}, 1)}) {
        CHECK(indefinite_f(p, 30, 1) == indefinite_f(p, 30, 2));
    }
}

TEST_CASE("g_abc structure at a = c = 1") {
    // single t = 0 term in both sums: g = j(x,q) m(...) + j(y,q) m(...)
    const Exp N = 25;
    const QMonomial x{1, 3}, y{1, 3};
    const Exp b = 5, D = 25 - 1;
    LaurentSeries g = g_abc(1, b, 1, x, y, 2, QMonomial{-1, 0}, QMonomial{-1, 0}, N);
    LaurentSeries expect = eval_to_prec(N, 16, [&](Exp P) {
        const QMonomial m_arg = QMonomial{-1, 2 * (b + 1) * b / 2 - 2} * (-y) * (-x).pow(b).inverse();
        LaurentSeries t0 = eval_to_prec(P, 16, [&](Exp PP) {
            LaurentSeries th = jtheta(x, 2, PP);
            return mul(th, appell_m(m_arg, 2 * D, QMonomial{-1, 0},
                                    PP - std::min<Exp>(th.min_exp(), 0)));
        });
        return scalar_mul(t0, rational(2));  // x = y makes both halves equal
    });
    CHECK(equal_below(g, expect, N));
}

TEST_CASE("theta_np contracts") {
    CHECK_THROWS_AS((void)theta_np(2, 3, QMonomial{1, 1}, QMonomial{1, 1}, 1, 10),
                    NonIntegerExponentError);
    CHECK_THROWS_AS((void)theta_np(3, 6, QMonomial{1, 1}, QMonomial{1, 1}, 1, 10),
                    BadParamsError);
    // p = 1 degenerates to a single (r*, s*) = (0,0) term and stays finite
    LaurentSeries t = theta_np(1, 1, QMonomial{1, 1}, QMonomial{-1, 2}, 1, 12);
    CHECK(t.prec() == 12);
    // (x, y) = (q^2, q^5) puts a denominator theta at a lattice zero
    CHECK_THROWS_AS((void)theta_np(1, 2, QMonomial{1, 2}, QMonomial{1, 5}, 1, 12),
                    ZeroDivisorError);
}

TEST_CASE("theta_np: f - g oracle at (n,p) = (1,2)") {
    // Theorem 2.1 rearranged: theta_{1,2}(x,y,q) = f_{1,3,1} - g_{1,3,1}
    const QMonomial x{1, 3}, y{-1, 2};
    const Exp N = 25;
    LaurentSeries f = indefinite_f(FabcParams(1, 3, 1, x, y, 1), N);
    LaurentSeries g = g_abc(1, 3, 1, x, y, 1, QMonomial{-1, 0}, QMonomial{-1, 0}, N);
    LaurentSeries th = theta_np(1, 2, x, y, 1, N);
    CHECK(equal_below(th, sub(f, g), N));
}

TEST_CASE("g_{1,5,1} closed forms at the k=3 instances") {
    // Both t-sums coincide for x = y, and the single theta normalizes onto
    // j(q,q^2): g_{1,5,1}(q^3,q^3,q^2,-1,-1) = -2 q^{-1} j(q,q^2) m(-q^16,q^48,-1)
    const Exp N = 30;
    {
        LaurentSeries g = g_abc(1, 5, 1, QMonomial{1, 3}, QMonomial{1, 3}, 2, QMonomial{-1, 0},
                                QMonomial{-1, 0}, N);
        LaurentSeries expect = eval_to_prec(N, 16, [&](Exp P) {
            LaurentSeries t = mul(jtheta(QMonomial{1, 1}, 2, P + 1),
                                  appell_m(QMonomial{-1, 16}, 48, QMonomial{-1, 0}, P + 1));
            return scalar_mul(monomial_mul(t, 1, -1), rational(-2));
        });
        CHECK(equal_below(g, expect, N));
    }
    // and g_{1,5,1}(q^9,q^9,q^2,-1,-1) = 2 q^{-16} j(q,q^2) m(-q^{-8},q^48,-1)
    {
        LaurentSeries g = g_abc(1, 5, 1, QMonomial{1, 9}, QMonomial{1, 9}, 2, QMonomial{-1, 0},
                                QMonomial{-1, 0}, N);
        LaurentSeries expect = eval_to_prec(N, 24, [&](Exp P) {
            LaurentSeries t = mul(jtheta(QMonomial{1, 1}, 2, P + 16),
                                  appell_m(QMonomial{-1, -8}, 48, QMonomial{-1, 0}, P + 16));
            return scalar_mul(monomial_mul(t, 1, -16), rational(2));
        });
        CHECK(equal_below(g, expect, N));
    }
}

TEST_CASE("hm_check at the four named instances") {
    CHECK(hm_check(1, 2, QMonomial{1, 3}, QMonomial{1, 3}, 2, 40));
    CHECK(hm_check(1, 4, QMonomial{1, 5}, QMonomial{1, 5}, 2, 40));
    CHECK(hm_check(1, 8, QMonomial{1, 5}, QMonomial{1, 5}, 2, 40));
    CHECK(hm_check(3, 8, QMonomial{1, 4}, QMonomial{1, 4}, 1, 30));
}

TEST_CASE("f transformations") {
    CHECK(f_transform_check(FTransformKind::inversion,
                            FabcParams(1, 3, 1, QMonomial{1, 1}, QMonomial{1, 1}, 1), 30));
    CHECK(f_transform_check(FTransformKind::quadruple,
                            FabcParams(1, 3, 1, QMonomial{1, 1}, QMonomial{1, 1}, 1), 30));
    // penultimate step of the R3 proof at k = 3: x = q^3, y = -q^3, f_{1,5,1}
    CHECK(f_transform_check(FTransformKind::quadruple,
                            FabcParams(1, 5, 1, QMonomial{1, 3}, QMonomial{-1, 3}, 1), 30));
}
