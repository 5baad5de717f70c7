#include <doctest.h>

#include "qseries/theta.hpp"

using namespace qseries;

namespace {

// independent naive product oracle on dense integer vectors
std::vector<long> mul_poly(const std::vector<long>& a, const std::vector<long>& b, int N) {
    std::vector<long> r(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; i + j < N && j < N; ++j)
            if (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size()))
                r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] *
                                                       b[static_cast<std::size_t>(j)];
    return r;
}

std::vector<long> poch_poly(int e, int base, int sign, int N) {
    std::vector<long> r(static_cast<std::size_t>(N), 0);
    r[0] = 1;
    for (int i = 0; e + base * i < N; ++i) {
        std::vector<long> f(static_cast<std::size_t>(N), 0);
        f[0] = 1;
        f[static_cast<std::size_t>(e + base * i)] -= sign;
        r = mul_poly(r, f, N);
    }
    return r;
}

}  // namespace

TEST_CASE("jtheta: vanishing, constants, euler product") {
    CHECK(jtheta(QMonomial{1, 1}, 1, 20).is_zero());
    CHECK(jtheta(QMonomial{1, 3}, 3, 20).is_zero());
    CHECK(jtheta(QMonomial{1, -6}, 2, 20).is_zero());

    // j(-1, q) has constant term 2
    CHECK(jtheta(QMonomial{-1, 0}, 1, 20).coeff(0) == 2);

    // j(q, q^3) = (q;q)_inf ; oracle: multiply the three products directly
    const int N = 8;
    std::vector<long> oracle =
        mul_poly(mul_poly(poch_poly(1, 3, 1, N), poch_poly(2, 3, 1, N), N),
                 poch_poly(3, 3, 1, N), N);
    // pentagonal number theorem start of (q;q)_inf, frozen
    const std::vector<long> frozen = {1, -1, -1, 0, 0, 1, 0, 1};
    CHECK(oracle == frozen);
    LaurentSeries jt = jtheta(QMonomial{1, 1}, 3, N);
    for (Exp e = 0; e < N; ++e) CHECK(jt.coeff(e) == frozen[static_cast<std::size_t>(e)]);
}

TEST_CASE("(j1): argument reduction by powers of the base") {
    const Exp N = 24;
    for (const QMonomial x : {QMonomial{-1, 2}, QMonomial{1, 1}, QMonomial{-1, 0}}) {
        for (Exp base : {1, 2}) {
            for (Exp n = -3; n <= 3; ++n) {
                if (n == 0) continue;
                LaurentSeries lhs = jtheta(QMonomial{x.sign, x.exponent + n * base}, base, N);
                const int psign = (n % 2 == 0) ? 1 : -x.sign;
                const Exp pexp = -base * (n * (n - 1) / 2) - n * x.exponent;
                LaurentSeries rhs = monomial_mul(jtheta(x, base, N - pexp), psign, pexp);
                CHECK(equal_below(lhs, rhs, N));
            }
        }
    }
}

TEST_CASE("(j2): inversion symmetries") {
    const Exp N = 24;
    for (const QMonomial x : {QMonomial{-1, 1}, QMonomial{1, 2}, QMonomial{-1, 3}}) {
        for (Exp base : {1, 3}) {
            if (x.sign == 1 && x.exponent % base == 0) continue;
            LaurentSeries lhs = jtheta(x, base, N);
            LaurentSeries r1 = jtheta(QMonomial{x.sign, base - x.exponent}, base, N);
            CHECK(equal_below(lhs, r1, N));
            LaurentSeries r2 = monomial_mul(jtheta(x.inverse(), base, N + x.exponent + 2),
                                            -x.sign, x.exponent);
            CHECK(equal_below(lhs, truncate(r2, std::min(N, r2.prec())),
                              std::min(N, r2.prec())));
        }
    }
}

TEST_CASE("J constants") {
    const Exp N = 16;
    // J_{1,2} = j(q, q^2) = (q;q^2)_inf^2 (q^2;q^2)_inf, via the independent product oracle
    std::vector<long> oracle = mul_poly(
        mul_poly(poch_poly(1, 2, 1, static_cast<int>(N)), poch_poly(1, 2, 1, static_cast<int>(N)),
                 static_cast<int>(N)),
        poch_poly(2, 2, 1, static_cast<int>(N)), static_cast<int>(N));
    LaurentSeries j12 = J_const(JKind::J_am, 1, 2, N);
    for (Exp e = 0; e < N; ++e) CHECK(j12.coeff(e) == oracle[static_cast<std::size_t>(e)]);

    // Jbar_{0,4} has constant term 2
    CHECK(J_const(JKind::Jbar_am, 0, 4, N).coeff(0) == 2);

    // J_1 = J_{1,3} = j(q,q^3) = (q;q)_inf
    CHECK(equal_below(J_const(JKind::J_m, 0, 1, N), pochhammer_inf(QMonomial{1, 1}, 1, N), N));

    // J_{a,m} with a = 0 mod m vanishes
    CHECK(J_const(JKind::J_am, 4, 2, N).is_zero());
}

TEST_CASE("triple product for z = +-q^j, |j| <= 4") {
    const Exp N = 50;
    for (Exp j = -4; j <= 4; ++j) {
        for (int s : {1, -1}) {
            const QMonomial z{s, j};
            LaurentSeries lhs = theta_series(z, N);
            LaurentSeries rhs = jtheta(QMonomial{-s, j + 1}, 2, N);
            CHECK(equal_below(lhs, rhs, N));
        }
    }
}
