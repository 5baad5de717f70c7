#include "qseries/indefinite.hpp"

#include <cstdlib>
#include <numeric>
#include <vector>

#include "qseries/appell.hpp"
#include "qseries/theta.hpp"

namespace qseries {

namespace {

Exp binom2(Exp n) { return n * (n - 1) / 2; }

// One quadrant u,v >= 0 of a quadratic exponent
//   E(u,v) = (A2 u^2 + B2 uv + C2 v^2 + D2 u + E2 v + F2) / 2
// with A2, B2, C2 > 0. Collects (exponent, +-1) contributions below N.
template <typename SignFn>
void enumerate_quadrant(Exp A2, Exp B2, Exp C2, Exp D2, Exp E2, Exp F2, Exp N, int window_scale,
                        SignFn sign, std::vector<std::pair<Exp, int>>& out) {
    auto E = [&](Exp u, Exp v) {
        return (A2 * u * u + B2 * u * v + C2 * v * v + D2 * u + E2 * v + F2) / 2;
    };
    Exp u_safe = 0;
    while (B2 * u_safe + E2 < 0 || 2 * A2 * u_safe + D2 + A2 < 0) ++u_safe;
    u_safe = u_safe * window_scale + window_scale;
    for (Exp u = 0;; ++u) {
        if (u >= u_safe && E(u, 0) >= N) break;
        Exp v_safe = 0;
        while (C2 * (2 * v_safe + 1) + B2 * u + E2 < 0) ++v_safe;
        v_safe = v_safe * window_scale + window_scale;
        for (Exp v = 0;; ++v) {
            if (v >= v_safe && E(u, v) >= N) break;
            const Exp e = E(u, v);
            if (e < N) out.emplace_back(e, sign(u, v));
        }
    }
}

}  // namespace

LaurentSeries indefinite_f(const FabcParams& p, Exp N, int window_scale) {
    const Exp M = p.base;
    const Exp xe = p.x.exponent, ye = p.y.exponent;
    std::vector<std::pair<Exp, int>> terms;
    // r = u >= 0, s = v >= 0
    enumerate_quadrant(
        M * p.a, 2 * M * p.b, M * p.c, 2 * xe - M * p.a, 2 * ye - M * p.c, 0, N, window_scale,
        [&](Exp u, Exp v) {
            int sg = ((u + v) % 2 == 0) ? 1 : -1;
            if (u % 2 != 0 && p.x.sign < 0) sg = -sg;
            if (v % 2 != 0 && p.y.sign < 0) sg = -sg;
            return sg;
        },
        terms);
    // r = -u-1, s = -v-1 (both negative), quadrant weight -1
    enumerate_quadrant(
        M * p.a, 2 * M * p.b, M * p.c, M * (3 * p.a + 2 * p.b) - 2 * xe,
        M * (3 * p.c + 2 * p.b) - 2 * ye, 2 * M * (p.a + p.b + p.c) - 2 * xe - 2 * ye, N,
        window_scale,
        [&](Exp u, Exp v) {
            int sg = ((u + v) % 2 == 0) ? -1 : 1;  // (-1)^{r+s} = (-1)^{u+v}, quadrant sign -1
            if (u % 2 == 0 && p.x.sign < 0) sg = -sg;  // r = -u-1 odd iff u even
            if (v % 2 == 0 && p.y.sign < 0) sg = -sg;
            return sg;
        },
        terms);
    if (terms.empty()) return LaurentSeries::zero(N);
    Exp lo = N;
    for (const auto& [e, s] : terms) lo = std::min(lo, e);
    std::vector<Rational> cs(static_cast<std::size_t>(N - lo));
    for (const auto& [e, s] : terms) cs[static_cast<std::size_t>(e - lo)] += rational(s);
    return LaurentSeries::from_coeffs(lo, std::move(cs), N);
}

LaurentSeries g_abc(Exp a, Exp b, Exp c, const QMonomial& x, const QMonomial& y, Exp base,
                    const QMonomial& z1, const QMonomial& z0, Exp N) {
    if (a < 1 || c < 1 || b < 1) throw BadParamsError("g_abc: a, b, c must be positive");
    const Exp M = base;
    const Exp D = b * b - a * c;
    if (D <= 0) throw BadParamsError("g_abc: requires b^2 > ac");
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries total = LaurentSeries::zero(P);
        auto half = [&](Exp aa, Exp cc, const QMonomial& xx, const QMonomial& yy,
                        const QMonomial& zz) {
            for (Exp t = 0; t < aa; ++t) {
                const QMonomial pref = (-yy).pow(t) * QMonomial{1, M * cc * binom2(t)};
                const QMonomial jarg = QMonomial{1, M * b * t} * xx;
                const JThetaParts parts = jtheta_parts(jarg, M * aa);
                if (parts.zero) continue;
                const QMonomial shift = pref * parts.prefactor;
                if (shift.exponent >= P) continue;
                const QMonomial marg =
                    QMonomial{-1,
                              M * (aa * binom2(b + 1) - cc * binom2(aa + 1) - t * D)} *
                    (-yy).pow(aa) * (-xx).pow(b).inverse();
                const Exp relP = P - shift.exponent;
                LaurentSeries mm = appell_m(marg, M * aa * D, zz, relP);
                LaurentSeries term = mul(jtheta_unit(jarg, M * aa, relP - std::min<Exp>(mm.min_exp(), 0)), mm);
                total = add(total, truncate(monomial_mul(term, shift),
                                            std::min(P, term.prec() + shift.exponent)));
            }
        };
        half(a, c, x, y, z0);
        half(c, a, y, x, z1);
        return total;
    });
}

LaurentSeries theta_np(Exp n, Exp p, const QMonomial& x, const QMonomial& y, Exp base, Exp N) {
    if (n < 1 || p < 1) throw BadParamsError("theta_np: n and p must be positive");
    if (n % 2 == 0)
        throw NonIntegerExponentError("theta_np: even n needs half-integer powers");
    if (std::gcd(static_cast<long long>(n), static_cast<long long>(p)) != 1)
        throw BadParamsError("theta_np: n and p must be coprime");
    const Exp M = base;
    const Exp h = (n - 1) / 2;
    const Exp m1 = p * p * (2 * n + p);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries total = LaurentSeries::zero(P);
        for (Exp r = 0; r < p; ++r) {
            for (Exp s = 0; s < p; ++s) {
                const Exp R = r - h, S = s + h + 1;
                const Exp ex = n * binom2(R) + (n + p) * R * S + n * binom2(S);
                const QMonomial mono = (-x).pow(R) * (-y).pow(S) * QMonomial{1, M * ex};

                const QMonomial a_num1 =
                    QMonomial{-1, M * n * p * (s - r)} * x.pow(n) * y.pow(n).inverse();
                const QMonomial a_num2 =
                    QMonomial{1, M * (p * (2 * n + p) * (r + s) + p * (n + p))} * x.pow(p) *
                    y.pow(p);
                const QMonomial a_den1 =
                    QMonomial{1, M * (p * (2 * n + p) * r + p * (n + p) / 2)} *
                    (-y).pow(n + p) * (-x).pow(n).inverse();
                const QMonomial a_den2 =
                    QMonomial{1, M * (p * (2 * n + p) * s + p * (n + p) / 2)} *
                    (-x).pow(n + p) * (-y).pow(n).inverse();

                const Exp b_num1 = M * n * p * p;
                const Exp b_big = M * m1;

                const JThetaParts p_num1 = jtheta_parts(a_num1, b_num1);
                const JThetaParts p_num2 = jtheta_parts(a_num2, b_big);
                if (p_num1.zero || p_num2.zero) continue;
                const JThetaParts p_den1 = jtheta_parts(a_den1, b_big);
                const JThetaParts p_den2 = jtheta_parts(a_den2, b_big);
                if (p_den1.zero || p_den2.zero)
                    throw ZeroDivisorError("theta_np: denominator theta vanishes");

                const QMonomial shift = mono * p_num1.prefactor * p_num2.prefactor *
                                        p_den1.prefactor.inverse() * p_den2.prefactor.inverse();
                if (shift.exponent >= P) continue;
                const Exp relN = P - shift.exponent;

                LaurentSeries u = jtheta_unit(QMonomial{1, M * m1}, 3 * M * m1, relN);  // J_{m1}
                u = mul(u, mul(u, u));
                u = mul(u, mul(jtheta_unit(a_num1, b_num1, relN),
                               jtheta_unit(a_num2, b_big, relN)));
                u = mul(u, invert(mul(jtheta_unit(a_den1, b_big, relN),
                                      jtheta_unit(a_den2, b_big, relN))));
                total = add(total, truncate(monomial_mul(u, shift), P));
            }
        }
        const QMonomial jbar_arg{-1, 0};
        return divide(total, jtheta_unit(jbar_arg, M * n * p * (2 * n + p), P));
    });
}

bool hm_check(Exp n, Exp p, const QMonomial& x, const QMonomial& y, Exp base, Exp N) {
    LaurentSeries f = indefinite_f(FabcParams(n, n + p, n, x, y, base), N);
    LaurentSeries g = g_abc(n, n + p, n, x, y, base, QMonomial{-1, 0}, QMonomial{-1, 0}, N);
    LaurentSeries th = theta_np(n, p, x, y, base, N);
    return equal_below(f, add(g, th), N);
}

LaurentSeries f_transform_rhs(FTransformKind kind, const FabcParams& p, Exp N) {
    const Exp M = p.base;
    const QMonomial x = p.x, y = p.y;
    if (kind == FTransformKind::inversion) {
        // -q^{a+b+c}/(xy) f(q^{2a+b}/x, q^{2c+b}/y, q)
        const QMonomial pref = QMonomial{-1, M * (p.a + p.b + p.c)} * (x * y).inverse();
        FabcParams q(p.a, p.b, p.c, QMonomial{x.sign, M * (2 * p.a + p.b) - x.exponent},
                     QMonomial{y.sign, M * (2 * p.c + p.b) - y.exponent}, M);
        return eval_to_prec(N, std::llabs(pref.exponent) + 16, [&](Exp P) {
            return monomial_mul(indefinite_f(q, P - pref.exponent), pref);
        });
    }
    // quadruple splitting into base q^4
    const QMonomial x2 = x.pow(2), y2 = y.pow(2);
    auto f4 = [&](Exp ax, Exp ay, Exp P) {
        FabcParams q(p.a, p.b, p.c, -(QMonomial{1, M * ax} * x2), -(QMonomial{1, M * ay} * y2),
                     4 * M);
        return indefinite_f(q, P);
    };
    const Exp pad = 3 * M * (p.a + p.b + p.c) +
                    2 * (std::llabs(x.exponent) + std::llabs(y.exponent)) + 16;
    return eval_to_prec(N, pad, [&](Exp P) {
        LaurentSeries r = f4(p.a, p.c, P);
        r = sub(r, monomial_mul(f4(3 * p.a, p.c + 2 * p.b, P - x.exponent), x));
        r = sub(r, monomial_mul(f4(p.a + 2 * p.b, 3 * p.c, P - y.exponent), y));
        const QMonomial w = x * y * QMonomial{1, M * p.b};
        r = add(r, monomial_mul(f4(3 * p.a + 2 * p.b, 3 * p.c + 2 * p.b, P - w.exponent), w));
        return r;
    });
}

bool f_transform_check(FTransformKind kind, const FabcParams& p, Exp N) {
    return equal_below(indefinite_f(p, N), f_transform_rhs(kind, p, N), N);
}

}  // namespace qseries
