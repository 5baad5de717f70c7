#include "qseries/theta.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>

namespace qseries {

namespace {

Exp floor_div(Exp a, Exp b) {
    Exp q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Exp binom2(Exp n) { return n * (n - 1) / 2; }

std::mutex unit_cache_mutex;
std::map<std::tuple<int, Exp, Exp, Exp>, LaurentSeries> unit_cache;

}  // namespace

JThetaParts jtheta_parts(const QMonomial& x, Exp base) {
    if (base < 1) throw BadParamsError("jtheta: base must be >= 1");
    const Exp n = floor_div(x.exponent, base);
    const Exp e0 = x.exponent - n * base;  // 0 <= e0 < base
    JThetaParts parts;
    if (e0 == 0 && x.sign == 1) {
        parts.zero = true;
        return parts;
    }
    const int psign = (n % 2 == 0) ? 1 : -x.sign;
    parts.prefactor = QMonomial{psign, -base * binom2(n) - n * e0};
    return parts;
}

LaurentSeries jtheta_unit(const QMonomial& x, Exp base, Exp relN) {
    const Exp n = floor_div(x.exponent, base);
    const Exp e0 = x.exponent - n * base;
    if (e0 == 0 && x.sign == 1)
        throw ZeroDivisorError("jtheta_unit: theta vanishes identically");
    const auto key = std::make_tuple(x.sign, e0, base, relN);
    {
        std::lock_guard<std::mutex> lock(unit_cache_mutex);
        auto it = unit_cache.find(key);
        if (it != unit_cache.end()) return it->second;
    }
    LaurentSeries r = pochhammer_inf(QMonomial{x.sign, e0}, base, relN);
    r = mul(r, pochhammer_inf(QMonomial{x.sign, base - e0}, base, relN));
    r = mul(r, pochhammer_inf(QMonomial{1, base}, base, relN));
    std::lock_guard<std::mutex> lock(unit_cache_mutex);
    return unit_cache.emplace(key, std::move(r)).first->second;
}

LaurentSeries jtheta(const QMonomial& x, Exp base, Exp N) {
    const JThetaParts parts = jtheta_parts(x, base);
    if (parts.zero) return LaurentSeries::zero(N);
    const Exp relN = N - parts.prefactor.exponent;
    if (relN <= 0) return LaurentSeries::zero(N);
    return truncate(monomial_mul(jtheta_unit(x, base, relN), parts.prefactor), N);
}

LaurentSeries J_const(JKind kind, Exp a, Exp m, Exp N) {
    if (m < 1) throw BadParamsError("J_const: modulus must be >= 1");
    switch (kind) {
        case JKind::J_m:
            return jtheta(QMonomial{1, m}, 3 * m, N);
        case JKind::J_am:
            return jtheta(QMonomial{1, a}, m, N);
        case JKind::Jbar_am:
            return jtheta(QMonomial{-1, a}, m, N);
    }
    throw BadParamsError("J_const: unknown kind");
}

LaurentSeries theta_series(const QMonomial& z, Exp N) {
    const Exp je = z.exponent;
    auto term_exp = [&](Exp n) { return n * n + n * je; };
    Exp lo = 0, hi = 0;
    while (term_exp(hi) < N || hi < std::llabs(je) + 2) ++hi;
    while (term_exp(lo) < N || -lo < std::llabs(je) + 2) --lo;
    Exp min_e = 0;
    for (Exp n = lo; n <= hi; ++n) min_e = std::min(min_e, term_exp(n));
    if (min_e >= N) return LaurentSeries::zero(N);
    std::vector<Rational> cs(static_cast<std::size_t>(N - min_e));
    for (Exp n = lo; n <= hi; ++n) {
        const Exp e = term_exp(n);
        if (e >= N) continue;
        const int sgn = (n % 2 == 0) ? 1 : z.sign;
        cs[static_cast<std::size_t>(e - min_e)] += rational(sgn);
    }
    return LaurentSeries::from_coeffs(min_e, std::move(cs), N);
}

}  // namespace qseries
