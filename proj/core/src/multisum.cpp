#include "qseries/multisum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "qseries/appell.hpp"

namespace qseries {

namespace {

Exp binom2(Exp n) { return n * (n - 1) / 2; }

Exp isqrt_ceil(Exp v) {
    if (v <= 0) return 0;
    Exp r = static_cast<Exp>(std::sqrt(static_cast<double>(v)));
    while (r * r < v) ++r;
    return r;
}

// Pochhammer cache: these recur heavily across multisum terms.
std::mutex poch_cache_mutex;
std::map<std::tuple<int, Exp, Exp, Exp, Exp, bool>, LaurentSeries> poch_cache;

LaurentSeries poch_cached(const QMonomial& x, Exp base, Exp n, Exp N, bool inverted) {
    const auto key = std::make_tuple(x.sign, x.exponent, base, n, N, inverted);
    {
        std::lock_guard<std::mutex> lock(poch_cache_mutex);
        auto it = poch_cache.find(key);
        if (it != poch_cache.end()) return it->second;
    }
    LaurentSeries r = pochhammer(x, base, n, N);
    if (inverted) r = invert(r);
    std::lock_guard<std::mutex> lock(poch_cache_mutex);
    return poch_cache.emplace(key, std::move(r)).first->second;
}

}  // namespace

LaurentSeries b_factor(Exp k, const std::vector<Exp>& tuple, Exp base_mult, Exp N) {
    if (k < 3) throw BadParamsError("b_factor: k must be >= 3");
    if (static_cast<Exp>(tuple.size()) != k)
        throw BadParamsError("b_factor: tuple must have k entries");
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] < tuple[i + 1] || tuple[i + 1] < 0)
            throw BadParamsError("b_factor: tuple must be non-increasing and non-negative");
    const Exp bm = base_mult;
    // q-power: C(n_{k-1}+1, 2) + n_{k-2} + 2 n_{k-3} + ... + 2^{k-3} n_1
    Exp ex = binom2(tuple[1] + 1);
    for (Exp j = 0; j + 2 < k; ++j) ex += (Exp{1} << j) * tuple[static_cast<std::size_t>(j + 2)];
    const int sgn = (tuple.back() % 2 == 0) ? 1 : -1;
    if (bm * ex >= N) return LaurentSeries::zero(N);
    LaurentSeries r = LaurentSeries::monomial(rational(sgn), bm * ex, N);
    // numerator: (-q)_{n_{k-1}}, then (-q^{2^i}; q^{2^i})_{2 n_{k-2-i}}
    r = mul(r, poch_cached(QMonomial{-1, bm}, bm, tuple[1], N, false));
    for (Exp i = 0; i + 2 < k; ++i) {
        const Exp base = bm * (Exp{1} << i);
        r = mul(r, poch_cached(QMonomial{-1, base}, base, 2 * tuple[static_cast<std::size_t>(i + 2)],
                               N, false));
    }
    // denominator: (q^{2^i}; q^{2^i})_{n_{k-i} - n_{k-i-1}} for i = 0..k-2, then
    // (q^{2^{k-1}}; q^{2^{k-1}})_{n_1}
    for (Exp i = 0; i + 1 < k; ++i) {
        const Exp base = bm * (Exp{1} << i);
        r = mul(r, poch_cached(QMonomial{1, base}, base,
                               tuple[static_cast<std::size_t>(i)] -
                                   tuple[static_cast<std::size_t>(i + 1)],
                               N, true));
    }
    const Exp base = bm * (Exp{1} << (k - 1));
    r = mul(r, poch_cached(QMonomial{1, base}, base, tuple.back(), N, true));
    return truncate(r, N);
}

namespace {

// Enumerates inner tuples n_k >= n_{k-1} >= ... >= n_1 >= 0 with pruning on the
// accumulated fixed q-power (weight_min + bm * partial exponent >= N cuts the branch).
template <typename Emit>
void for_each_inner_tuple(Exp k, Exp n_k, Exp bm, Exp weight_min, Exp N, Emit&& emit) {
    std::vector<Exp> tuple(static_cast<std::size_t>(k));
    tuple[0] = n_k;
    auto rec = [&](auto&& self, Exp pos, Exp fixed) -> void {
        if (pos == k) {
            emit(tuple);
            return;
        }
        const Exp top = tuple[static_cast<std::size_t>(pos - 1)];
        for (Exp v = 0; v <= top; ++v) {
            Exp add = 0;
            if (pos == 1)
                add = binom2(v + 1);
            else
                add = (Exp{1} << (pos - 2)) * v;  // weight of n_{k-pos} ... see b_factor
            if (weight_min + bm * (fixed + add) >= N) break;
            tuple[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, fixed + add);
        }
    };
    rec(rec, 1, 0);
}

}  // namespace

LaurentSeries b_inner_sum(Exp k, Exp n_k, Exp base_mult, Exp N) {
    LaurentSeries total = LaurentSeries::zero(N);
    for_each_inner_tuple(k, n_k, base_mult, 0, N, [&](const std::vector<Exp>& tuple) {
        total = add(total, b_factor(k, tuple, base_mult, N));
    });
    return total;
}

LaurentSeries r_series(int i, Exp k, Exp N, int bound_scale) {
    if (i < 1 || i > 4) throw BadParamsError("r_series: i must be in 1..4");
    if (k < 3) throw BadParamsError("r_series: k must be >= 3");
    // outer bounds per the minimal-exponent rules, certified by doubling tests
    const Exp outer = (i == 4) ? N * bound_scale : (isqrt_ceil(2 * N) + 2) * bound_scale;
    LaurentSeries total = LaurentSeries::zero(N);
    for (Exp nk = 0; nk <= outer; ++nk) {
        LaurentSeries w;
        Exp bm = 1;
        switch (i) {
            case 1:
                w = LaurentSeries::monomial(rational(1), binom2(nk + 1), N);
                break;
            case 2:
                w = monomial_mul(invert(poch_cached(QMonomial{-1, 1}, 1, nk, N, false)), 1,
                                 nk * nk + nk);
                break;
            case 3:
                bm = 2;
                w = mul(poch_cached(QMonomial{1, 1}, 2, nk, N, false),
                        poch_cached(QMonomial{-1, 2}, 2, nk, N, true));
                w = monomial_mul(w, (nk % 2 == 0) ? 1 : -1, nk * nk + 2 * nk);
                break;
            case 4:
                w = mul(poch_cached(QMonomial{1, 1}, 2, nk, N, false),
                        poch_cached(QMonomial{-1, 1}, 1, nk, N, true));
                w = monomial_mul(w, (nk % 2 == 0) ? 1 : -1, nk);
                break;
        }
        if (w.is_zero() || w.min_exp() >= N) continue;
        for_each_inner_tuple(k, nk, bm, w.min_exp(), N, [&](const std::vector<Exp>& tuple) {
            LaurentSeries term = mul(w, b_factor(k, tuple, bm, N));
            total = add(total, truncate(term, std::min(term.prec(), total.prec())));
        });
    }
    return total;
}

LaurentSeries classical(ClassicalName name, Exp N) {
    LaurentSeries total = LaurentSeries::zero(N);
    for (Exp n = 0;; ++n) {
        LaurentSeries t;
        switch (name) {
            case ClassicalName::F1: {
                const Exp m = n + 1;
                if (m * m >= N) return total;
                t = monomial_mul(invert(pochhammer(QMonomial{1, m}, 1, m, N)), 1, m * m);
                break;
            }
            case ClassicalName::foq: {
                if (n * n >= N) return total;
                LaurentSeries p = pochhammer(QMonomial{-1, 1}, 1, n, N);
                t = monomial_mul(invert(mul(p, p)), 1, n * n);
                break;
            }
            case ClassicalName::nu: {
                if (n * n + n >= N) return total;
                t = monomial_mul(invert(pochhammer(QMonomial{-1, 1}, 2, n + 1, N)), 1,
                                 n * n + n);
                break;
            }
            case ClassicalName::phi: {
                if (binom2(n + 1) >= N) return total;
                t = monomial_mul(invert(pochhammer(QMonomial{1, 1}, 2, n + 1, N)), 1,
                                 binom2(n + 1));
                break;
            }
            case ClassicalName::mu: {
                if (n * n >= N) return total;
                LaurentSeries p = pochhammer(QMonomial{-1, 2}, 2, n, N);
                t = mul(pochhammer(QMonomial{1, 1}, 2, n, N), invert(mul(p, p)));
                t = monomial_mul(t, (n % 2 == 0) ? 1 : -1, n * n);
                break;
            }
        }
        total = add(total, truncate(t, std::min(t.prec(), total.prec())));
    }
}

LaurentSeries mixed_multisum(MixedName name, Exp k, Exp N, int bound_scale) {
    if (k < 1) throw BadParamsError("mixed_multisum: k must be >= 1");
    LaurentSeries total = LaurentSeries::zero(N);
    std::vector<Exp> tuple(static_cast<std::size_t>(k));
    const Exp outer = (isqrt_ceil(2 * N) + 2) * bound_scale;
    auto rec = [&](auto&& self, Exp pos, Exp fixed) -> void {
        if (fixed >= N) return;
        if (pos == k) {
            LaurentSeries t = LaurentSeries::monomial(rational(1), fixed, N);
            if (name == MixedName::B1) {
                for (Exp i = 0; i + 1 < k; ++i)
                    t = mul(t, poch_cached(QMonomial{1, 1}, 1,
                                           tuple[static_cast<std::size_t>(i)] -
                                               tuple[static_cast<std::size_t>(i + 1)],
                                           N, true));
                LaurentSeries p = poch_cached(QMonomial{-1, 1}, 1, tuple.back(), N, false);
                t = mul(t, invert(mul(p, p)));
            } else {
                t = mul(t, poch_cached(QMonomial{-1, 1}, 1, tuple.front(), N, false));
                for (Exp i = 0; i + 1 < k; ++i)
                    t = mul(t, poch_cached(QMonomial{1, 1}, 1,
                                           tuple[static_cast<std::size_t>(i)] -
                                               tuple[static_cast<std::size_t>(i + 1)],
                                           N, true));
                const Exp n1 = tuple.back();
                t = mul(t, poch_cached(QMonomial{1, n1 + 1}, 1, n1 + 1, N, true));
            }
            total = add(total, truncate(t, std::min(t.prec(), total.prec())));
            return;
        }
        const Exp top = tuple[static_cast<std::size_t>(pos - 1)];
        for (Exp v = 0; v <= top; ++v) {
            const Exp add = (name == MixedName::B1) ? v * v : v * v + v;
            if (fixed + add >= N) break;
            tuple[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, fixed + add);
        }
    };
    for (Exp nk = 0; nk <= outer; ++nk) {
        tuple[0] = nk;
        const Exp lead = (name == MixedName::B1) ? nk * nk : binom2(nk + 1);
        if (lead >= N) continue;
        rec(rec, 1, lead);
    }
    return total;
}

LaurentSeries andrews_gordon(Exp k, Side side, Exp N, int bound_scale) {
    if (k < 2) throw BadParamsError("andrews_gordon: k must be >= 2");
    if (side == Side::rhs) {
        LaurentSeries r = pochhammer_inf(QMonomial{1, k}, 2 * k + 1, N);
        r = mul(r, pochhammer_inf(QMonomial{1, k + 1}, 2 * k + 1, N));
        r = mul(r, pochhammer_inf(QMonomial{1, 2 * k + 1}, 2 * k + 1, N));
        return mul(r, invert(pochhammer_inf(QMonomial{1, 1}, 1, N)));
    }
    // (k-1)-fold multisum
    LaurentSeries total = LaurentSeries::zero(N);
    const Exp kk = k - 1;
    std::vector<Exp> tuple(static_cast<std::size_t>(kk));
    auto rec = [&](auto&& self, Exp pos, Exp fixed) -> void {
        if (pos == kk) {
            LaurentSeries t = LaurentSeries::monomial(rational(1), fixed, N);
            for (Exp i = 0; i + 1 < kk; ++i)
                t = mul(t, poch_cached(QMonomial{1, 1}, 1,
                                       tuple[static_cast<std::size_t>(i)] -
                                           tuple[static_cast<std::size_t>(i + 1)],
                                       N, true));
            t = mul(t, poch_cached(QMonomial{1, 1}, 1, tuple.back(), N, true));
            total = add(total, truncate(t, std::min(t.prec(), total.prec())));
            return;
        }
        const Exp top = tuple[static_cast<std::size_t>(pos - 1)];
        for (Exp v = 0; v <= top; ++v) {
            if (fixed + v * v >= N) break;
            tuple[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, fixed + v * v);
        }
    };
    const Exp outer = (isqrt_ceil(N) + 1) * bound_scale;
    for (Exp n = 0; n <= outer; ++n) {
        if (n * n >= N) continue;
        tuple[0] = n;
        rec(rec, 1, n * n);
    }
    return total;
}

LaurentSeries rogers_ramanujan(int s, Side side, Exp N) {
    if (s != 0 && s != 1) throw BadParamsError("rogers_ramanujan: s must be 0 or 1");
    if (side == Side::rhs) {
        LaurentSeries d = mul(pochhammer_inf(QMonomial{1, 1 + s}, 5, N),
                              pochhammer_inf(QMonomial{1, 4 - s}, 5, N));
        return invert(d);
    }
    LaurentSeries total = LaurentSeries::zero(N);
    for (Exp n = 0; n * n + s * n < N; ++n) {
        total = add(total, monomial_mul(invert(pochhammer(QMonomial{1, 1}, 1, n, N)), 1,
                                        n * n + s * n));
    }
    return total;
}

LaurentSeries bilateral_f_sum(Exp k, Exp N, int window_scale) {
    if (k < 1) throw BadParamsError("bilateral_f_sum: k must be >= 1");
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries sum = LaurentSeries::zero(P);
        auto term_min = [&](Exp n) { return k * n * n + binom2(n + 1) + (n < 0 ? -n : 0); };
        Exp hi = 1, lo = -1;
        while (term_min(hi) < P) ++hi;
        while (term_min(lo) < P) --lo;
        hi *= window_scale;
        lo *= window_scale;
        for (Exp n = lo; n <= hi; ++n) {
            LaurentSeries t = detail::geometric_inverse(-1, n, P);
            t = monomial_mul(t, (n % 2 == 0) ? 1 : -1, k * n * n + binom2(n + 1));
            sum = add(sum, truncate(t, std::min(t.prec(), sum.prec())));
        }
        sum = scalar_mul(sum, rational(2));
        return mul(sum, invert(pochhammer_inf(QMonomial{1, 1}, 1, P)));
    });
}

}  // namespace qseries
