#include "qseries/bailey.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qseries/multisum.hpp"

namespace qseries {

namespace {

Exp binom2(Exp n) { return n * (n - 1) / 2; }

LaurentSeries one_minus(const QMonomial& m, Exp P) {
    return sub(LaurentSeries::constant(1, P), LaurentSeries::monomial(m, P));
}

LaurentSeries one_plus(const QMonomial& m, Exp P) {
    return add(LaurentSeries::constant(1, P), LaurentSeries::monomial(m, P));
}

}  // namespace

struct BaileyPair::Impl {
    std::string name;
    QMonomial a;
    Generator alpha_fn;
    Generator beta_fn;
    std::mutex mutex;
    std::map<std::tuple<int, Exp, Exp, Exp>, LaurentSeries> cache;

    LaurentSeries eval(int which, Exp n, Exp m, Exp N) {
        const auto key = std::make_tuple(which, n, m, N);
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        LaurentSeries r = (which == 0) ? alpha_fn(n, m, N) : beta_fn(n, m, N);
        std::lock_guard<std::mutex> lock(mutex);
        return cache.emplace(key, std::move(r)).first->second;
    }
};

BaileyPair::BaileyPair(std::string name, QMonomial a, Generator alpha, Generator beta)
    : impl_(std::make_shared<Impl>()) {
    impl_->name = std::move(name);
    impl_->a = a;
    impl_->alpha_fn = std::move(alpha);
    impl_->beta_fn = std::move(beta);
}

const std::string& BaileyPair::name() const { return impl_->name; }
const QMonomial& BaileyPair::a() const { return impl_->a; }

LaurentSeries BaileyPair::alpha(Exp n, Exp base_mult, Exp N) const {
    if (n < 0 || base_mult < 1) throw BadParamsError("BaileyPair::alpha: bad arguments");
    return impl_->eval(0, n, base_mult, N);
}

LaurentSeries BaileyPair::beta(Exp n, Exp base_mult, Exp N) const {
    if (n < 0 || base_mult < 1) throw BadParamsError("BaileyPair::beta: bad arguments");
    return impl_->eval(1, n, base_mult, N);
}

LaurentSeries beta_from_definition(const BaileyPair& p, Exp n, Exp base_mult, Exp N) {
    const Exp m = base_mult;
    const QMonomial aq = p.a().scale_base(m) * QMonomial{1, m};
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries total = LaurentSeries::zero(P);
        for (Exp k = 0; k <= n; ++k) {
            LaurentSeries den = mul(pochhammer(QMonomial{1, m}, m, n - k, P),
                                    pochhammer(aq, m, n + k, P));
            LaurentSeries term = mul(p.alpha(k, m, P), invert(den));
            total = add(total, truncate(term, std::min(term.prec(), total.prec())));
        }
        return total;
    });
}

bool verify_pair(const BaileyPair& p, Exp n_max, Exp N) {
    for (Exp n = 0; n <= n_max; ++n) {
        if (!equal_below(p.beta(n, 1, N), beta_from_definition(p, n, 1, N), N)) return false;
    }
    return true;
}

BaileyPair chain_step(const BaileyPair& p, const SpecParam& b, const SpecParam& c) {
    if (b.kind == SpecParam::Kind::sqrt_conjugate || c.kind == SpecParam::Kind::sqrt_conjugate)
        throw BadParamsError("chain_step: sqrt-conjugate parameters are only legal in the limit sum");
    // normalize (infinity, monomial) to (monomial, infinity)
    if (b.kind == SpecParam::Kind::infinity && c.kind == SpecParam::Kind::monomial)
        return chain_step(p, c, b);
    const QMonomial a = p.a();

    if (b.kind == SpecParam::Kind::monomial && c.kind == SpecParam::Kind::monomial) {
        const QMonomial bv = b.value, cv = c.value;
        auto alpha = [p, a, bv, cv](Exp n, Exp m, Exp N) {
            return eval_to_prec(N, 16, [&](Exp P) {
                const QMonomial B = bv.scale_base(m), C = cv.scale_base(m);
                const QMonomial w = a.scale_base(m) * QMonomial{1, m} * (B * C).inverse();
                const QMonomial aqb = a.scale_base(m) * QMonomial{1, m} * B.inverse();
                const QMonomial aqc = a.scale_base(m) * QMonomial{1, m} * C.inverse();
                const Exp PP = P + std::max<Exp>(0, -n * w.exponent);
                LaurentSeries t = mul(pochhammer(B, m, n, PP), pochhammer(C, m, n, PP));
                t = mul(t, p.alpha(n, m, PP));
                t = mul(t, invert(mul(pochhammer(aqb, m, n, PP), pochhammer(aqc, m, n, PP))));
                return monomial_mul(t, w.pow(n));
            });
        };
        auto beta = [p, a, bv, cv](Exp n, Exp m, Exp N) {
            return eval_to_prec(N, 16, [&](Exp P) {
                const QMonomial B = bv.scale_base(m), C = cv.scale_base(m);
                const QMonomial w = a.scale_base(m) * QMonomial{1, m} * (B * C).inverse();
                const QMonomial aqb = a.scale_base(m) * QMonomial{1, m} * B.inverse();
                const QMonomial aqc = a.scale_base(m) * QMonomial{1, m} * C.inverse();
                const Exp PP = P + std::max<Exp>(0, -n * w.exponent) + 8;
                LaurentSeries total = LaurentSeries::zero(PP);
                for (Exp k = 0; k <= n; ++k) {
                    LaurentSeries t = mul(pochhammer(B, m, k, PP), pochhammer(C, m, k, PP));
                    t = mul(t, pochhammer(w, m, n - k, PP));
                    t = mul(t, p.beta(k, m, PP));
                    t = monomial_mul(t, w.pow(k));
                    t = mul(t, invert(pochhammer(QMonomial{1, m}, m, n - k, PP)));
                    total = add(total, truncate(t, std::min(t.prec(), total.prec())));
                }
                return mul(total,
                           invert(mul(pochhammer(aqb, m, n, PP), pochhammer(aqc, m, n, PP))));
            });
        };
        return BaileyPair(p.name() + " -> chain(b,c)", a, alpha, beta);
    }

    if (b.kind == SpecParam::Kind::monomial && c.kind == SpecParam::Kind::infinity) {
        const QMonomial bv = b.value;
        auto alpha = [p, a, bv](Exp n, Exp m, Exp N) {
            return eval_to_prec(N, 16, [&](Exp P) {
                const QMonomial B = bv.scale_base(m);
                const QMonomial u = a.scale_base(m) * QMonomial{1, m} * B.inverse();
                const Exp shift = m * binom2(n) + n * u.exponent;
                const Exp PP = P + std::max<Exp>(0, -shift);
                LaurentSeries t = mul(pochhammer(B, m, n, PP), p.alpha(n, m, PP));
                t = mul(t, invert(pochhammer(u, m, n, PP)));
                const int sgn = ((n % 2 == 0) ? 1 : -1) * u.pow(n).sign;
                return monomial_mul(t, sgn, shift);
            });
        };
        auto beta = [p, a, bv](Exp n, Exp m, Exp N) {
            return eval_to_prec(N, 16, [&](Exp P) {
                const QMonomial B = bv.scale_base(m);
                const QMonomial u = a.scale_base(m) * QMonomial{1, m} * B.inverse();
                Exp worst = 0;
                for (Exp k = 0; k <= n; ++k)
                    worst = std::max(worst, std::max<Exp>(0, -(m * binom2(k) + k * u.exponent)));
                const Exp PP = P + worst + 8;
                LaurentSeries total = LaurentSeries::zero(PP);
                for (Exp k = 0; k <= n; ++k) {
                    const Exp shift = m * binom2(k) + k * u.exponent;
                    const int sgn = ((k % 2 == 0) ? 1 : -1) * u.pow(k).sign;
                    LaurentSeries t = mul(pochhammer(B, m, k, PP), p.beta(k, m, PP));
                    t = monomial_mul(t, sgn, shift);
                    t = mul(t, invert(pochhammer(QMonomial{1, m}, m, n - k, PP)));
                    total = add(total, truncate(t, std::min(t.prec(), total.prec())));
                }
                return mul(total, invert(pochhammer(u, m, n, PP)));
            });
        };
        return BaileyPair(p.name() + " -> chain(b,inf)", a, alpha, beta);
    }

    // both infinity: alpha'_n = a^n q^{n^2} alpha_n, beta'_n = sum a^k q^{k^2} beta_k / (q)_{n-k}
    auto alpha = [p, a](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            const QMonomial w = a.scale_base(m).pow(n) * QMonomial{1, m * n * n};
            return monomial_mul(p.alpha(n, m, P + std::max<Exp>(0, -w.exponent)), w);
        });
    };
    auto beta = [p, a](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            LaurentSeries total = LaurentSeries::zero(P);
            for (Exp k = 0; k <= n; ++k) {
                const QMonomial w = a.scale_base(m).pow(k) * QMonomial{1, m * k * k};
                LaurentSeries t = monomial_mul(p.beta(k, m, P + std::max<Exp>(0, -w.exponent)), w);
                t = mul(t, invert(pochhammer(QMonomial{1, m}, m, n - k, P)));
                total = add(total, truncate(t, std::min(t.prec(), total.prec())));
            }
            return total;
        });
    };
    return BaileyPair(p.name() + " -> chain(inf,inf)", a, alpha, beta);
}

BaileyPair change_base(const BaileyPair& p) {
    if (!(p.a() == QMonomial::q()))
        throw WrongRelativeParameterError("change_base: requires a Bailey pair relative to q");
    auto alpha = [p](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            LaurentSeries t = monomial_mul(p.alpha(n, 2 * m, P), 1, m * n);
            t = mul(t, one_plus(QMonomial{1, m}, P + m * n));
            return mul(t, invert(one_plus(QMonomial{1, m * (2 * n + 1)}, P + m * n)));
        });
    };
    auto beta = [p](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            LaurentSeries total = LaurentSeries::zero(P);
            for (Exp k = 0; k <= n; ++k) {
                LaurentSeries t = mul(pochhammer(QMonomial{-1, m}, m, 2 * k, P),
                                      p.beta(k, 2 * m, P));
                t = monomial_mul(t, 1, m * k);
                t = mul(t, invert(pochhammer(QMonomial{1, 2 * m}, 2 * m, n - k, P)));
                total = add(total, truncate(t, std::min(t.prec(), total.prec())));
            }
            return total;
        });
    };
    return BaileyPair(p.name() + " -> base", QMonomial::q(), alpha, beta);
}

LimitSum bailey_limit_sum(const BaileyPair& p, const SpecParam& b, const SpecParam& c, Exp N,
                          Exp base_mult) {
    const Exp m = base_mult;
    const QMonomial A = p.a().scale_base(m);
    const QMonomial Aq = A * QMonomial{1, m};

    SpecParam bb = b, cc = c;
    if (bb.kind == SpecParam::Kind::infinity && cc.kind == SpecParam::Kind::monomial)
        std::swap(bb, cc);
    const bool sqrt_mode = bb.kind == SpecParam::Kind::sqrt_conjugate ||
                           cc.kind == SpecParam::Kind::sqrt_conjugate;
    if (sqrt_mode &&
        !(bb.kind == SpecParam::Kind::sqrt_conjugate && cc.kind == SpecParam::Kind::sqrt_conjugate))
        throw BadParamsError("bailey_limit_sum: sqrt-conjugate must be used for both b and c");

    // weight of the n-th term on the beta (lhs) and alpha (rhs) side
    auto lhs_weight = [&](Exp n, Exp P) -> LaurentSeries {
        if (sqrt_mode) {
            // (b)_n (c)_n = (q^m; q^{2m})_n, (aq/bc)^n = (-A)^n
            LaurentSeries t = pochhammer(QMonomial{1, m}, 2 * m, n, P);
            return monomial_mul(t, (-A).pow(n));
        }
        if (bb.kind == SpecParam::Kind::monomial && cc.kind == SpecParam::Kind::monomial) {
            const QMonomial B = bb.value, C = cc.value;  // literal in the new variable
            const QMonomial w = Aq * (B * C).inverse();
            LaurentSeries t = mul(pochhammer(B, m, n, P), pochhammer(C, m, n, P));
            return monomial_mul(t, w.pow(n));
        }
        if (bb.kind == SpecParam::Kind::monomial) {
            const QMonomial B = bb.value;
            const QMonomial u = Aq * B.inverse();
            LaurentSeries t = pochhammer(B, m, n, P);
            const int sgn = ((n % 2 == 0) ? 1 : -1) * u.pow(n).sign;
            return monomial_mul(t, sgn, m * binom2(n) + n * u.exponent);
        }
        const QMonomial w = A.pow(n) * QMonomial{1, m * n * n};
        return LaurentSeries::monomial(w, P);
    };
    auto rhs_weight = [&](Exp n, Exp P) -> LaurentSeries {
        if (sqrt_mode) {
            // (aq/b)_n (aq/c)_n = (A^2 q^m; q^{2m})_n
            LaurentSeries t = lhs_weight(n, P);
            return mul(t, invert(pochhammer(A.pow(2) * QMonomial{1, m}, 2 * m, n, P)));
        }
        if (bb.kind == SpecParam::Kind::monomial && cc.kind == SpecParam::Kind::monomial) {
            const QMonomial B = bb.value, C = cc.value;
            LaurentSeries t = lhs_weight(n, P);
            return mul(t, invert(mul(pochhammer(Aq * B.inverse(), m, n, P),
                                     pochhammer(Aq * C.inverse(), m, n, P))));
        }
        if (bb.kind == SpecParam::Kind::monomial) {
            const QMonomial B = bb.value;
            LaurentSeries t = lhs_weight(n, P);
            return mul(t, invert(pochhammer(Aq * B.inverse(), m, n, P)));
        }
        return lhs_weight(n, P);
    };
    auto prefactor = [&](Exp P) -> LaurentSeries {
        if (sqrt_mode) {
            LaurentSeries num = pochhammer_inf(A.pow(2) * QMonomial{1, m}, 2 * m, P);
            LaurentSeries den = mul(pochhammer_inf(Aq, m, P), pochhammer_inf(-A, m, P));
            return mul(num, invert(den));
        }
        if (bb.kind == SpecParam::Kind::monomial && cc.kind == SpecParam::Kind::monomial) {
            const QMonomial B = bb.value, C = cc.value;
            const QMonomial w = Aq * (B * C).inverse();
            LaurentSeries num = mul(pochhammer_inf(Aq * B.inverse(), m, P),
                                    pochhammer_inf(Aq * C.inverse(), m, P));
            LaurentSeries den = mul(pochhammer_inf(Aq, m, P), pochhammer_inf(w, m, P));
            return mul(num, invert(den));
        }
        if (bb.kind == SpecParam::Kind::monomial) {
            const QMonomial B = bb.value;
            return mul(pochhammer_inf(Aq * B.inverse(), m, P),
                       invert(pochhammer_inf(Aq, m, P)));
        }
        return invert(pochhammer_inf(Aq, m, P));
    };

    // summation with the minimal-exponent cutoff rule
    auto summed = [&](auto&& weight, auto&& member, Exp P) -> LaurentSeries {
        LaurentSeries total = LaurentSeries::zero(P);
        int consecutive_high = 0;
        for (Exp n = 0;; ++n) {
            if (n > 4 * P + 64) throw NonConvergentError("bailey_limit_sum: terms do not shrink");
            LaurentSeries t = mul(weight(n, P), member(n, P));
            const Exp tmin = t.is_zero() ? t.prec() : t.min_exp();
            if (tmin >= P) {
                if (++consecutive_high >= 4) break;
            } else {
                consecutive_high = 0;
                total = add(total, truncate(t, std::min(t.prec(), total.prec())));
            }
        }
        return total;
    };

    LimitSum result;
    result.lhs = eval_to_prec(N, 16, [&](Exp P) {
        return summed(lhs_weight, [&](Exp n, Exp P2) { return p.beta(n, m, P2); }, P);
    });
    result.rhs = eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries s =
            summed(rhs_weight, [&](Exp n, Exp P2) { return p.alpha(n, m, P2); }, P);
        return mul(prefactor(P - std::min<Exp>(0, s.min_exp())), s);
    });
    return result;
}

BaileyPair unit_pair(const QMonomial& a) {
    if (a.is_one()) {
        auto alpha = [](Exp n, Exp m, Exp N) {
            if (n == 0) return LaurentSeries::constant(1, N);
            const int sgn = (n % 2 == 0) ? 1 : -1;
            LaurentSeries t = one_plus(QMonomial{1, m * n}, N - std::min<Exp>(m * binom2(n), N));
            return truncate(monomial_mul(t, sgn, m * binom2(n)), N);
        };
        auto beta = [](Exp n, Exp /*m*/, Exp N) {
            return n == 0 ? LaurentSeries::constant(1, N) : LaurentSeries::zero(N);
        };
        return BaileyPair("unit(1)", QMonomial::one(), alpha, beta);
    }
    auto alpha = [a](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            const QMonomial A = a.scale_base(m);
            LaurentSeries t = pochhammer(A, m, n, P);
            t = mul(t, one_minus(A * QMonomial{1, 2 * m * n}, P));
            t = mul(t, invert(mul(pochhammer(QMonomial{1, m}, m, n, P), one_minus(A, P))));
            return monomial_mul(t, (n % 2 == 0) ? 1 : -1, m * binom2(n));
        });
    };
    auto beta = [](Exp n, Exp /*m*/, Exp N) {
        return n == 0 ? LaurentSeries::constant(1, N) : LaurentSeries::zero(N);
    };
    return BaileyPair("unit(" + a.str() + ")", a, alpha, beta);
}

BaileyPair foq_pair() {
    auto alpha = [](Exp n, Exp m, Exp N) {
        if (n == 0) return LaurentSeries::constant(1, N);
        return eval_to_prec(N, 16, [&](Exp P) {
            // 4 (-1)^n q^{C(n+1,2)} / (1 + q^n)
            LaurentSeries t = invert(one_plus(QMonomial{1, m * n}, P));
            t = scalar_mul(t, rational(4));
            return monomial_mul(t, (n % 2 == 0) ? 1 : -1, m * binom2(n + 1));
        });
    };
    auto beta = [](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            LaurentSeries p2 = pochhammer(QMonomial{-1, m}, m, n, P);
            return invert(mul(p2, p2));
        });
    };
    return BaileyPair("foq", QMonomial::one(), alpha, beta);
}

BaileyPair andrews_hickerson_pair() {
    auto alpha = [](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            // q^{n^2} (1-q^{2n+1})/(1-q) sum_{|j|<=n} (-1)^j q^{-j^2}, truncated exactly
            LaurentSeries sum = LaurentSeries::zero(P);
            for (Exp j = -n; j <= n; ++j) {
                const Exp e = m * (n * n - j * j);
                if (e < P)
                    sum = add(sum, LaurentSeries::monomial(rational((j % 2 == 0) ? 1 : -1), e, P));
            }
            LaurentSeries ratio = mul(one_minus(QMonomial{1, m * (2 * n + 1)}, P),
                                      invert(one_minus(QMonomial{1, m}, P)));
            return mul(sum, ratio);
        });
    };
    auto beta = [](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            LaurentSeries t = invert(pochhammer(QMonomial{1, 2 * m}, 2 * m, n, P));
            return scalar_mul(t, rational((n % 2 == 0) ? 1 : -1));
        });
    };
    return BaileyPair("andrews_hickerson", QMonomial::q(), alpha, beta);
}

BaileyPair key_pair(Exp k) {
    if (k < 3) throw BadParamsError("key_pair: k must be >= 3");
    auto alpha = [k](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            const Exp two_km1 = Exp{1} << (k - 1);
            const Exp two_km2 = Exp{1} << (k - 2);
            const Exp base_e = ((two_km1 + 1) * n * n + (two_km1 - 1) * n) / 2;
            LaurentSeries sum = LaurentSeries::zero(P);
            for (Exp j = -n; j <= n; ++j) {
                const Exp e = m * (base_e - two_km2 * j * j);
                if (e < P)
                    sum = add(sum, LaurentSeries::monomial(rational((j % 2 == 0) ? 1 : -1), e, P));
            }
            LaurentSeries ratio = mul(one_minus(QMonomial{1, m * (2 * n + 1)}, P),
                                      invert(one_minus(QMonomial{1, m}, P)));
            return mul(sum, ratio);
        });
    };
    auto beta = [k](Exp n, Exp m, Exp N) {
        return eval_to_prec(N, 16, [&](Exp P) {
            LaurentSeries inner = b_inner_sum(k, n, m, P);
            return mul(inner, invert(pochhammer(QMonomial{-1, m}, m, n, P)));
        });
    };
    return BaileyPair("key(" + std::to_string(k) + ")", QMonomial::q(), alpha, beta);
}

BaileyPair builtin(const std::string& name) {
    if (name == "unit(q)") return unit_pair(QMonomial::q());
    if (name == "unit(1)") return unit_pair(QMonomial::one());
    if (name == "foq") return foq_pair();
    if (name == "andrews_hickerson") return andrews_hickerson_pair();
    if (name.rfind("key(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(4, name.size() - 5);
        try {
            return key_pair(std::stoll(inner));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw UnknownPairError("unknown Bailey pair: " + name);
}

}  // namespace qseries
