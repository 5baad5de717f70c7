#include "qseries/registry.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "qseries/appell.hpp"
#include "qseries/bailey.hpp"
#include "qseries/format.hpp"
#include "qseries/indefinite.hpp"
#include "qseries/multisum.hpp"
#include "qseries/theta.hpp"

namespace qseries {

namespace {

Exp get_exp(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw BadParamsError("missing parameter '" + key + "'");
    try {
        return std::stoll(it->second);
    } catch (const std::exception&) {
        throw BadParamsError("parameter '" + key + "' is not an integer: " + it->second);
    }
}

QMonomial get_mono(const Params& p, const std::string& key, const QMonomial& def) {
    auto it = p.find(key);
    if (it == p.end()) return def;
    return QMonomial::parse(it->second);
}

// (-q)_inf / (q)_inf
LaurentSeries euler_ratio(Exp N) {
    return eval_to_prec(N, 8, [&](Exp P) {
        return divide(pochhammer_inf(QMonomial{-1, 1}, 1, P),
                      pochhammer_inf(QMonomial{1, 1}, 1, P));
    });
}

// (q;q^2)_inf / (q^2;q^2)_inf
LaurentSeries odd_even_ratio(Exp N) {
    return eval_to_prec(N, 8, [&](Exp P) {
        return divide(pochhammer_inf(QMonomial{1, 1}, 2, P),
                      pochhammer_inf(QMonomial{1, 2}, 2, P));
    });
}

LaurentSeries m_plus_xi(const QMonomial& x, Exp M, const QMonomial& z, Exp N) {
    return add(appell_m(x, M, z, N), xi(x, M, z, N));
}

LaurentSeries theta_over_j(Exp n, Exp p, const QMonomial& x, Exp base, const QMonomial& jarg,
                           Exp jbase, Exp N) {
    return eval_to_prec(N, 16, [&](Exp P) {
        return divide(theta_np(n, p, x, x, base, P), jtheta(jarg, jbase, P));
    });
}

// Built-in pairs are reused across verdicts so their memo caches pay off.
const BaileyPair& cached_pair(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, BaileyPair> pairs;
    std::lock_guard<std::mutex> lock(mu);
    auto it = pairs.find(name);
    if (it != pairs.end()) return it->second;
    return pairs.emplace(name, builtin(name)).first->second;
}

// key_pair(k) built by iteration: chain_step(change_base^{k-2}(AH), -q, inf)
const BaileyPair& iterated_key_pair(Exp k) {
    static std::mutex mu;
    static std::map<Exp, BaileyPair> pairs;
    std::lock_guard<std::mutex> lock(mu);
    auto it = pairs.find(k);
    if (it != pairs.end()) return it->second;
    BaileyPair p = andrews_hickerson_pair();
    for (Exp i = 0; i + 2 < k; ++i) p = change_base(p);
    p = chain_step(p, SpecParam::monomial(QMonomial::minus_q()), SpecParam::infinity());
    return pairs.emplace(k, std::move(p)).first->second;
}

const BaileyPair& chained_foq() {
    static std::mutex mu;
    static std::optional<BaileyPair> pair;
    std::lock_guard<std::mutex> lock(mu);
    if (!pair) {
        pair = chain_step(unit_pair(QMonomial::one()),
                          SpecParam::monomial(QMonomial{-1, 0}),
                          SpecParam::monomial(QMonomial{-1, 0}));
    }
    return *pair;
}

std::vector<Params> k_grid(std::initializer_list<Exp> ks,
                           std::initializer_list<std::pair<Exp, Exp>> order_overrides = {}) {
    std::vector<Params> g;
    for (Exp k : ks) {
        Params p{{"k", std::to_string(k)}};
        for (const auto& [kk, ord] : order_overrides)
            if (kk == k) p["_order"] = std::to_string(ord);
        g.push_back(std::move(p));
    }
    return g;
}

std::vector<Params> pair_grid(std::initializer_list<Exp> ks, Exp n_max) {
    std::vector<Params> g;
    if (ks.size() == 0) {
        for (Exp n = 0; n <= n_max; ++n) g.push_back({{"n", std::to_string(n)}});
        return g;
    }
    for (Exp k : ks)
        for (Exp n = 0; n <= n_max; ++n)
            g.push_back({{"k", std::to_string(k)}, {"n", std::to_string(n)}});
    return g;
}

// ---- Appell-Lerch decompositions of the four multisum families -------------

LaurentSeries casei_rhs(Exp k, const QMonomial& z, Exp N) {
    const Exp t2 = Exp{1} << (k - 2);
    const Exp t1 = Exp{1} << (k - 1);
    const int c1 = ((Exp{1} << (k - 3)) % 2 == 0) ? 2 : -2;  // 2(-1)^{2^{k-3}}
    const Exp e1 = -(Exp{1} << (2 * k - 6));
    const Exp M1 = t1 * (t2 + 1);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries r = monomial_mul(m_plus_xi(QMonomial{1, t2}, M1, z, P - e1), c1 > 0 ? 1 : -1,
                                       e1);
        r = scalar_mul(r, rational(2));
        LaurentSeries th1 = theta_over_j(1, t1, QMonomial{1, t2 + 1}, 2, QMonomial::q(), 2, P);
        LaurentSeries th2 = theta_over_j(1, t1, QMonomial{1, 3 * (t2 + 1)}, 2, QMonomial::q(), 2,
                                         P - (t1 + 1));
        return add(r, add(th1, monomial_mul(th2, 1, t1 + 1)));
    });
}

LaurentSeries caseii_rhs(Exp k, const QMonomial& z, Exp N) {
    // k odd
    const Exp t3 = Exp{1} << (k - 3);
    const Exp t2 = Exp{1} << (k - 2);
    const Exp t1 = Exp{1} << (k - 1);
    const Exp B = 3 * t1 * (t1 + 3);
    const Exp A1 = (Exp{1} << (k + 1)) * (t3 + 1);
    const Exp A2 = t1;
    const Exp E1 = -t3 * (t2 + 1) / 3;
    const Exp E2 = -3 * t3 * (t2 + 1);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries r1 = monomial_mul(m_plus_xi(QMonomial{1, A1}, B, z, P - E1), 1, E1);
        LaurentSeries r2 = monomial_mul(m_plus_xi(QMonomial{1, A2}, B, z, P - E2), 1, E2);
        LaurentSeries r = scalar_mul(add(r1, r2), rational(-2));
        LaurentSeries th1 = theta_over_j(3, Exp{1} << k, QMonomial{1, t2 + 2}, 1, QMonomial::q(),
                                         3, P);
        LaurentSeries th2 = theta_over_j(3, Exp{1} << k, QMonomial{1, 3 * t2 + 5}, 1,
                                         QMonomial::q(), 3, P - (t1 + 2));
        return add(r, add(th1, monomial_mul(th2, 1, t1 + 2)));
    });
}

LaurentSeries caseiibis_rhs(Exp k, const QMonomial& z, Exp N) {
    // k even
    const Exp t3 = Exp{1} << (k - 3);
    const Exp t2 = Exp{1} << (k - 2);
    const Exp t1 = Exp{1} << (k - 1);
    const Exp B = 3 * t1 * (t1 + 3);
    const Exp E1 = (-29 * t3 - 25 * (Exp{1} << (2 * k - 5))) / 3;
    const Exp A1 = -(Exp{1} << k) * (t2 + 1);
    const Exp A2 = t1;
    const Exp E2 = -3 * t3 * (t2 + 1);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries r1 = monomial_mul(m_plus_xi(QMonomial{1, A1}, B, z, P - E1), 1, E1);
        LaurentSeries r2 = monomial_mul(m_plus_xi(QMonomial{1, A2}, B, z, P - E2), 1, E2);
        LaurentSeries r = scalar_mul(add(r1, r2), rational(-2));
        LaurentSeries th1 = theta_over_j(3, Exp{1} << k, QMonomial{1, t2 + 2}, 1, QMonomial::q(),
                                         3, P);
        LaurentSeries th2 = theta_over_j(3, Exp{1} << k, QMonomial{1, 3 * t2 + 5}, 1,
                                         QMonomial::q(), 3, P - (t1 + 2));
        return add(r, add(th1, monomial_mul(th2, 1, t1 + 2)));
    });
}

LaurentSeries caseiii_rhs(Exp k, Exp N) {
    const Exp t3 = Exp{1} << (k - 3);
    const Exp t2 = Exp{1} << (k - 2);
    const Exp E = -t3 * (t2 + 1);
    const Exp M = (Exp{1} << k) * (t2 + 1);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries r = monomial_mul(appell_m(QMonomial{1, t2}, M, QMonomial{-1, 0}, P - E), 1,
                                       E);
        r = scalar_mul(r, rational(2));
        LaurentSeries th = eval_to_prec(P, 16, [&](Exp PP) {
            return divide(theta_np(1, Exp{1} << (k - 1), QMonomial{1, t2 + 1},
                                   QMonomial{-1, t2 + 1}, 1, PP),
                          jtheta(QMonomial{-1, 0}, 1, PP));
        });
        return add(r, scalar_mul(th, rational(2)));
    });
}

LaurentSeries caseiv_rhs(Exp k, Exp N) {
    const Exp t3 = Exp{1} << (k - 3);
    const Exp t2 = Exp{1} << (k - 2);
    const Exp t1 = Exp{1} << (k - 1);
    const Exp E = -t3 * (t2 + 1);
    const Exp M = (Exp{1} << (k + 1)) * (t1 + 1);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries r = monomial_mul(
            appell_m(QMonomial{-1, t1 * (t1 + 1)}, M, QMonomial{-1, 0}, P - E), 1, E);
        r = scalar_mul(r, rational(4));
        LaurentSeries th = theta_over_j(1, Exp{1} << k, QMonomial{-1, t2 + 1}, 1,
                                        QMonomial{-1, 0}, 1, P);
        return add(r, scalar_mul(th, rational(2)));
    });
}

// f-forms of the four families
LaurentSeries r1_f_rhs(Exp k, Exp N) {
    const Exp t2 = Exp{1} << (k - 2);
    const Exp t1 = Exp{1} << (k - 1);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries f1 =
            indefinite_f(FabcParams(1, t1 + 1, 1, QMonomial{1, t2 + 1}, QMonomial{1, t2 + 1}, 2),
                         P);
        LaurentSeries f2 = indefinite_f(
            FabcParams(1, t1 + 1, 1, QMonomial{1, 3 * (t2 + 1)}, QMonomial{1, 3 * (t2 + 1)}, 2),
            P - (t1 + 1));
        return mul(euler_ratio(P), add(f1, monomial_mul(f2, 1, t1 + 1)));
    });
}

LaurentSeries r2_f_rhs(Exp k, Exp N) {
    const Exp t2 = Exp{1} << (k - 2);
    const Exp t1 = Exp{1} << (k - 1);
    const Exp b = (Exp{1} << k) + 3;
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries f1 =
            indefinite_f(FabcParams(3, b, 3, QMonomial{1, t2 + 2}, QMonomial{1, t2 + 2}, 1), P);
        LaurentSeries f2 = indefinite_f(
            FabcParams(3, b, 3, QMonomial{1, 3 * t2 + 5}, QMonomial{1, 3 * t2 + 5}, 1),
            P - (t1 + 2));
        LaurentSeries pre = invert(pochhammer_inf(QMonomial{1, 1}, 1, P));
        return mul(pre, add(f1, monomial_mul(f2, 1, t1 + 2)));
    });
}

LaurentSeries r3_f_rhs(Exp k, Exp N) {
    const Exp t2 = Exp{1} << (k - 2);
    const Exp t1 = Exp{1} << (k - 1);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries f = indefinite_f(
            FabcParams(1, t1 + 1, 1, QMonomial{1, t2 + 1}, QMonomial{-1, t2 + 1}, 1), P);
        return mul(odd_even_ratio(P), f);
    });
}

LaurentSeries r4_f_rhs(Exp k, Exp N) {
    const Exp t2 = Exp{1} << (k - 2);
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries f = indefinite_f(
            FabcParams(1, (Exp{1} << k) + 1, 1, QMonomial{-1, t2 + 1}, QMonomial{-1, t2 + 1}, 1),
            P);
        return mul(odd_even_ratio(P), f);
    });
}

// B1 Appell-Lerch decomposition
LaurentSeries b1_appell_rhs(Exp k, Exp N) {
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries sum = LaurentSeries::zero(P);
        for (Exp i = 1; i <= 2 * k + 1; ++i) {
            if (i == k + 1) continue;
            LaurentSeries t = eval_to_prec(P, 16, [&](Exp PP) {
                LaurentSeries th = jtheta(QMonomial{1, k + i}, 2 * k + 1, PP);
                LaurentSeries mm = appell_m(QMonomial{-1, k - i + 1}, 2 * k + 1,
                                            QMonomial{1, k + i}, PP - std::min<Exp>(th.min_exp(), 0));
                return mul(th, mm);
            });
            if (i % 2 == 0) t = negate(t);  // (-1)^{i+1}
            sum = add(sum, t);
        }
        LaurentSeries co = pochhammer_inf(QMonomial{1, 2 * k + 1}, 2 * k + 1, P);
        LaurentSeries cn = pochhammer_inf(QMonomial{-1, 2 * k + 1}, 2 * k + 1, P);
        LaurentSeries last = scalar_mul(divide(mul(co, co), mul(cn, cn)),
                                        rational((k % 2 == 0) ? 1 : -1, 2));
        sum = add(sum, last);
        return mul(scalar_mul(sum, rational(2)),
                   invert(pochhammer_inf(QMonomial{1, 1}, 1, P)));
    });
}

// J5 J10 J_{4,10} / (J_{2,5} J_{2,10}) with q -> q^4
LaurentSeries phi_j_quotient_q4(Exp N) {
    return eval_to_prec(N, 16, [&](Exp P) {
        LaurentSeries num = mul(J_const(JKind::J_m, 0, 20, P),
                                mul(J_const(JKind::J_m, 0, 40, P), jtheta(QMonomial{1, 16}, 40, P)));
        LaurentSeries den = mul(jtheta(QMonomial{1, 8}, 20, P), jtheta(QMonomial{1, 8}, 40, P));
        return divide(num, den);
    });
}

LaurentSeries phi_at_q4(Exp N) {
    return truncate(substitute_power(classical(ClassicalName::phi, N / 4 + 1), 4), N);
}

// m3 grid entries: x, M, z
struct M3Point {
    QMonomial x;
    Exp M;
    QMonomial z;
};
const std::vector<M3Point>& m3_points() {
    static const std::vector<M3Point> pts = {
        {QMonomial{1, 1}, 1, QMonomial{-1, 0}},  {QMonomial{1, 2}, 12, QMonomial{-1, 3}},
        {QMonomial{-1, 2}, 3, QMonomial{-1, 0}}, {QMonomial{1, 3}, 5, QMonomial{-1, 0}},
        {QMonomial{-1, 3}, 5, QMonomial{-1, 1}}, {QMonomial{1, 4}, 6, QMonomial{-1, 0}},
        {QMonomial{-1, 0}, 3, QMonomial{-1, 1}}, {QMonomial{1, 5}, 9, QMonomial{-1, 2}},
    };
    return pts;
}

struct FpropPoint {
    FTransformKind kind;
    Exp a, b, c;
    QMonomial x, y;
    Exp base;
};
const std::vector<FpropPoint>& fprop_points() {
    static const std::vector<FpropPoint> pts = {
        {FTransformKind::inversion, 1, 3, 1, QMonomial{1, 1}, QMonomial{1, 1}, 1},
        {FTransformKind::quadruple, 1, 3, 1, QMonomial{1, 1}, QMonomial{1, 1}, 1},
        {FTransformKind::inversion, 2, 3, 2, QMonomial{1, 2}, QMonomial{1, 2}, 1},
        {FTransformKind::quadruple, 2, 3, 2, QMonomial{1, 2}, QMonomial{1, 2}, 1},
        {FTransformKind::inversion, 1, 5, 1, QMonomial{1, 3}, QMonomial{1, 3}, 2},
        {FTransformKind::inversion, 3, 11, 3, QMonomial{1, 4}, QMonomial{1, 4}, 1},
        {FTransformKind::quadruple, 1, 5, 1, QMonomial{1, 3}, QMonomial{-1, 3}, 1},
    };
    return pts;
}

struct HmPoint {
    Exp n, p;
    QMonomial x, y;
    Exp base;
    Exp order;
};
const std::vector<HmPoint>& hm_points() {
    static const std::vector<HmPoint> pts = {
        {1, 2, QMonomial{1, 3}, QMonomial{1, 3}, 2, 40},
        {1, 4, QMonomial{1, 5}, QMonomial{1, 5}, 2, 40},
        {1, 8, QMonomial{1, 5}, QMonomial{1, 5}, 2, 40},
        {3, 8, QMonomial{1, 4}, QMonomial{1, 4}, 1, 30},
    };
    return pts;
}

std::vector<IdentityRecord> build_registry() {
    std::vector<IdentityRecord> recs;

    // --- triple product ---
    {
        IdentityRecord r;
        r.id = "jtp";
        r.citation = "Jacobi triple product identity";
        r.default_order = 50;
        for (Exp j = -4; j <= 4; ++j)
            for (int s : {1, -1})
                r.grid.push_back({{"z", QMonomial{s, j}.str()}});
        r.lhs = [](const Params& p, Exp N) {
            return theta_series(get_mono(p, "z", QMonomial::q()), N);
        };
        r.rhs = [](const Params& p, Exp N) {
            const QMonomial z = get_mono(p, "z", QMonomial::q());
            return jtheta(QMonomial{-z.sign, z.exponent + 1}, 2, N);
        };
        recs.push_back(std::move(r));
    }

    // --- Rogers-Ramanujan ---
    for (int s : {0, 1}) {
        IdentityRecord r;
        r.id = s == 0 ? "rr0" : "rr1";
        r.citation = "Rogers-Ramanujan identities";
        r.default_order = 80;
        r.grid = {{}};
        r.lhs = [s](const Params&, Exp N) { return rogers_ramanujan(s, Side::lhs, N); };
        r.rhs = [s](const Params&, Exp N) { return rogers_ramanujan(s, Side::rhs, N); };
        recs.push_back(std::move(r));
    }

    // --- Andrews-Gordon ---
    {
        IdentityRecord r;
        r.id = "andrews_gordon";
        r.citation = "Andrews-Gordon identities (s = 0 family)";
        r.default_order = 60;
        r.grid = k_grid({2, 3, 4});
        r.lhs = [](const Params& p, Exp N) {
            return andrews_gordon(get_exp(p, "k"), Side::lhs, N);
        };
        r.rhs = [](const Params& p, Exp N) {
            return andrews_gordon(get_exp(p, "k"), Side::rhs, N);
        };
        recs.push_back(std::move(r));
    }

    // --- Bailey pair defining relations ---
    {
        IdentityRecord r;
        r.id = "pair_unit";
        r.citation = "unit Bailey pair defining relation";
        r.default_order = 60;
        for (const char* a : {"q", "1"})
            for (Exp n = 0; n <= 6; ++n)
                r.grid.push_back({{"a", a}, {"n", std::to_string(n)}});
        r.lhs = [](const Params& p, Exp N) {
            const auto& pair = cached_pair("unit(" + p.at("a") + ")");
            return beta_from_definition(pair, get_exp(p, "n"), 1, N);
        };
        r.rhs = [](const Params& p, Exp N) {
            return cached_pair("unit(" + p.at("a") + ")").beta(get_exp(p, "n"), 1, N);
        };
        recs.push_back(std::move(r));
    }
    for (const char* name : {"foq", "andrews_hickerson"}) {
        IdentityRecord r;
        r.id = std::string("pair_") + (name[0] == 'f' ? "foq" : "ah");
        r.citation = name[0] == 'f' ? "Bailey pair behind the third order mock theta function f(q)"
                                    : "Andrews-Hickerson Bailey pair";
        r.default_order = 60;
        r.grid = pair_grid({}, 6);
        r.lhs = [name](const Params& p, Exp N) {
            return beta_from_definition(cached_pair(name), get_exp(p, "n"), 1, N);
        };
        r.rhs = [name](const Params& p, Exp N) {
            return cached_pair(name).beta(get_exp(p, "n"), 1, N);
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "pair_key";
        r.citation = "key Bailey pair relative to q, closed form";
        r.default_order = 60;
        r.grid = pair_grid({3, 4, 5}, 6);
        r.lhs = [](const Params& p, Exp N) {
            const auto& pair = cached_pair("key(" + p.at("k") + ")");
            return beta_from_definition(pair, get_exp(p, "n"), 1, N);
        };
        r.rhs = [](const Params& p, Exp N) {
            return cached_pair("key(" + p.at("k") + ")").beta(get_exp(p, "n"), 1, N);
        };
        recs.push_back(std::move(r));
    }

    // --- f(q) pair from the unit pair ---
    {
        IdentityRecord r;
        r.id = "foq_derivation";
        r.citation = "unit pair specialized at b = c = -1 yields the f(q) pair";
        r.default_order = 60;
        for (const char* member : {"alpha", "beta"})
            for (Exp n = 0; n <= 6; ++n)
                r.grid.push_back({{"member", member}, {"n", std::to_string(n)}});
        r.lhs = [](const Params& p, Exp N) {
            const Exp n = get_exp(p, "n");
            return p.at("member") == "alpha" ? chained_foq().alpha(n, 1, N)
                                             : chained_foq().beta(n, 1, N);
        };
        r.rhs = [](const Params& p, Exp N) {
            const Exp n = get_exp(p, "n");
            return p.at("member") == "alpha" ? cached_pair("foq").alpha(n, 1, N)
                                             : cached_pair("foq").beta(n, 1, N);
        };
        recs.push_back(std::move(r));
    }

    // --- generalized f(q) ---
    {
        IdentityRecord r;
        r.id = "genfoq";
        r.citation = "generalized f(q): multisum vs bilateral Appell form";
        r.default_order = 50;
        r.grid = k_grid({1, 2, 3});
        r.lhs = [](const Params& p, Exp N) {
            return mixed_multisum(MixedName::B1, get_exp(p, "k"), N);
        };
        r.rhs = [](const Params& p, Exp N) { return bilateral_f_sum(get_exp(p, "k"), N); };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "b1_appell";
        r.citation = "Appell-Lerch decomposition of the generalized f(q) series";
        r.default_order = 40;
        r.grid = k_grid({1, 2});
        r.lhs = [](const Params& p, Exp N) {
            return mixed_multisum(MixedName::B1, get_exp(p, "k"), N);
        };
        r.rhs = [](const Params& p, Exp N) { return b1_appell_rhs(get_exp(p, "k"), N); };
        recs.push_back(std::move(r));
    }

    // --- phi and B2 ---
    {
        IdentityRecord r;
        r.id = "phi_f";
        r.citation = "phi(q) as an indefinite theta quotient";
        r.default_order = 40;
        r.grid = {{}};
        r.lhs = [](const Params&, Exp N) { return classical(ClassicalName::phi, N); };
        r.rhs = [](const Params&, Exp N) {
            return eval_to_prec(N, 8, [&](Exp P) {
                return mul(euler_ratio(P),
                           indefinite_f(FabcParams(2, 3, 2, QMonomial{1, 2}, QMonomial{1, 2}, 1),
                                        P));
            });
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "b2_f";
        r.citation = "B2 multisum as an indefinite theta quotient";
        r.default_order = 40;
        r.grid = k_grid({1, 2});
        r.lhs = [](const Params& p, Exp N) {
            return mixed_multisum(MixedName::B2, get_exp(p, "k"), N);
        };
        r.rhs = [](const Params& p, Exp N) {
            const Exp k = get_exp(p, "k");
            return eval_to_prec(N, 8, [&](Exp P) {
                return mul(euler_ratio(P),
                           indefinite_f(FabcParams(2 * k, 2 * k + 1, 2 * k, QMonomial{1, 2 * k},
                                                   QMonomial{1, 2 * k}, 1),
                                        P));
            });
        };
        recs.push_back(std::move(r));
    }

    // --- key pair closed form vs iterated construction ---
    {
        IdentityRecord r;
        r.id = "keypair_iter";
        r.citation = "key pair equals a chain step after iterated change of base";
        r.default_order = 60;
        for (Exp k : {3, 4})
            for (const char* member : {"alpha", "beta"})
                for (Exp n = 0; n <= 5; ++n)
                    r.grid.push_back({{"k", std::to_string(k)},
                                      {"member", member},
                                      {"n", std::to_string(n)}});
        r.lhs = [](const Params& p, Exp N) {
            const Exp n = get_exp(p, "n");
            const auto& pair = cached_pair("key(" + p.at("k") + ")");
            return p.at("member") == "alpha" ? pair.alpha(n, 1, N) : pair.beta(n, 1, N);
        };
        r.rhs = [](const Params& p, Exp N) {
            const Exp n = get_exp(p, "n");
            const auto& pair = iterated_key_pair(get_exp(p, "k"));
            return p.at("member") == "alpha" ? pair.alpha(n, 1, N) : pair.beta(n, 1, N);
        };
        recs.push_back(std::move(r));
    }

    // --- multisum = f-form ---
    const struct {
        const char* id;
        const char* citation;
        int i;
        LaurentSeries (*rhs)(Exp, Exp);
    } fforms[] = {
        {"r1_f", "R1 multisum as indefinite theta series (b = -q, c -> infinity)", 1, r1_f_rhs},
        {"r2_f", "R2 multisum as indefinite theta series (b, c -> infinity)", 2, r2_f_rhs},
        {"r3_f", "R3 multisum as indefinite theta series (base q^2, b = q)", 3, r3_f_rhs},
        {"r4_f", "R4 multisum as indefinite theta series (sqrt-conjugate b, c)", 4, r4_f_rhs},
    };
    for (const auto& ff : fforms) {
        IdentityRecord r;
        r.id = ff.id;
        r.citation = ff.citation;
        r.default_order = 40;
        r.grid = k_grid({3, 4, 5}, {{5, 20}});
        const int i = ff.i;
        auto rhs_fn = ff.rhs;
        r.lhs = [i](const Params& p, Exp N) { return r_series(i, get_exp(p, "k"), N); };
        r.rhs = [rhs_fn](const Params& p, Exp N) { return rhs_fn(get_exp(p, "k"), N); };
        recs.push_back(std::move(r));
    }

    // --- multisum = Appell-Lerch form ---
    {
        IdentityRecord r;
        r.id = "r1_m";
        r.citation = "R1 Appell-Lerch decomposition";
        r.default_order = 40;
        r.grid = k_grid({3, 4, 5}, {{5, 20}});
        r.grid.push_back({{"k", "4"}, {"z", "q^8"}});  // the mockid2 path
        r.lhs = [](const Params& p, Exp N) { return r_series(1, get_exp(p, "k"), N); };
        r.rhs = [](const Params& p, Exp N) {
            return casei_rhs(get_exp(p, "k"), get_mono(p, "z", QMonomial{-1, 0}), N);
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "r2_m_odd";
        r.citation = "R2 Appell-Lerch decomposition, odd k";
        r.default_order = 40;
        r.grid = k_grid({3, 5}, {{5, 20}});
        r.lhs = [](const Params& p, Exp N) { return r_series(2, get_exp(p, "k"), N); };
        r.rhs = [](const Params& p, Exp N) {
            const Exp k = get_exp(p, "k");
            if (k % 2 == 0) throw BadParamsError("r2_m_odd: k must be odd");
            return caseii_rhs(k, get_mono(p, "z", QMonomial{-1, 0}), N);
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "r2_m_even";
        r.citation = "R2 Appell-Lerch decomposition, even k";
        r.default_order = 40;
        r.grid = k_grid({4});
        r.lhs = [](const Params& p, Exp N) { return r_series(2, get_exp(p, "k"), N); };
        r.rhs = [](const Params& p, Exp N) {
            const Exp k = get_exp(p, "k");
            if (k % 2 != 0) throw BadParamsError("r2_m_even: k must be even");
            return caseiibis_rhs(k, get_mono(p, "z", QMonomial{-1, 0}), N);
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "r3_m";
        r.citation = "R3 Appell-Lerch decomposition";
        r.default_order = 40;
        r.grid = k_grid({3, 4, 5}, {{5, 20}});
        r.lhs = [](const Params& p, Exp N) { return r_series(3, get_exp(p, "k"), N); };
        r.rhs = [](const Params& p, Exp N) { return caseiii_rhs(get_exp(p, "k"), N); };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "r4_m";
        r.citation = "R4 Appell-Lerch decomposition";
        r.default_order = 40;
        r.grid = k_grid({3, 4, 5}, {{5, 20}});
        r.lhs = [](const Params& p, Exp N) { return r_series(4, get_exp(p, "k"), N); };
        r.rhs = [](const Params& p, Exp N) { return caseiv_rhs(get_exp(p, "k"), N); };
        recs.push_back(std::move(r));
    }

    // --- Sec. 2 infrastructure grids ---
    {
        IdentityRecord r;
        r.id = "m3_grid";
        r.citation = "Appell sum base-q^4 rewriting with theta correction";
        r.default_order = 30;
        for (std::size_t i = 0; i < m3_points().size(); ++i)
            r.grid.push_back({{"point", std::to_string(i)}});
        r.lhs = [](const Params& p, Exp N) {
            const auto& pt = m3_points().at(static_cast<std::size_t>(get_exp(p, "point")));
            return appell_m(pt.x, pt.M, pt.z, N);
        };
        r.rhs = [](const Params& p, Exp N) {
            const auto& pt = m3_points().at(static_cast<std::size_t>(get_exp(p, "point")));
            return eval_to_prec(N, 16, [&](Exp P) {
                const QMonomial x2 = pt.x.pow(2);
                LaurentSeries m1 = appell_m(QMonomial{-1, pt.M} * x2, 4 * pt.M,
                                            QMonomial{-1, 0}, P);
                LaurentSeries m2 = appell_m(QMonomial{-1, -pt.M} * x2, 4 * pt.M,
                                            QMonomial{-1, 0},
                                            P + std::llabs(pt.x.exponent - pt.M) + 2);
                LaurentSeries r2 = monomial_mul(m2, pt.x.sign, pt.x.exponent - pt.M);
                return sub(sub(m1, r2), xi(pt.x, pt.M, pt.z, P));
            });
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "fprop_grid";
        r.citation = "indefinite theta series transformation properties";
        r.default_order = 30;
        for (std::size_t i = 0; i < fprop_points().size(); ++i)
            r.grid.push_back({{"set", std::to_string(i)}});
        r.lhs = [](const Params& p, Exp N) {
            const auto& pt = fprop_points().at(static_cast<std::size_t>(get_exp(p, "set")));
            return indefinite_f(FabcParams(pt.a, pt.b, pt.c, pt.x, pt.y, pt.base), N);
        };
        r.rhs = [](const Params& p, Exp N) {
            const auto& pt = fprop_points().at(static_cast<std::size_t>(get_exp(p, "set")));
            return f_transform_rhs(pt.kind, FabcParams(pt.a, pt.b, pt.c, pt.x, pt.y, pt.base), N);
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "hm_grid";
        r.citation = "Hickerson-Mortenson decomposition f = g + theta";
        r.default_order = 40;
        for (std::size_t i = 0; i < hm_points().size(); ++i)
            r.grid.push_back({{"point", std::to_string(i)},
                              {"_order", std::to_string(hm_points()[i].order)}});
        r.lhs = [](const Params& p, Exp N) {
            const auto& pt = hm_points().at(static_cast<std::size_t>(get_exp(p, "point")));
            return indefinite_f(FabcParams(pt.n, pt.n + pt.p, pt.n, pt.x, pt.y, pt.base), N);
        };
        r.rhs = [](const Params& p, Exp N) {
            const auto& pt = hm_points().at(static_cast<std::size_t>(get_exp(p, "point")));
            return eval_to_prec(N, 16, [&](Exp P) {
                return add(g_abc(pt.n, pt.n + pt.p, pt.n, pt.x, pt.y, pt.base, QMonomial{-1, 0},
                                 QMonomial{-1, 0}, P),
                           theta_np(pt.n, pt.p, pt.x, pt.y, pt.base, P));
            });
        };
        recs.push_back(std::move(r));
    }

    // --- Sec. 5 identities ---
    {
        IdentityRecord r;
        r.id = "mockid1";
        r.citation = "R1 at k = 3 equals nu(-q)";
        r.default_order = 100;
        r.grid = {{}};
        r.lhs = [](const Params&, Exp N) { return r_series(1, 3, N); };
        r.rhs = [](const Params&, Exp N) {
            return substitute_negate(classical(ClassicalName::nu, N));
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "mockid1_theta";
        r.citation = "theta-quotient identity accompanying the nu comparison";
        r.default_order = 100;
        r.grid = {{}};
        r.lhs = [](const Params&, Exp N) {
            return eval_to_prec(N, 16, [&](Exp P) {
                LaurentSeries x1 = monomial_mul(xi(QMonomial{1, 2}, 12, QMonomial{-1, 3}, P + 1),
                                                1, -1);
                x1 = scalar_mul(x1, rational(2));
                LaurentSeries jd = jtheta(QMonomial{-1, 1}, 2, P + 6);
                LaurentSeries t1 =
                    divide(theta_np(1, 4, QMonomial{-1, 3}, QMonomial{-1, 3}, 2, P), jd);
                LaurentSeries t2 =
                    divide(theta_np(1, 4, QMonomial{-1, 9}, QMonomial{-1, 9}, 2, P - 5), jd);
                return add(x1, add(t1, monomial_mul(t2, -1, 5)));
            });
        };
        r.rhs = [](const Params&, Exp N) {
            return eval_to_prec(N, 8, [&](Exp P) {
                return divide(mul(J_const(JKind::J_m, 0, 1, P), jtheta(QMonomial{1, 3}, 12, P)),
                              J_const(JKind::J_m, 0, 2, P));
            });
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "nu_appell";
        r.citation = "nu(q) as an Appell-Lerch sum plus a theta quotient";
        r.default_order = 100;
        r.grid = {{}};
        r.lhs = [](const Params&, Exp N) { return classical(ClassicalName::nu, N); };
        r.rhs = [](const Params&, Exp N) {
            return eval_to_prec(N, 16, [&](Exp P) {
                LaurentSeries mterm =
                    monomial_mul(appell_m(QMonomial{1, 2}, 12, QMonomial{-1, 3}, P + 1), 1, -1);
                mterm = scalar_mul(mterm, rational(2));
                LaurentSeries jq =
                    divide(mul(J_const(JKind::J_m, 0, 1, P), jtheta(QMonomial{1, 3}, 12, P)),
                           J_const(JKind::J_m, 0, 2, P));
                return add(mterm, jq);
            });
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "mockid2";
        r.citation = "R1 at k = 4 vs -phi(q^4) modulo an explicit theta quotient";
        r.default_order = 60;
        r.grid = {{}};
        r.lhs = [](const Params&, Exp N) {
            return add(r_series(1, 4, N), phi_at_q4(N));
        };
        r.rhs = [](const Params&, Exp N) {
            return eval_to_prec(N, 16, [&](Exp P) {
                LaurentSeries x1 = monomial_mul(
                    xi(QMonomial{1, 4}, 40, QMonomial{1, 8}, P + 4), 1, -4);
                x1 = scalar_mul(x1, rational(2));
                LaurentSeries th1 =
                    theta_over_j(1, 8, QMonomial{1, 5}, 2, QMonomial::q(), 2, P);
                LaurentSeries th2 =
                    theta_over_j(1, 8, QMonomial{1, 15}, 2, QMonomial::q(), 2, P - 9);
                return add(add(x1, phi_j_quotient_q4(P)),
                           add(th1, monomial_mul(th2, 1, 9)));
            });
        };
        recs.push_back(std::move(r));
    }

    // --- difference-series emitters (not verified; external identities not reproduced) ---
    {
        IdentityRecord r;
        r.id = "diff_mockid3";
        r.citation = "difference against q^{-1} F1(q^4); modular remainder emitted, not verified";
        r.default_order = 40;
        r.grid = {{}};
        r.diff_only = true;
        r.lhs = [](const Params&, Exp N) { return r_series(2, 3, N); };
        r.rhs = [](const Params&, Exp N) {
            LaurentSeries f1 = substitute_power(classical(ClassicalName::F1, N / 4 + 2), 4);
            return truncate(monomial_mul(f1, 1, -1), N);
        };
        recs.push_back(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "diff_mockid5";
        r.citation = "difference against the mu specialization; modular remainder emitted, not verified";
        r.default_order = 40;
        r.grid = k_grid({3});
        r.diff_only = true;
        r.lhs = [](const Params& p, Exp N) { return r_series(4, get_exp(p, "k"), N); };
        r.rhs = [](const Params& p, Exp N) {
            const Exp k = get_exp(p, "k");
            const Exp E = (Exp{1} << (k - 3)) * ((Exp{1} << (k - 2)) + 1);
            const Exp Pw = (Exp{1} << (k - 1)) * ((Exp{1} << (k - 1)) + 1);
            LaurentSeries mu = substitute_power(classical(ClassicalName::mu, (N + E) / Pw + 2), Pw);
            return truncate(monomial_mul(mu, 1, -E), N);
        };
        recs.push_back(std::move(r));
    }

    return recs;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> recs = build_registry();
    return recs;
}

const IdentityRecord& lookup(const std::string& id) {
    for (const auto& r : registry())
        if (r.id == id) return r;
    throw UnknownIdentityError("unknown identity: " + id);
}

Verdict check(const IdentityRecord& rec, const Params& params, Exp order) {
    Verdict v;
    v.id = rec.id;
    v.params = params;
    v.params.erase("_order");
    if (order <= 0) {
        auto it = params.find("_order");
        order = (it != params.end()) ? std::stoll(it->second) : rec.default_order;
    }
    v.order = order;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        LaurentSeries lhs = rec.lhs(v.params, order);
        LaurentSeries rhs = rec.rhs(v.params, order);
        if (rec.diff_only) {
            v.status = VerdictStatus::skipped;
            v.note = "difference series emitted; the required input series is external";
            v.attached = sub(lhs, rhs);
        } else if (auto d = first_difference(lhs, rhs, order)) {
            v.status = VerdictStatus::failed;
            v.first_discrepancy = d;
        } else {
            v.status = VerdictStatus::verified;
        }
    } catch (const PolarParametersError& e) {
        v.status = VerdictStatus::skipped;
        v.note = std::string("polar parameters: ") + e.what();
    } catch (const ZeroDivisorError& e) {
        v.status = VerdictStatus::skipped;
        v.note = std::string("polar parameters: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    v.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    return v;
}

Verdict check(const std::string& id, const Params& params, Exp order) {
    return check(lookup(id), params, order);
}

std::string verdict_line(const Verdict& v) {
    std::ostringstream out;
    switch (v.status) {
        case VerdictStatus::verified: out << "VERIFIED"; break;
        case VerdictStatus::failed: out << "FAILED"; break;
        case VerdictStatus::skipped: out << "SKIPPED"; break;
    }
    out << " " << v.id;
    if (!v.params.empty()) {
        out << " {";
        bool first = true;
        for (const auto& [k, val] : v.params) {
            if (!first) out << ", ";
            first = false;
            out << k << "=" << val;
        }
        out << "}";
    }
    out << " order=" << v.order;
    if (v.first_discrepancy) {
        out << " first_discrepancy: q^" << v.first_discrepancy->exponent << " lhs="
            << to_string(v.first_discrepancy->lhs) << " rhs="
            << to_string(v.first_discrepancy->rhs);
    }
    if (!v.note.empty()) out << " (" << v.note << ")";
    return out.str();
}

int run_all(Exp order, int jobs, std::ostream& report) {
    struct Task {
        const IdentityRecord* rec;
        Params params;
    };
    std::vector<Task> tasks;
    for (const auto& rec : registry())
        for (const auto& g : rec.grid) tasks.push_back({&rec, g});

    std::vector<Verdict> verdicts(tasks.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            verdicts[i] = check(*tasks[i].rec, tasks[i].params, order);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                verdicts[i] = check(*tasks[i].rec, tasks[i].params, order);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    bool any_failed = false;
    for (const auto& v : verdicts) {
        report << verdict_line(v) << "\n";
        if (v.attached) report << format_text(*v.attached);
        if (v.status == VerdictStatus::failed) any_failed = true;
    }
    return any_failed ? 1 : 0;
}

std::vector<std::string> series_catalog() {
    return {"R1", "R2", "R3", "R4", "B1", "B2", "bilateral_f", "ag_lhs", "ag_rhs",
            "F1", "foq", "nu", "phi", "mu"};
}

LaurentSeries expand_series(const std::string& id, const Params& params, Exp order) {
    auto k_of = [&](Exp def) {
        auto it = params.find("k");
        return it == params.end() ? def : std::stoll(it->second);
    };
    if (id == "R1") return r_series(1, k_of(3), order);
    if (id == "R2") return r_series(2, k_of(3), order);
    if (id == "R3") return r_series(3, k_of(3), order);
    if (id == "R4") return r_series(4, k_of(3), order);
    if (id == "B1") return mixed_multisum(MixedName::B1, k_of(1), order);
    if (id == "B2") return mixed_multisum(MixedName::B2, k_of(1), order);
    if (id == "bilateral_f") return bilateral_f_sum(k_of(1), order);
    if (id == "ag_lhs") return andrews_gordon(k_of(2), Side::lhs, order);
    if (id == "ag_rhs") return andrews_gordon(k_of(2), Side::rhs, order);
    if (id == "F1") return classical(ClassicalName::F1, order);
    if (id == "foq") return classical(ClassicalName::foq, order);
    if (id == "nu") return classical(ClassicalName::nu, order);
    if (id == "phi") return classical(ClassicalName::phi, order);
    if (id == "mu") return classical(ClassicalName::mu, order);
    throw UnknownSeriesError("unknown series: " + id);
}

}  // namespace qseries
