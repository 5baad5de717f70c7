#pragma once

#include <functional>
#include <memory>
#include <string>

#include "qseries/series.hpp"

namespace qseries {

// A b/c-parameter for the Bailey lemma: a monomial, the b,c -> infinity limit,
// or the fused (sqrt(q), -sqrt(q)) pair (legal only when used for both slots).
struct SpecParam {
    enum class Kind { monomial, infinity, sqrt_conjugate };
    Kind kind = Kind::monomial;
    QMonomial value;

    static SpecParam monomial(const QMonomial& m) { return {Kind::monomial, m}; }
    static SpecParam infinity() { return {Kind::infinity, {}}; }
    static SpecParam sqrt_conjugate() { return {Kind::sqrt_conjugate, {}}; }
};

// A Bailey pair relative to `a`: evaluable generators for alpha_n and beta_n.
// Generators take (n, base_mult, N) and produce the sequence member with
// q -> q^{base_mult}, truncated at N. Evaluations are memoized per pair.
class BaileyPair {
public:
    using Generator = std::function<LaurentSeries(Exp n, Exp base_mult, Exp N)>;

    BaileyPair(std::string name, QMonomial a, Generator alpha, Generator beta);

    const std::string& name() const;
    const QMonomial& a() const;

    LaurentSeries alpha(Exp n, Exp base_mult, Exp N) const;
    LaurentSeries beta(Exp n, Exp base_mult, Exp N) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// beta_n computed from the defining relation sum_{k<=n} alpha_k / ((q)_{n-k} (aq)_{n+k}).
LaurentSeries beta_from_definition(const BaileyPair& p, Exp n, Exp base_mult, Exp N);

// Checks the defining relation for all n <= n_max below precision N.
bool verify_pair(const BaileyPair& p, Exp n_max, Exp N);

// One step along the Bailey chain. b and c must be monomial or infinity.
BaileyPair chain_step(const BaileyPair& p, const SpecParam& b, const SpecParam& c);

// The Bressoud-Ismail-Stanton change of base; requires relative parameter q.
BaileyPair change_base(const BaileyPair& p);

struct LimitSum {
    LaurentSeries lhs;
    LaurentSeries rhs;
};

// Both sides of the limiting Bailey lemma at the given specialization.
// `base_mult` first substitutes q -> q^{base_mult} in the entire identity;
// b and c are then taken literally in the new variable.
LimitSum bailey_limit_sum(const BaileyPair& p, const SpecParam& b, const SpecParam& c, Exp N,
                          Exp base_mult = 1);

// Built-in pairs.
BaileyPair unit_pair(const QMonomial& a);  // a = 1 uses the limit form of alpha
BaileyPair foq_pair();
BaileyPair andrews_hickerson_pair();
BaileyPair key_pair(Exp k);  // k >= 3

// Lookup by name: "unit(q)", "unit(1)", "foq", "andrews_hickerson".
BaileyPair builtin(const std::string& name);

}  // namespace qseries
