#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/monomial.hpp"
#include "qseries/rational.hpp"

namespace qseries {

// Truncated Laurent series over exact rationals.
//
// Coefficients of q^e are stored densely for min_exp() <= e < prec() and are
// correct for every e < prec(); nothing is claimed at or beyond prec().  The
// leading stored coefficient is nonzero unless the series is zero up to its
// precision, in which case the coefficient vector is empty and
// min_exp() == prec().
class LaurentSeries {
public:
    LaurentSeries() : min_exp_(0), prec_(0) {}

    static LaurentSeries zero(Exp prec) { return LaurentSeries(prec, prec, {}); }
    static LaurentSeries constant(const Rational& c, Exp prec);
    static LaurentSeries monomial(const QMonomial& m, Exp prec);
    static LaurentSeries monomial(const Rational& coeff, Exp exponent, Exp prec);
    // Takes coefficients for exponents min_exp, min_exp+1, ..., and normalizes.
    static LaurentSeries from_coeffs(Exp min_exp, std::vector<Rational> coeffs, Exp prec);

    Exp min_exp() const { return min_exp_; }
    Exp prec() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Requires e < prec(); exponents below min_exp() read as zero.
    const Rational& coeff(Exp e) const;

    // Dense coefficients from min_exp() to prec()-1.
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const LaurentSeries& o) const = default;

private:
    LaurentSeries(Exp min_exp, Exp prec, std::vector<Rational> coeffs)
        : min_exp_(min_exp), prec_(prec), coeffs_(std::move(coeffs)) {}

    void normalize();

    Exp min_exp_;
    Exp prec_;
    std::vector<Rational> coeffs_;

    friend LaurentSeries add(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries mul(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries invert(const LaurentSeries&);
    friend LaurentSeries substitute_power(const LaurentSeries&, Exp);
    friend LaurentSeries truncate(const LaurentSeries&, Exp);
    friend LaurentSeries scalar_mul(const LaurentSeries&, const Rational&);
    friend LaurentSeries monomial_mul(const LaurentSeries&, int, Exp);
    friend LaurentSeries substitute_negate(const LaurentSeries&);
};

// --- ring operations -------------------------------------------------------

// Coefficient-wise sum; result precision is min(a.prec, b.prec).
LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);

// Cauchy product; result precision is min(a.prec + b.min_exp, b.prec + a.min_exp).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

// Multiplicative inverse. Result has min_exp = -a.min_exp and precision
// a.prec - 2*a.min_exp (the relative precision of the unit part is preserved).
// Throws ZeroDivisorError when a is zero up to its precision.
LaurentSeries invert(const LaurentSeries& a);

inline LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b) {
    return mul(a, invert(b));
}

// a(q^m) for m >= 1. Exponents scale by m; precision becomes m * a.prec
// (coefficients at non-multiples of m below that bound are exactly zero).
LaurentSeries substitute_power(const LaurentSeries& a, Exp m);

// a(-q): negates odd-exponent coefficients, precision unchanged.
LaurentSeries substitute_negate(const LaurentSeries& a);

// Lowers precision to N. Throws PrecisionLossError when N > a.prec.
LaurentSeries truncate(const LaurentSeries& a, Exp N);

LaurentSeries scalar_mul(const LaurentSeries& a, const Rational& c);
inline LaurentSeries negate(const LaurentSeries& a) { return scalar_mul(a, rational(-1)); }

// Multiplication by sign * q^d (shifts min_exp and prec by d).
LaurentSeries monomial_mul(const LaurentSeries& a, int sign, Exp d);
inline LaurentSeries monomial_mul(const LaurentSeries& a, const QMonomial& m) {
    return monomial_mul(a, m.sign, m.exponent);
}

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }

// --- q-Pochhammer symbols ---------------------------------------------------

// (x; q^base)_n truncated at precision N; (x;q)_0 = 1.
LaurentSeries pochhammer(const QMonomial& x, Exp base, Exp n, Exp N);

// (x; q^base)_infinity truncated at precision N.
//
// Supported domains: exponent > 0 (any sign); exponent = 0 with sign -1
// (leading factor 2); x = +q^{-base*k} for k >= 0, where a factor vanishes and
// the exact zero series is returned. Everything else throws NonConvergentError.
LaurentSeries pochhammer_inf(const QMonomial& x, Exp base, Exp N);

// --- comparison -------------------------------------------------------------

struct Discrepancy {
    Exp exponent;
    Rational lhs;
    Rational rhs;
};

// First differing coefficient strictly below min(limit, a.prec, b.prec).
std::optional<Discrepancy> first_difference(const LaurentSeries& a, const LaurentSeries& b,
                                            Exp limit);

inline bool equal_below(const LaurentSeries& a, const LaurentSeries& b, Exp limit) {
    return !first_difference(a, b, limit).has_value();
}

// True when every stored coefficient below prec is an integer.
bool has_integer_coeffs(const LaurentSeries& a);

// --- precision control ------------------------------------------------------

// Re-runs `build` with increasing padding until the result's precision reaches
// `target`, then truncates to exactly `target`. `build(P)` must return a series
// whose coefficients are correct below its own recorded precision.
template <typename F>
LaurentSeries eval_to_prec(Exp target, Exp pad0, F&& build) {
    Exp pad = pad0 < 8 ? 8 : pad0;
    for (;;) {
        LaurentSeries s = build(target + pad);
        if (s.prec() >= target) return truncate(s, target);
        if (pad > (Exp{1} << 24))
            throw NonConvergentError("eval_to_prec: padding limit exceeded");
        pad *= 2;
    }
}

}  // namespace qseries
