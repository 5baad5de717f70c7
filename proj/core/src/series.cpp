#include "qseries/series.hpp"

#include <algorithm>

namespace qseries {

namespace {

constexpr Exp kMaxLength = Exp{1} << 26;

void check_length(Exp min_exp, Exp prec) {
    if (prec - min_exp > kMaxLength)
        throw NonConvergentError("series length limit exceeded");
}

const Rational kZero = 0;

}  // namespace

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = prec_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_exp_ += static_cast<Exp>(lead);
    }
}

LaurentSeries LaurentSeries::constant(const Rational& c, Exp prec) {
    return monomial(c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(const QMonomial& m, Exp prec) {
    return monomial(rational(m.sign), m.exponent, prec);
}

LaurentSeries LaurentSeries::monomial(const Rational& coeff, Exp exponent, Exp prec) {
    if (coeff == 0 || exponent >= prec) return zero(prec);
    check_length(exponent, prec);
    std::vector<Rational> cs(static_cast<std::size_t>(prec - exponent));
    cs[0] = coeff;
    return LaurentSeries(exponent, prec, std::move(cs));
}

LaurentSeries LaurentSeries::from_coeffs(Exp min_exp, std::vector<Rational> coeffs, Exp prec) {
    if (min_exp >= prec) return zero(prec);
    if (min_exp + static_cast<Exp>(coeffs.size()) > prec)
        coeffs.resize(static_cast<std::size_t>(prec - min_exp));
    else if (min_exp + static_cast<Exp>(coeffs.size()) < prec) {
        check_length(min_exp, prec);
        coeffs.resize(static_cast<std::size_t>(prec - min_exp));
    }
    LaurentSeries s(min_exp, prec, std::move(coeffs));
    s.normalize();
    return s;
}

const Rational& LaurentSeries::coeff(Exp e) const {
    if (e >= prec_)
        throw PrecisionLossError("coefficient requested at or beyond recorded precision");
    if (e < min_exp_) return kZero;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    const Exp prec = std::min(a.prec_, b.prec_);
    if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(prec);
    const Exp lo = std::min(a.is_zero() ? prec : a.min_exp_, b.is_zero() ? prec : b.min_exp_);
    if (lo >= prec) return LaurentSeries::zero(prec);
    check_length(lo, prec);
    std::vector<Rational> cs(static_cast<std::size_t>(prec - lo));
    for (Exp e = a.min_exp_; e < std::min(a.prec_, prec); ++e) {
        const Rational& c = a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
        if (c != 0) cs[static_cast<std::size_t>(e - lo)] = c;
    }
    for (Exp e = b.min_exp_; e < std::min(b.prec_, prec); ++e) {
        const Rational& c = b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)];
        if (c != 0) cs[static_cast<std::size_t>(e - lo)] += c;
    }
    return LaurentSeries::from_coeffs(lo, std::move(cs), prec);
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, negate(b)); }

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    const Exp prec = std::min(a.prec_ + b.min_exp_, b.prec_ + a.min_exp_);
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(prec);
    const Exp lo = a.min_exp_ + b.min_exp_;
    if (lo >= prec) return LaurentSeries::zero(prec);
    check_length(lo, prec);
    // iterate the sparser operand outside
    const LaurentSeries& s = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
    const LaurentSeries& t = a.coeffs_.size() <= b.coeffs_.size() ? b : a;
    std::vector<Rational> cs(static_cast<std::size_t>(prec - lo));
    Rational tmp;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        const Rational& si = s.coeffs_[i];
        if (si == 0) continue;
        const Exp es = s.min_exp_ + static_cast<Exp>(i);
        const Exp jmax = std::min<Exp>(static_cast<Exp>(t.coeffs_.size()),
                                       prec - es - t.min_exp_);
        for (Exp j = 0; j < jmax; ++j) {
            const Rational& tj = t.coeffs_[static_cast<std::size_t>(j)];
            if (tj == 0) continue;
            tmp = si * tj;
            cs[static_cast<std::size_t>(es + t.min_exp_ + j - lo)] += tmp;
        }
    }
    return LaurentSeries::from_coeffs(lo, std::move(cs), prec);
}

LaurentSeries invert(const LaurentSeries& a) {
    if (a.is_zero()) throw ZeroDivisorError("invert: zero series");
    const Exp m = a.min_exp_;
    const std::size_t len = a.coeffs_.size();  // = prec - m
    std::vector<Rational> v(len);
    const Rational& u0 = a.coeffs_[0];
    v[0] = 1 / Rational(u0);
    Rational acc, tmp;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            const Rational& ui = a.coeffs_[i];
            if (ui == 0) continue;
            tmp = ui * v[n - i];
            acc += tmp;
        }
        acc = -acc;
        v[n] = acc / u0;
    }
    return LaurentSeries::from_coeffs(-m, std::move(v), -m + static_cast<Exp>(len));
}

LaurentSeries substitute_power(const LaurentSeries& a, Exp m) {
    if (m < 1) throw BadParamsError("substitute_power: m must be >= 1");
    const Exp prec = m * a.prec_;
    if (a.is_zero()) return LaurentSeries::zero(prec);
    check_length(m * a.min_exp_, prec);
    std::vector<Rational> cs(static_cast<std::size_t>(prec - m * a.min_exp_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        cs[i * static_cast<std::size_t>(m)] = a.coeffs_[i];
    return LaurentSeries::from_coeffs(m * a.min_exp_, std::move(cs), prec);
}

LaurentSeries substitute_negate(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        if ((r.min_exp_ + static_cast<Exp>(i)) % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
}

LaurentSeries truncate(const LaurentSeries& a, Exp N) {
    if (N > a.prec_)
        throw PrecisionLossError("truncate: requested precision exceeds recorded precision");
    if (N <= a.min_exp_) return LaurentSeries::zero(N);
    std::vector<Rational> cs(a.coeffs_.begin(),
                             a.coeffs_.begin() + static_cast<std::ptrdiff_t>(N - a.min_exp_));
    return LaurentSeries::from_coeffs(a.min_exp_, std::move(cs), N);
}

LaurentSeries scalar_mul(const LaurentSeries& a, const Rational& c) {
    if (c == 0) return LaurentSeries::zero(a.prec_);
    LaurentSeries r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentSeries monomial_mul(const LaurentSeries& a, int sign, Exp d) {
    LaurentSeries r = a;
    r.min_exp_ += d;
    r.prec_ += d;
    if (sign < 0)
        for (auto& x : r.coeffs_) x = -x;
    return r;
}

LaurentSeries pochhammer(const QMonomial& x, Exp base, Exp n, Exp N) {
    if (base < 1) throw BadParamsError("pochhammer: base must be >= 1");
    if (n < 0) throw BadParamsError("pochhammer: n must be >= 0");
    // negative-exponent factors lower the product's precision; pad upfront
    Exp pad = 0;
    for (Exp i = 0; i < n; ++i) {
        const Exp e = x.exponent + base * i;
        if (e < 0) pad -= e;
    }
    LaurentSeries r = LaurentSeries::constant(1, N + pad);
    for (Exp i = 0; i < n; ++i) {
        const Exp e = x.exponent + base * i;
        LaurentSeries f =
            add(LaurentSeries::constant(1, N + pad),
                LaurentSeries::monomial(rational(-x.sign), e, N + pad));
        r = mul(r, f);
    }
    return truncate(r, std::min(N, r.prec()));
}

LaurentSeries pochhammer_inf(const QMonomial& x, Exp base, Exp N) {
    if (base < 1) throw BadParamsError("pochhammer_inf: base must be >= 1");
    if (x.exponent <= 0) {
        if (x.exponent == 0 && x.sign == 1) return LaurentSeries::zero(N);
        if (x.sign == 1 && x.exponent % base == 0) return LaurentSeries::zero(N);
        if (x.exponent < 0)
            throw NonConvergentError("pochhammer_inf: argument exponent must be positive");
    }
    LaurentSeries r = LaurentSeries::constant(1, N);
    for (Exp i = 0;; ++i) {
        const Exp e = x.exponent + base * i;
        if (e >= N) break;
        if (e == 0) {
            // sign is -1 here: leading factor (1 - (-1)) = 2
            r = scalar_mul(r, rational(2));
            continue;
        }
        r = mul(r, add(LaurentSeries::constant(1, N),
                       LaurentSeries::monomial(rational(-x.sign), e, N)));
    }
    return truncate(r, N);
}

std::optional<Discrepancy> first_difference(const LaurentSeries& a, const LaurentSeries& b,
                                            Exp limit) {
    const Exp hi = std::min({limit, a.prec(), b.prec()});
    const Exp lo = std::min(a.is_zero() ? hi : a.min_exp(), b.is_zero() ? hi : b.min_exp());
    for (Exp e = lo; e < hi; ++e) {
        const Rational& ca = (e < a.min_exp() || e >= a.prec()) ? kZero : a.coeff(e);
        const Rational& cb = (e < b.min_exp() || e >= b.prec()) ? kZero : b.coeff(e);
        if (ca != cb) return Discrepancy{e, ca, cb};
    }
    return std::nullopt;
}

bool has_integer_coeffs(const LaurentSeries& a) {
    for (const auto& c : a.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

}  // namespace qseries
