#pragma once

#include "qseries/series.hpp"

namespace qseries {

// Parameters of f_{a,b,c}(x, y, q^base); requires b^2 > ac so the paired
// quadrants carry a positive-definite growth direction.
struct FabcParams {
    Exp a, b, c;
    QMonomial x, y;
    Exp base = 1;

    FabcParams(Exp a_, Exp b_, Exp c_, QMonomial x_, QMonomial y_, Exp base_ = 1)
        : a(a_), b(b_), c(c_), x(x_), y(y_), base(base_) {
        if (a < 1 || b < 1 || c < 1) throw BadParamsError("f_{a,b,c}: a, b, c must be positive");
        if (b * b <= a * c) throw BadParamsError("f_{a,b,c}: requires b^2 > ac");
        if (base < 1) throw BadParamsError("f_{a,b,c}: base must be >= 1");
    }
};

// f_{a,b,c}(x,y,q) = (sum_{r,s>=0} - sum_{r,s<0}) sg(r) (-1)^{r+s} x^r y^s
//                     q^{a C(r,2) + b r s + c C(s,2)},  with q -> q^base.
LaurentSeries indefinite_f(const FabcParams& p, Exp N, int window_scale = 1);

// g_{a,b,c}(x,y,q,z1,z0): the Appell-Lerch part of the Hickerson-Mortenson
// decomposition, assembled from jtheta and appell_m (all bases scaled).
LaurentSeries g_abc(Exp a, Exp b, Exp c, const QMonomial& x, const QMonomial& y, Exp base,
                    const QMonomial& z1, const QMonomial& z0, Exp N);

// theta_{n,p}(x,y,q): finite double sum of theta quotients; n must be odd and
// coprime to p (even n would need half-integer powers).
LaurentSeries theta_np(Exp n, Exp p, const QMonomial& x, const QMonomial& y, Exp base, Exp N);

// Theorem check: f_{n,n+p,n}(x,y,q) = g_{n,n+p,n}(x,y,q,-1,-1) + theta_{n,p}(x,y,q) below N.
bool hm_check(Exp n, Exp p, const QMonomial& x, const QMonomial& y, Exp base, Exp N);

enum class FTransformKind { quadruple, inversion };

// Transformation checks for f_{a,b,c}: the four-term q^4 splitting and the inversion
//   f_{a,b,c}(x,y,q) = -q^{a+b+c}/(xy) f_{a,b,c}(q^{2a+b}/x, q^{2c+b}/y, q).
bool f_transform_check(FTransformKind kind, const FabcParams& p, Exp N);

// Both sides of the transformation (exposed for the registry).
LaurentSeries f_transform_rhs(FTransformKind kind, const FabcParams& p, Exp N);

}  // namespace qseries
