#pragma once

#include <string>

#include "qseries/series.hpp"

namespace qseries {

// One line per nonzero coefficient, "<exponent>\t<num>[/<den>]", increasing
// exponents, preceded by the header "# min_exp=<e> prec=<N>".
std::string format_text(const LaurentSeries& s);

// {"min_exp": e, "prec": N, "coeffs": [["num","den"], ...]} densely covering
// min_exp .. prec-1, zeros included.
std::string format_json(const LaurentSeries& s);

}  // namespace qseries
