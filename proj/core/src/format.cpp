#include "qseries/format.hpp"

#include <sstream>

namespace qseries {

std::string format_text(const LaurentSeries& s) {
    std::ostringstream out;
    out << "# min_exp=" << s.min_exp() << " prec=" << s.prec() << "\n";
    for (Exp e = s.min_exp(); e < s.prec(); ++e) {
        const Rational& c = s.coeff(e);
        if (c == 0) continue;
        out << e << "\t" << to_string(c) << "\n";
    }
    return out.str();
}

std::string format_json(const LaurentSeries& s) {
    std::ostringstream out;
    out << "{\"min_exp\": " << s.min_exp() << ", \"prec\": " << s.prec() << ", \"coeffs\": [";
    bool first = true;
    for (Exp e = s.min_exp(); e < s.prec(); ++e) {
        const Rational& c = s.coeff(e);
        if (!first) out << ", ";
        first = false;
        out << "[\"" << c.get_num().get_str() << "\", \"" << c.get_den().get_str() << "\"]";
    }
    out << "]}";
    return out.str();
}

}  // namespace qseries
