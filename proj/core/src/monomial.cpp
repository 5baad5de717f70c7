#include "qseries/monomial.hpp"

#include <charconv>

namespace qseries {

std::string QMonomial::str() const {
    std::string s = sign < 0 ? "-" : "";
    if (exponent == 0) return s + "1";
    s += "q";
    if (exponent != 1) s += "^" + std::to_string(exponent);
    return s;
}

QMonomial QMonomial::parse(const std::string& text) {
    std::string t = text;
    int sign = 1;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (!t.empty() && t[0] == '-') {
        sign = -1;
        t = t.substr(1);
    }
    if (t == "1") return {sign, 0};
    if (t == "q") return {sign, 1};
    if (t.rfind("q^", 0) == 0) {
        const std::string num = t.substr(2);
        Exp e = 0;
        const char* first = num.data();
        const char* last = num.data() + num.size();
        auto [ptr, ec] = std::from_chars(first, last, e);
        if (ec == std::errc() && ptr == last) return {sign, e};
    }
    throw BadParamsError("cannot parse monomial: '" + text + "'");
}

}  // namespace qseries
