#include "hcw/rational.hpp"

#include <ostream>

namespace hcw {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

std::string GaussianRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.is_zero() ? "" : re.to_string();
    if (im.sign() >= 0 && !s.empty()) s += "+";
    s += im.to_string() + "i";
    return s;
}

}  // namespace hcw
