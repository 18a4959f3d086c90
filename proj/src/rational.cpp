#include "jetcomplex/rational.hpp"

#include <cctype>
#include <ostream>

namespace jetcomplex {

Rational Rational::parse(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    std::string t = s.substr(a, b - a);
    if (t.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(t));
        Integer num(t.substr(0, slash));
        Integer den(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + t + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("Rational::parse: malformed rational '" + t + "'");
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace jetcomplex
