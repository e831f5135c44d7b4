#include "sgharm/rational.hpp"

#include <stdexcept>

namespace sgh {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    if (slash != std::string::npos && text.find('/', slash + 1) != std::string::npos)
        return std::nullopt;
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace sgh
