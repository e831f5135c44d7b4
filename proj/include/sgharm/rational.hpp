#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace sgh {

// Exact arbitrary-precision rational scalar. The backend keeps every value
// in lowest terms with a positive denominator, so == is value equality.
// Expression templates are off: every operation yields a plain value, which
// keeps auto, std::map emplacement and OpenMP reductions unsurprising.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using Integer = boost::multiprecision::cpp_int;

Integer factorial(int n);

// "p" when integral, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& r);

// Accepts "p" or "p/q"; nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace sgh
