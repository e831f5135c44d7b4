#pragma once

#include "sgharm/algebra_element.hpp"
#include "sgharm/radon.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sgh {

// Raised by the parsers below; line is 1-based, 0 when no line applies.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line(line) {}
    int line;
};

// Text format for a function on S_N:
//
//   degree N
//   i1 i2 ... iN  value
//   ...
//
// Each body line gives a permutation in one-line notation and its value, an
// integer or "p/q". Omitted permutations have value 0. Canonical output has
// rationals in lowest terms, no zero-valued lines, and lines sorted by the
// permutation ordering, so parse(print(f)) == f and print(parse(s)) is a
// canonical form of s.
AlgebraElement read_function(std::istream& in);
AlgebraElement read_function_file(const std::string& path);
void write_function(std::ostream& out, const AlgebraElement& f);
std::string function_to_string(const AlgebraElement& f);

// Table format for a function on 1..N: one "index value" pair per line,
// 1-indexed, missing indices 0. The bound is the largest index present
// unless a larger one is passed.
ArithmeticFn read_table(std::istream& in, int min_bound = 0);
ArithmeticFn read_table_file(const std::string& path, int min_bound = 0);
void write_table(std::ostream& out, const ArithmeticFn& f);

}  // namespace sgh
