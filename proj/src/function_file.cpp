#include "sgharm/function_file.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace sgh {

namespace {

bool blank_or_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

AlgebraElement read_function(std::istream& in) {
    std::string line;
    int lineno = 0;
    int degree = -1;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword != "degree")
            throw ParseError(lineno, "expected header \"degree N\"");
        if (!(ls >> degree) || degree < 1)
            throw ParseError(lineno, "bad degree value");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after degree");
        break;
    }
    if (degree < 1) throw ParseError(0, "missing \"degree N\" header");

    AlgebraElement f(degree);
    std::set<Permutation> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::vector<int> images(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i)
            if (!(ls >> images[static_cast<std::size_t>(i)]))
                throw ParseError(lineno, "expected " + std::to_string(degree) +
                                             " images before the value");
        std::string value_text;
        if (!(ls >> value_text)) throw ParseError(lineno, "missing value");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after value");

        const auto value = parse_rational(value_text);
        if (!value) throw ParseError(lineno, "bad rational \"" + value_text + "\"");

        try {
            Permutation s(images);
            if (!seen.insert(s).second)
                throw ParseError(lineno, "duplicate permutation");
            f.add_term(s, *value);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return f;
}

AlgebraElement read_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_function(in);
}

void write_function(std::ostream& out, const AlgebraElement& f) {
    out << "degree " << f.degree() << "\n";
    for (const auto& [s, c] : f.coeffs())
        out << to_string(s) << "  " << format_rational(c) << "\n";
}

std::string function_to_string(const AlgebraElement& f) {
    std::ostringstream os;
    write_function(os, f);
    return os.str();
}

ArithmeticFn read_table(std::istream& in, int min_bound) {
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, double>> entries;
    int max_index = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        int index = 0;
        double value = 0.0;
        if (!(ls >> index) || index < 1) throw ParseError(lineno, "bad index");
        if (!(ls >> value)) throw ParseError(lineno, "missing value");
        if (!std::isfinite(value)) throw ParseError(lineno, "value must be finite");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after value");
        entries.emplace_back(index, value);
        max_index = std::max(max_index, index);
    }

    const int N = std::max(max_index, min_bound);
    if (N < 1) throw ParseError(0, "empty table");
    ArithmeticFn f;
    f.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(N) + 1, false);
    for (const auto& [index, value] : entries) {
        if (seen[static_cast<std::size_t>(index)])
            throw ParseError(0, "duplicate index " + std::to_string(index));
        seen[static_cast<std::size_t>(index)] = true;
        f.values[static_cast<std::size_t>(index)] = value;
    }
    return f;
}

ArithmeticFn read_table_file(const std::string& path, int min_bound) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_table(in, min_bound);
}

void write_table(std::ostream& out, const ArithmeticFn& f) {
    char buf[64];
    for (int k = 1; k <= f.bound(); ++k) {
        const double v = f.at(k);
        if (v == 0.0) continue;
        // %.17g round trips doubles exactly.
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << k << " " << buf << "\n";
    }
}

}  // namespace sgh
