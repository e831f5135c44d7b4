#include "sgharm/serial.hpp"

#include <stdexcept>

namespace sgh::serial {

AlgebraElement measure_convolve(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("measure_convolve: degree mismatch");
    AlgebraElement out(a.degree());
    for (const auto& [sa, ca] : a.coeffs())
        for (const auto& [sb, cb] : b.coeffs())
            out.add_term(compose(sa, sb), ca * cb);
    return out;
}

AlgebraElement fn_convolve(const AlgebraElement& f, const AlgebraElement& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("fn_convolve: degree mismatch");
    const int n = f.degree();
    const Rational order(factorial(n));
    AlgebraElement out(n);
    for (const auto& x : enumerate_group(n)) {
        Rational sum = 0;
        for (const auto& y : enumerate_group(n))
            sum += f.at(y) * g.at(compose(y.inverse(), x));
        out.add_term(x, sum / order);
    }
    return out;
}

int exact_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

AlgebraElement biinvariant_project(const AlgebraElement& f, int n) {
    if (f.degree() != n + 1)
        throw std::invalid_argument("biinvariant_project: degree mismatch");
    const Rational norm = Rational(1) / Rational(factorial(n) * factorial(n));
    std::vector<Permutation> subgroup;
    for (const auto& s : enumerate_group(n)) subgroup.push_back(embed(s, n + 1));

    AlgebraElement out(n + 1);
    for (const auto& x : enumerate_group(n + 1)) {
        Rational sum = 0;
        for (const auto& tau : subgroup)
            for (const auto& h : subgroup)
                sum += f.at(compose(tau, compose(x, h)));
        out.add_term(x, sum * norm);
    }
    return out;
}

AlgebraElement horocyclic_radon(const AlgebraElement& f, int n) {
    if (f.degree() != n + 1)
        throw std::invalid_argument("horocyclic_radon: degree mismatch");
    const Rational norm = Rational(1) / Rational(factorial(n));
    std::vector<Permutation> subgroup;
    for (const auto& s : enumerate_group(n)) subgroup.push_back(embed(s, n + 1));

    AlgebraElement out(n + 1);
    for (const auto& x : enumerate_group(n + 1)) {
        Rational sum = 0;
        for (const auto& h : subgroup) sum += f.at(compose(x, h));
        out.add_term(x, sum * norm);
    }
    return out;
}

}  // namespace sgh::serial
