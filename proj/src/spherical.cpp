#include "sgharm/spherical.hpp"

#include <stdexcept>

namespace sgh {

namespace {

// True when s fixes every point above k, i.e. s lies in the embedded S_k.
bool fixes_above(const Permutation& s, int k) {
    for (int i = k + 1; i <= s.degree(); ++i)
        if (s(i) != i) return false;
    return true;
}

}  // namespace

Rational level_subgroup_average(const AlgebraElement& f, int k) {
    if (k < 1 || k > f.degree())
        throw std::invalid_argument("level_subgroup_average: level out of range");
    Rational sum = 0;
    for (const auto& [s, c] : f.coeffs())
        if (fixes_above(s, k)) sum += c;
    return sum / Rational(factorial(k));
}

Rational level_transversal_average(const AlgebraElement& f, int k) {
    if (k < 1 || k + 1 > f.degree())
        throw std::invalid_argument("level_transversal_average: level out of range");
    Rational sum = 0;
    for (const auto& [s, c] : f.coeffs())
        if (fixes_above(s, k + 1) && s(k + 1) != k + 1) sum += c;
    return sum / Rational(k * factorial(k));
}

Rational spherical_coefficient(const AlgebraElement& f, int n) {
    return (level_subgroup_average(f, n) - level_transversal_average(f, n)) /
           Rational(n + 1);
}

std::pair<Rational, Rational> transform_pair(const AlgebraElement& f, int n) {
    if (f.degree() != n + 1)
        throw std::invalid_argument("transform_pair: degree mismatch");
    return {f.total_mass() / Rational(factorial(n + 1)), spherical_coefficient(f, n)};
}

BiinvariantFn invert_biinvariant(const Rational& coef_trivial,
                                 const Rational& coef_phi, int n) {
    return {n, coef_trivial + Rational(n) * coef_phi, coef_trivial - coef_phi};
}

ChainAverages chain_transform(const AlgebraElement& f, int N) {
    if (N < 1 || N + 1 > f.degree())
        throw std::invalid_argument("chain_transform: level count out of range");
    ChainAverages out;
    for (int k = 1; k <= N; ++k) {
        ChainLevel lvl;
        lvl.level = k;
        lvl.lambda1 = level_subgroup_average(f, k);
        lvl.lambda2 = level_transversal_average(f, k);
        lvl.coefficient = (lvl.lambda1 - lvl.lambda2) / Rational(k + 1);
        out.levels.push_back(std::move(lvl));
    }
    return out;
}

Rational truncated_inversion_residual(const AlgebraElement& f) {
    const int n = f.degree() - 1;
    if (n < 1) throw std::invalid_argument("residual needs degree at least 2");

    const ChainAverages chain = chain_transform(f, n);
    Rational head = 0;
    for (int k = 1; k <= n; ++k)
        head += Rational(factorial(1 + k)) * chain.levels[static_cast<std::size_t>(k) - 1].coefficient;

    Rational correction = 0;
    for (int k = 2; k <= n; ++k)
        correction += Rational(n - k) * f.at(Permutation::transposition(n + 1, 1, k));

    const Rational estimate = head / n - correction / n -
                              f.at(Permutation::transposition(n + 1, 1, n + 1)) /
                                  Rational(n * n);
    return estimate - f.at(Permutation::identity(n + 1));
}

}  // namespace sgh
