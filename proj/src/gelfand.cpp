#include "sgharm/gelfand.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgh {

namespace {

// Exact square root over Q when one exists.
std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const Integer num = numerator(x);
    const Integer den = denominator(x);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn == num && sd * sd == den) return Rational(sn, sd);
    return std::nullopt;
}

}  // namespace

int coset_label(const Permutation& s) { return s(s.degree()); }

bool in_subgroup(const Permutation& s) { return coset_label(s) == s.degree(); }

std::vector<Permutation> double_coset_reps(int n) {
    return {Permutation::identity(n + 1), Permutation::transposition(n + 1, 1, n + 1)};
}

std::vector<std::vector<Permutation>> double_cosets(int n, int bound) {
    std::vector<std::vector<Permutation>> cosets(2);
    for (auto& s : enumerate_group(n + 1, bound))
        cosets[in_subgroup(s) ? 0 : 1].push_back(std::move(s));
    return cosets;
}

AlgebraElement expand(const BiinvariantFn& f, int bound) {
    AlgebraElement out(f.n + 1);
    for (auto& s : enumerate_group(f.n + 1, bound)) {
        const Rational& v = f(s);
        out.add_term(s, v);
    }
    return out;
}

BiinvariantFn subgroup_indicator(int n) { return {n, 1, 0}; }

BiinvariantFn transversal_indicator(int n) { return {n, 0, 1}; }

BiinvariantFn spherical_trivial(int n) { return {n, 1, 1}; }

BiinvariantFn spherical_nontrivial(int n) { return {n, 1, Rational(-1, n)}; }

std::pair<Rational, Rational> coset_averages(const AlgebraElement& f, int n) {
    if (f.degree() != n + 1)
        throw std::invalid_argument("coset_averages: degree mismatch");
    Rational sum_sub = 0, sum_trans = 0;
    for (const auto& [s, c] : f.coeffs())
        (in_subgroup(s) ? sum_sub : sum_trans) += c;
    const Integer sub_order = factorial(n);
    return {sum_sub / Rational(sub_order), sum_trans / Rational(n * sub_order)};
}

AlgebraElement biinvariant_project(const AlgebraElement& f, int n, int bound) {
    // Two-sided averaging by the subgroup only depends on the double coset,
    // so the projection is the coset-average on each of the two cosets.
    const auto [on_sub, on_trans] = coset_averages(f, n);
    return expand(BiinvariantFn{n, on_sub, on_trans}, bound);
}

bool verify_spherical(const BiinvariantFn& phi, int bound) {
    const int n = phi.n;
    const auto group = enumerate_group(n + 1, bound);
    const auto subgroup = enumerate_group(n, bound);
    const Integer sub_order = factorial(n);

    bool ok = true;
    const long long gsize = static_cast<long long>(group.size());
    // For fixed sigma, the inner average over tau only depends on
    // m = zeta(n+1): the product's bucket is decided by the point chase
    // sigma(tau_bar(m)) = n+1 or not. Count matches over tau per m, then
    // sweep all zeta against the precomputed averages.
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (long long is = 0; is < gsize; ++is) {
        const Permutation& sigma = group[static_cast<std::size_t>(is)];
        std::vector<Rational> rhs(static_cast<std::size_t>(n) + 1);
        for (int m = 1; m <= n + 1; ++m) {
            long long cnt = 0;
            for (const auto& tau : subgroup) {
                const int mid = (m <= n) ? tau(m) : n + 1;
                if (sigma(mid) == n + 1) ++cnt;
            }
            rhs[static_cast<std::size_t>(m) - 1] =
                (Rational(cnt) * phi.on_subgroup +
                 Rational(sub_order - cnt) * phi.on_transversal) /
                Rational(sub_order);
        }
        const Rational& lhs_sigma = phi(sigma);
        for (const auto& zeta : group) {
            if (lhs_sigma * phi(zeta) != rhs[static_cast<std::size_t>(zeta(n + 1)) - 1]) {
                ok = false;
                break;
            }
        }
    }
    return ok;
}

std::vector<BiinvariantFn> find_spherical(int n, int bound) {
    // phi(id) = 1 and biinvariance force phi = 1 on the whole subgroup, so
    // only the off-subgroup value alpha is free. The functional equation at
    // sigma = zeta = t_{1,n+1} reads alpha^2 = (c + (n! - c) alpha) / n!
    // with c the number of tau for which the product falls back into the
    // subgroup; its rational roots are the only candidates, and each one is
    // screened by the exhaustive check.
    const auto subgroup = enumerate_group(n, bound);
    const Permutation rep = Permutation::transposition(n + 1, 1, n + 1);

    long long c = 0;
    const int m = rep(n + 1);
    for (const auto& tau : subgroup) {
        const int mid = (m <= n) ? tau(m) : n + 1;
        if (rep(mid) == n + 1) ++c;
    }

    const Rational order(factorial(n));
    const Rational p = (order - c) / order;
    const Rational q = Rational(c) / order;

    std::vector<Rational> roots;
    if (const auto s = rational_sqrt(p * p + 4 * q)) {
        roots.push_back((p + *s) / 2);
        if (*s != 0) roots.push_back((p - *s) / 2);
    }

    std::vector<BiinvariantFn> out;
    for (const auto& alpha : roots) {
        BiinvariantFn cand{n, 1, alpha};
        if (verify_spherical(cand, bound)) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(), [](const BiinvariantFn& a, const BiinvariantFn& b) {
        return a.on_transversal > b.on_transversal;
    });
    return out;
}

}  // namespace sgh
