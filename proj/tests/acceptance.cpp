// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Each criterion restates its expected values locally instead of calling
// the library's own verification suite.

#include "sgharm/algebra_element.hpp"
#include "sgharm/gelfand.hpp"
#include "sgharm/heat.hpp"
#include "sgharm/linalg.hpp"
#include "sgharm/radon.hpp"
#include "sgharm/serial.hpp"
#include "sgharm/spherical.hpp"
#include "sgharm/young.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace sgh;

namespace {

struct Criterion {
    std::string failure;

    void req(bool ok, const std::string& why) {
        if (!ok && failure.empty()) failure = why;
    }
};

int g_failures = 0;

void run(const std::string& name, double budget_seconds,
         const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    body(c);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (budget_seconds > 0 && elapsed > budget_seconds && c.failure.empty())
        c.failure = "exceeded " + std::to_string(budget_seconds) + " s budget";
    if (c.failure.empty()) {
        std::printf("PASS %s (%.2f s)\n", name.c_str(), elapsed);
    } else {
        std::printf("FAIL %s (%.2f s): %s\n", name.c_str(), elapsed,
                    c.failure.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

Rational random_rational(std::mt19937& rng) {
    return Rational(static_cast<int>(rng() % 19u) - 9) /
           (static_cast<int>(rng() % 9u) + 1);
}

AlgebraElement random_element(int degree, std::mt19937& rng) {
    AlgebraElement f(degree);
    for (const auto& s : enumerate_group(degree))
        if (rng() & 1u) f.add_term(s, random_rational(rng));
    return f;
}

std::map<Tabloid, Rational> tabloid_expansion(const Tableau& t) {
    std::map<Tabloid, Rational> e;
    for (const auto& q : column_stabilizer(t)) {
        auto [it, inserted] = e.try_emplace(Tabloid(apply(q, t)), signature(q));
        if (!inserted) {
            it->second += signature(q);
            if (it->second == 0) e.erase(it);
        }
    }
    return e;
}

std::map<Tabloid, Rational> translate_tabloids(const Permutation& pi,
                                               const std::map<Tabloid, Rational>& e) {
    std::map<Tabloid, Rational> out;
    for (const auto& [tab, coef] : e) {
        auto rows = tab.rows();
        for (auto& row : rows) {
            for (int& v : row) v = pi(v);
            std::sort(row.begin(), row.end());
        }
        out.emplace(Tabloid(tab.shape(), std::move(rows)), coef);
    }
    return out;
}

void double_coset_structure(Criterion& c) {
    for (int n = 2; n <= 6; ++n) {
        const auto cosets = double_cosets(n);
        c.req(cosets.size() == 2, "expected exactly two double cosets");
        c.req(Integer(cosets[0].size()) == factorial(n), "subgroup coset size");
        c.req(Integer(cosets[1].size()) == n * factorial(n), "transversal size");
        std::set<Permutation> all;
        for (const auto& coset : cosets) all.insert(coset.begin(), coset.end());
        c.req(Integer(all.size()) == factorial(n + 1),
              "cosets must partition the group");
        for (const auto& s : cosets[0]) c.req(in_subgroup(s), "misplaced element");
        for (const auto& s : cosets[1]) c.req(!in_subgroup(s), "misplaced element");
    }
}

void indicator_self_convolution(Criterion& c) {
    for (int n = 2; n <= 5; ++n) {
        const auto chi_off = expand(transversal_indicator(n));
        const auto chi_on = expand(subgroup_indicator(n));
        const auto expected = chi_off * (Rational(n - 1) / (n + 1)) +
                              chi_on * (Rational(n) / (n + 1));
        c.req(serial::fn_convolve(chi_off, chi_off) == expected,
              "self convolution of the off-subgroup indicator, n=" +
                  std::to_string(n));
    }
}

void unit_and_commutativity(Criterion& c) {
    std::mt19937 rng(211);
    for (int n = 2; n <= 5; ++n) {
        const auto chi_on = expand(subgroup_indicator(n));
        const auto unit = chi_on * Rational(n + 1);
        c.req(fn_convolve(chi_on, chi_on) == chi_on * (Rational(1) / (n + 1)),
              "subgroup indicator self convolution, n=" + std::to_string(n));
        for (int i = 0; i < 3; ++i) {
            const auto f = expand(BiinvariantFn{n, random_rational(rng),
                                                random_rational(rng)});
            const auto g = expand(BiinvariantFn{n, random_rational(rng),
                                                random_rational(rng)});
            c.req(fn_convolve(unit, f) == f && fn_convolve(f, unit) == f,
                  "two-sided unit, n=" + std::to_string(n));
            c.req(fn_convolve(f, g) == fn_convolve(g, f),
                  "commutativity, n=" + std::to_string(n));
        }
    }
}

void spherical_certification(Criterion& c) {
    for (int n = 2; n <= 4; ++n) {
        // Candidates off the subgroup: the roots of a(a-1)(a+1/n) and values
        // away from them. Exactly a=1 and a=-1/n solve the mean equation.
        const std::vector<Rational> candidates = {
            Rational(0),  Rational(1),  Rational(-1) / n,
            Rational(1) / 2, Rational(2), Rational(-2)};
        for (const auto& alpha : candidates) {
            const bool expected = (alpha == 1 || alpha == Rational(-1) / n);
            c.req(verify_spherical(BiinvariantFn{n, 1, alpha}) == expected,
                  "candidate sweep at n=" + std::to_string(n));
        }
        const auto found = find_spherical(n);
        c.req(found.size() == 2 && found[0] == spherical_trivial(n) &&
                  found[1] == spherical_nontrivial(n),
              "search must return the two spherical functions");
    }
    const auto phi2 = expand(spherical_nontrivial(2));
    c.req(inner_product(phi2, phi2) == Rational(1) / 2,
          "norm of the nontrivial spherical function at n=2");
}

void transform_and_inversion(Criterion& c) {
    for (int n = 2; n <= 5; ++n) {
        std::mt19937 rng(223u + static_cast<unsigned>(n));
        const auto phi = expand(spherical_nontrivial(n));
        for (int i = 0; i < 100; ++i) {
            const auto f = random_element(n + 1, rng);
            const Rational via_averages =
                (level_subgroup_average(f, n) - level_transversal_average(f, n)) /
                (n + 1);
            c.req(spherical_coefficient(f, n) == via_averages,
                  "transform must be the scaled average difference");
            c.req(via_averages == inner_product(f, phi),
                  "transform must be the inner product against the spherical fn");
        }
        for (int i = 0; i < 100; ++i) {
            const BiinvariantFn f{n, random_rational(rng), random_rational(rng)};
            const auto [ct, cp] = transform_pair(expand(f), n);
            c.req(invert_biinvariant(ct, cp, n) == f,
                  "round trip through the weights (1, n)");
        }
    }
}

void ladder_levels(Criterion& c) {
    std::mt19937 rng(227);
    for (int degree = 4; degree <= 5; ++degree) {
        const auto id = Permutation::identity(degree);
        const auto t12 = Permutation::transposition(degree, 1, 2);
        const auto t13 = Permutation::transposition(degree, 1, 3);
        const auto t23 = Permutation::transposition(degree, 2, 3);
        for (int i = 0; i < 10; ++i) {
            const auto f = random_element(degree, rng);
            const auto chain = chain_transform(f, degree - 1);
            c.req(chain.levels[0].coefficient == (f.at(id) - f.at(t12)) / 2,
                  "level one formula");
            const Rational level2 =
                (f.at(id) + f.at(t12)) / 6 -
                (f.at(t13) + f.at(compose(t13, t12)) + f.at(compose(t12, t13)) +
                 f.at(t23)) /
                    12;
            c.req(chain.levels[1].coefficient == level2, "level two formula");
        }
        const auto sample = random_element(degree, rng);
        std::printf("  info: truncated reconstruction residual (degree %d) = %s\n",
                    degree,
                    format_rational(truncated_inversion_residual(sample)).c_str());
    }
}

void polytabloid_suite(Criterion& c) {
    for (int n = 2; n <= 5; ++n) {
        Integer square_sum = 0;
        for (const auto& shape : partitions_of(n)) {
            const int dim = ideal_dimension(shape);
            square_sum += Integer(dim) * dim;
            const auto fillings = standard_fillings(shape);
            c.req(fillings.size() == static_cast<std::size_t>(dim),
                  "standard filling count vs dimension");
            for (const auto& t : fillings) {
                const auto e = polytabloid(t);
                const auto lambda = essential_idempotency(e);
                c.req(lambda.has_value() && *lambda != 0,
                      "polytabloid must be essentially idempotent");
                if (lambda)
                    c.req(*lambda * ideal_dimension(t) == factorial(n),
                          "scalar times dimension must be the group order");
            }
        }
        c.req(square_sum == factorial(n), "dimension squares must sum to n!");
    }

    // The structural identities for moved fillings, exhaustively at degree 4.
    for (const auto& shape : partitions_of(4)) {
        for (const auto& t : standard_fillings(shape)) {
            const auto e = polytabloid(t);
            const auto em = tabloid_expansion(t);
            for (const auto& pi : enumerate_group(4)) {
                const auto moved = apply(pi, t);
                auto conjugated = [&](std::vector<Permutation> subgroup) {
                    for (auto& s : subgroup) s = compose(compose(pi, s), pi.inverse());
                    std::sort(subgroup.begin(), subgroup.end());
                    return subgroup;
                };
                auto sorted = [](std::vector<Permutation> v) {
                    std::sort(v.begin(), v.end());
                    return v;
                };
                c.req(sorted(row_stabilizer(moved)) == conjugated(row_stabilizer(t)),
                      "row stabilizer must conjugate");
                c.req(sorted(column_stabilizer(moved)) ==
                          conjugated(column_stabilizer(t)),
                      "column stabilizer must conjugate");
                c.req(measure_convolve(measure_convolve(delta(pi), e),
                                       delta(pi.inverse())) == polytabloid(moved),
                      "polytabloid of the moved filling is the conjugate");
                c.req(translate_tabloids(pi, em) == tabloid_expansion(moved),
                      "tabloid expansion must translate");
            }
        }
    }
}

void divisor_radon(Criterion& c) {
    std::mt19937 rng(229);
    ArithmeticFn f = tabulate(400, [](int) { return 0.0; });
    for (int k = 1; k <= 20; ++k)
        f.values[static_cast<std::size_t>(k)] =
            static_cast<double>(static_cast<int>(rng() % 19u) - 9);
    const auto rf = coset_radon_table(f);
    for (int m = 1; m <= 400; ++m)
        c.req(mobius_invert(rf, m) == f.at(m),
              "finite support round trip must be exact");

    const int N = 10000;
    const auto cubes = tabulate(
        N, [](int k) { return 1.0 / (static_cast<double>(k) * k * k); }, 2.0);
    const auto rcubes = coset_radon_table(cubes);
    for (int m = 1; m <= 10; ++m)
        c.req(std::abs(mobius_invert(rcubes, m) - cubes.at(m)) < 1e-6,
              "decaying tail reconstruction within 1e-6");
}

void heat_collapse(Criterion& c) {
    for (int n = 2; n <= 6; ++n) {
        const auto nu = embedded_haar(n, n + 1);
        c.req(measure_convolve(nu, nu) == nu,
              "averaging kernel must be idempotent, n=" + std::to_string(n));
    }
    std::mt19937 rng(233);
    for (int n = 2; n <= 4; ++n) {
        const auto f0 = random_element(n + 1, rng);
        HeatState walk{0, n, f0};
        for (int k = 1; k <= 10; ++k) {
            walk = heat_step(walk);
            c.req(heat_solve(f0, k, n) == walk.state,
                  "closed form vs iteration at step " + std::to_string(k));
        }
        const auto spike = delta(Permutation::identity(n + 1));
        for (int k = 1; k <= 10; ++k)
            c.req(heat_solve(spike, k, n) == embedded_haar(n, n + 1),
                  "point mass must land on the kernel");
    }
}

void mutation_falsifiability(Criterion& c) {
#ifdef SGHARM_CLI_BIN
    const std::string bin = SGHARM_CLI_BIN;
    const std::string quiet = " > /dev/null 2>&1";
    c.req(std::system((bin + " verify --n-max 2" + quiet).c_str()) == 0,
          "unmutated run must exit 0");
    for (const std::string id :
         {"haar-idempotency", "chi-sub-selfconv", "chi-trans-selfconv",
          "unit-normalization", "spherical-value", "inversion-weight",
          "ladder-level1", "mobius-at-6"}) {
        const int rc = std::system(
            (bin + " verify --n-max 2 --mutate " + id + quiet).c_str());
        c.req(rc != 0, "corrupted constant \"" + id + "\" must flip the exit code");
    }
#else
    c.req(false, "built without the path to the command line binary");
#endif
}

}  // namespace

int main() {
    run("double-coset-structure", 5.0, double_coset_structure);
    run("indicator-self-convolution", 0.0, indicator_self_convolution);
    run("unit-and-commutativity", 0.0, unit_and_commutativity);
    run("spherical-certification", 0.0, spherical_certification);
    run("transform-and-inversion", 0.0, transform_and_inversion);
    run("ladder-levels", 0.0, ladder_levels);
    run("polytabloid-suite", 0.0, polytabloid_suite);
    run("divisor-radon", 5.0, divisor_radon);
    run("heat-collapse", 0.0, heat_collapse);
    run("mutation-falsifiability", 0.0, mutation_falsifiability);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
