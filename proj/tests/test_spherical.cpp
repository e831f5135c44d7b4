#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "sgharm/algebra_element.hpp"
#include "sgharm/gelfand.hpp"
#include "sgharm/spherical.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sgh;

namespace {

// f restricted to the embedded S_m: g(s) = f(embed(s)).
AlgebraElement restrict_to_level(const AlgebraElement& f, int m) {
    AlgebraElement g(m);
    for (const auto& s : enumerate_group(m)) g.add_term(s, f.at(embed(s, f.degree())));
    return g;
}

}  // namespace

TEST_CASE("level averages of the indicator basis") {
    for (int n = 2; n <= 4; ++n) {
        const auto ones = constant_fn(n + 1, 1);
        CHECK(level_subgroup_average(ones, n) == 1);
        CHECK(level_transversal_average(ones, n) == 1);

        const auto chi_on = expand(subgroup_indicator(n));
        CHECK(level_subgroup_average(chi_on, n) == 1);
        CHECK(level_transversal_average(chi_on, n) == 0);

        const auto chi_off = expand(transversal_indicator(n));
        CHECK(level_subgroup_average(chi_off, n) == 0);
        CHECK(level_transversal_average(chi_off, n) == 1);
    }
    CHECK_THROWS_AS(level_transversal_average(constant_fn(3, 1), 3),
                    std::invalid_argument);
}

TEST_CASE("the transform equals the inner product against the spherical function") {
    CHECK(spherical_coefficient(constant_fn(3, 1), 2) == 0);
    CHECK(spherical_coefficient(expand(subgroup_indicator(2)), 2) == Rational(1) / 3);
    CHECK(spherical_coefficient(expand(transversal_indicator(2)), 2) ==
          Rational(-1) / 3);

    std::mt19937 rng(71);
    for (int n = 2; n <= 5; ++n) {
        const auto phi = expand(spherical_nontrivial(n));
        const auto triv = expand(spherical_trivial(n));
        for (int i = 0; i < 5; ++i) {
            const auto f = test::random_element(n + 1, rng);
            const auto [c_triv, c_phi] = transform_pair(f, n);
            CHECK(c_phi == inner_product(f, phi));
            CHECK(c_phi == spherical_coefficient(f, n));
            CHECK(c_triv == inner_product(f, triv));
        }
    }
}

TEST_CASE("transform pair on reference inputs") {
    const auto [t1, p1] = transform_pair(constant_fn(3, 1), 2);
    CHECK(t1 == 1);
    CHECK(p1 == 0);

    const auto [t2, p2] =
        transform_pair(delta(Permutation::identity(3)) * Rational(factorial(3)), 2);
    CHECK(t2 == 1);
    CHECK(p2 == 1);
}

TEST_CASE("the transform only sees the biinvariant part") {
    std::mt19937 rng(73);
    for (int n = 2; n <= 3; ++n) {
        for (int i = 0; i < 4; ++i) {
            const auto f = test::random_element(n + 1, rng);
            CHECK(transform_pair(f, n) == transform_pair(biinvariant_project(f, n), n));
        }
    }
}

TEST_CASE("two coefficients determine biinvariant data exactly") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(invert_biinvariant(1, 0, n) == spherical_trivial(n));
        const Rational share = Rational(1) / (n + 1);
        CHECK(invert_biinvariant(share, share, n) == subgroup_indicator(n));

        std::mt19937 rng(79u + static_cast<unsigned>(n));
        for (int i = 0; i < 20; ++i) {
            const auto f = test::random_biinvariant(n, rng);
            const auto [c_triv, c_phi] = transform_pair(expand(f), n);
            CHECK(invert_biinvariant(c_triv, c_phi, n) == f);

            // And the opposite composition is the identity on coefficients.
            const auto again = transform_pair(expand(invert_biinvariant(c_triv, c_phi, n)), n);
            CHECK(again.first == c_triv);
            CHECK(again.second == c_phi);
        }
    }
}

TEST_CASE("chain levels restrict the transform down the tower") {
    const auto ones = constant_fn(4, 1);
    for (const auto& level : chain_transform(ones, 3).levels)
        CHECK(level.coefficient == 0);

    CHECK(chain_transform(delta(Permutation::identity(4)), 3)
              .levels[0]
              .coefficient == Rational(1) / 2);

    std::mt19937 rng(83);
    for (int i = 0; i < 5; ++i) {
        const auto f = test::random_element(4, rng);
        const auto chain = chain_transform(f, 3);
        REQUIRE(chain.levels.size() == 3);

        for (const auto& level : chain.levels) {
            const int k = level.level;
            CHECK(level.coefficient == (level.lambda1 - level.lambda2) / (k + 1));
            const auto restricted = restrict_to_level(f, k + 1);
            CHECK(level.coefficient == spherical_coefficient(restricted, k));
        }

        // Level 1: half the difference between the two smallest values.
        const auto id = Permutation::identity(4);
        const auto t12 = Permutation::transposition(4, 1, 2);
        CHECK(chain.levels[0].coefficient == (f.at(id) - f.at(t12)) / 2);

        // Level 2, written out term for term.
        const auto t13 = Permutation::transposition(4, 1, 3);
        const auto t23 = Permutation::transposition(4, 2, 3);
        const Rational level2 =
            (f.at(id) + f.at(t12)) / 6 -
            (f.at(t13) + f.at(compose(t13, t12)) + f.at(compose(t12, t13)) +
             f.at(t23)) /
                12;
        CHECK(chain.levels[1].coefficient == level2);
    }
}

TEST_CASE("truncated reconstruction residual on pinned inputs") {
    // The estimate omits tail terms, so the residual is reported, never
    // asserted small; these two inputs pin its value at the lowest degree.
    CHECK(truncated_inversion_residual(constant_fn(2, 1)) == -2);
    CHECK(truncated_inversion_residual(delta(Permutation::identity(2)) * 2) == 0);

    std::mt19937 rng(89);
    for (int degree = 3; degree <= 4; ++degree) {
        const auto f = test::random_element(degree, rng);
        CHECK_NOTHROW(truncated_inversion_residual(f));
    }
}
