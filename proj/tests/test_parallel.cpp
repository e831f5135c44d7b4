#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "sgharm/gelfand.hpp"
#include "sgharm/linalg.hpp"
#include "sgharm/radon.hpp"
#include "sgharm/serial.hpp"
#include "sgharm/young.hpp"

#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

using namespace sgh;

namespace {

// Runs the callable under each thread count and checks every run returns
// the same value as the single-threaded one. Exact coefficients make the
// parallel kernels insensitive to scheduling, so equality is literal.
template <typename Fn>
void same_under_thread_counts(Fn&& fn) {
#ifdef _OPENMP
    const int original = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto reference = fn();
    for (int threads : {2, 3, 8}) {
        omp_set_num_threads(threads);
        CHECK(fn() == reference);
    }
    omp_set_num_threads(original);
#else
    const auto reference = fn();
    CHECK(fn() == reference);
#endif
}

Matrix random_matrix(int rows, int cols, std::mt19937& rng) {
    Matrix m(static_cast<std::size_t>(rows),
             std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
        for (auto& entry : row)
            if (rng() % 3u) entry = test::random_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("convolution kernels agree with the serial route at any width") {
    std::mt19937 rng(151);
    const auto a = test::random_element(5, rng);
    const auto b = test::random_element(5, rng);
    const auto expected = serial::measure_convolve(a, b);

    same_under_thread_counts([&] {
        const auto got = measure_convolve(a, b);
        CHECK(got == expected);
        return got;
    });

    same_under_thread_counts([&] {
        const auto got = fn_convolve(a, b);
        CHECK(got == serial::fn_convolve(a, b));
        return got;
    });
}

TEST_CASE("rank elimination agrees with the serial route at any width") {
    std::mt19937 rng(157);
    const auto m = random_matrix(40, 40, rng);
    const int expected = serial::exact_rank(m);
    same_under_thread_counts([&] {
        const int got = exact_rank(m);
        CHECK(got == expected);
        return got;
    });

    // A matrix with known rank: the translates of a polytabloid.
    const auto t = Tableau::row_major(Partition({2, 2}));
    CHECK(ideal_dimension(t) == 2);
}

TEST_CASE("projection and coset averages are width independent") {
    std::mt19937 rng(163);
    const auto f = test::random_element(4, rng);
    same_under_thread_counts([&] {
        const auto got = biinvariant_project(f, 3);
        CHECK(got == serial::biinvariant_project(f, 3));
        return got;
    });
    same_under_thread_counts([&] {
        const auto got = horocyclic_radon(f, 3);
        CHECK(got == serial::horocyclic_radon(f, 3));
        return got;
    });
}

TEST_CASE("table transforms are width independent") {
    std::mt19937 rng(167);
    const auto f = tabulate(2000, [&](int) {
        return static_cast<double>(static_cast<int>(rng() % 19u) - 9) / 4.0;
    });
    same_under_thread_counts([&] { return coset_radon_table(f).values; });
    const auto rf = coset_radon_table(f);
    same_under_thread_counts([&] { return mobius_invert_table(rf).values; });
}

TEST_CASE("spherical search is width independent") {
    same_under_thread_counts([&] {
        const auto found = find_spherical(3);
        CHECK(found.size() == 2);
        return found.size();
    });
}
