#include "sgharm/algebra_element.hpp"
#include "sgharm/gelfand.hpp"
#include "sgharm/linalg.hpp"
#include "sgharm/radon.hpp"
#include "sgharm/serial.hpp"
#include "sgharm/young.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using sgh::AlgebraElement;
using sgh::Rational;

template <typename F>
double run_ms(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-24s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   equal %s\n",
                name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                equal ? "yes" : "NO");
}

AlgebraElement random_element(int degree, unsigned seed) {
    std::mt19937 rng(seed);
    AlgebraElement f(degree);
    for (const auto& s : sgh::enumerate_group(degree))
        if (rng() & 1)
            f.add_term(s, Rational(static_cast<int>(rng() % 19) - 9,
                                   static_cast<int>(rng() % 9) + 1));
    return f;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        const auto nu = sgh::haar(6);
        AlgebraElement a(6), b(6);
        const double s = run_ms([&] { a = sgh::serial::measure_convolve(nu, nu); });
        const double p = run_ms([&] { b = sgh::measure_convolve(nu, nu); });
        row("convolve haar(6)^2", s, p, a == b);
    }

    {
        const auto f = random_element(5, 42);
        const int n = 4;
        AlgebraElement a(5), b(5);
        const double s = run_ms([&] { a = sgh::serial::biinvariant_project(f, n); });
        const double p = run_ms([&] { b = sgh::biinvariant_project(f, n); });
        row("biinvariant project", s, p, a == b);
    }

    {
        const auto f = random_element(6, 43);
        const int n = 5;
        AlgebraElement a(6), b(6);
        const double s = run_ms([&] { a = sgh::serial::horocyclic_radon(f, n); });
        const double p = run_ms([&] { b = sgh::horocyclic_radon(f, n); });
        row("horocyclic radon", s, p, a == b);
    }

    {
        // The rank input repeats the translate family behind the ideal
        // dimension computation.
        const auto shape = sgh::Partition({3, 2});
        const auto t = sgh::Tableau::row_major(shape);
        const auto e = sgh::polytabloid(t);
        const auto group = sgh::enumerate_group(5);
        std::map<sgh::Permutation, std::size_t> col;
        for (std::size_t i = 0; i < group.size(); ++i) col.emplace(group[i], i);
        sgh::Matrix m(group.size(), std::vector<Rational>(group.size(), Rational(0)));
        for (std::size_t r = 0; r < group.size(); ++r)
            for (const auto& [s, c] : e.coeffs())
                m[r][col.at(sgh::compose(group[r], s))] = c;

        int ra = 0, rb = 0;
        const double s = run_ms([&] { ra = sgh::serial::exact_rank(m); });
        const double p = run_ms([&] { rb = sgh::exact_rank(m); });
        row("exact rank 120x120", s, p, ra == rb);
    }

    {
        const int N = 20000;
        auto f = sgh::tabulate(N, [](int k) { return 1.0 / (1.0 * k * k); }, 1.0);
        sgh::ArithmeticFn a, b;
        const double s = run_ms([&] {
            a.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
            for (int m = 1; m <= N; ++m)
                a.values[static_cast<std::size_t>(m)] = sgh::coset_radon(f, m);
        });
        const double p = run_ms([&] { b = sgh::coset_radon_table(f); });
        row("divisor table N=20000", s, p, a.values == b.values);
    }

    return 0;
}
