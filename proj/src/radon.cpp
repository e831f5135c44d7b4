#include "sgharm/radon.hpp"

#include <stdexcept>

namespace sgh {

AlgebraElement horocyclic_radon(const AlgebraElement& f, int n, int bound) {
    if (f.degree() != n + 1)
        throw std::invalid_argument("horocyclic_radon: degree mismatch");
    // (f * nu)(x) = (1/n!) sum_h f(x h^-1) and h^-1 ranges over the whole
    // subgroup, so convolving with the embedded Haar measure is the right
    // coset average.
    return measure_convolve(f, embedded_haar(n, n + 1, bound));
}

ArithmeticFn tabulate(int N, const std::function<double(int)>& f, double decay_hint) {
    if (N < 1) throw std::invalid_argument("tabulate: bound must be positive");
    ArithmeticFn t;
    t.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    t.decay_hint = decay_hint;
    for (int k = 1; k <= N; ++k) t.values[static_cast<std::size_t>(k)] = f(k);
    return t;
}

double coset_radon(const ArithmeticFn& f, int m) {
    const int N = f.bound();
    if (m < 1 || m > N) throw std::out_of_range("coset_radon: index out of range");
    double sum = 0.0;
    for (int km = m; km <= N; km += m) sum += f.at(km);
    return sum;
}

ArithmeticFn coset_radon_table(const ArithmeticFn& f) {
    const int N = f.bound();
    ArithmeticFn out;
    out.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    out.decay_hint = f.decay_hint;
    // Each output index is an independent fixed-order sum.
#pragma omp parallel for schedule(dynamic)
    for (int m = 1; m <= N; ++m)
        out.values[static_cast<std::size_t>(m)] = coset_radon(f, m);
    return out;
}

int mobius(int k) {
    if (k < 1) throw std::invalid_argument("mobius: argument must be positive");
    int primes = 0;
    for (int p = 2; static_cast<long long>(p) * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        ++primes;
    }
    if (k > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

double mobius_invert(const ArithmeticFn& rf, int m) {
    const int N = rf.bound();
    if (m < 1 || m > N) throw std::out_of_range("mobius_invert: index out of range");
    double sum = 0.0;
    for (int k = 1; k * m <= N; ++k) {
        const int mu = mobius(k);
        if (mu != 0) sum += mu * rf.at(k * m);
    }
    return sum;
}

ArithmeticFn mobius_invert_table(const ArithmeticFn& rf) {
    const int N = rf.bound();
    ArithmeticFn out;
    out.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    out.decay_hint = rf.decay_hint;
#pragma omp parallel for schedule(dynamic)
    for (int m = 1; m <= N; ++m)
        out.values[static_cast<std::size_t>(m)] = mobius_invert(rf, m);
    return out;
}

}  // namespace sgh
