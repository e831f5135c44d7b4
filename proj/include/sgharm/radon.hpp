#pragma once

#include "sgharm/algebra_element.hpp"

#include <functional>
#include <vector>

namespace sgh {

// Rf(x) = average of f over the right coset x S_n inside S_{n+1}, computed
// as f convolved with the embedded Haar measure of S_n. Constant on right
// cosets and idempotent (averaging twice changes nothing).
AlgebraElement horocyclic_radon(const AlgebraElement& f, int n,
                                int bound = kEnumerationBound);

// Finite table of real values f(1..N); index 0 is unused. The divisor sums
// below truncate at N, so values should decay fast enough that the tail past
// N is negligible: with |f(k)| < c k^(-1-eps) the tail of the sum at m is
// below c * N^(-eps) / m. decay_hint records eps for callers choosing N; the
// transforms themselves never read it.
struct ArithmeticFn {
    std::vector<double> values;  // size N+1, values[0] ignored
    double decay_hint = 0.0;

    int bound() const { return static_cast<int>(values.size()) - 1; }
    double at(int k) const { return values[static_cast<std::size_t>(k)]; }
};

// Builds a table from a callable on 1..N.
ArithmeticFn tabulate(int N, const std::function<double(int)>& f,
                      double decay_hint = 0.0);

// Rf(m) = sum of f over the multiples of m up to the bound:
// sum over k with k*m <= N of f(km). Throws when m is outside 1..N.
double coset_radon(const ArithmeticFn& f, int m);
ArithmeticFn coset_radon_table(const ArithmeticFn& f);

// Moebius function by trial division: 0 on a squared factor, else
// (-1)^(number of prime factors). Throws when k < 1.
int mobius(int k);

// f(m) recovered from Rf: sum over k with k*m <= N of mobius(k) * Rf(km).
// Exact when f is supported on {1..S} and N >= S * S; otherwise truncation
// error enters. Throws when m is outside 1..N.
double mobius_invert(const ArithmeticFn& rf, int m);
ArithmeticFn mobius_invert_table(const ArithmeticFn& rf);

}  // namespace sgh
