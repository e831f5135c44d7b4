#pragma once

#include "sgharm/algebra_element.hpp"

#include <vector>

namespace sgh::serial {

// Literal single-threaded transcriptions of the defining formulas. The
// production kernels are tested against these; keep them dumb and obvious.

// delta_s * delta_t = delta_{st}, extended bilinearly, one pair at a time.
AlgebraElement measure_convolve(const AlgebraElement& a, const AlgebraElement& b);

// (f*g)(x) = (1/n!) sum over all y in S_n of f(y) g(y^-1 x), evaluated as a
// dense double loop over the whole group.
AlgebraElement fn_convolve(const AlgebraElement& f, const AlgebraElement& g);

// Rank by row reduction with no parallel row updates.
int exact_rank(std::vector<std::vector<Rational>> m);

// P f(x) = (1/n!^2) sum over tau, h in the embedded S_n of f(tau x h),
// evaluated pointwise on all of S_{n+1}.
AlgebraElement biinvariant_project(const AlgebraElement& f, int n);

// Rf(x) = (1/n!) sum over h in the embedded S_n of f(x h), the coset average,
// evaluated pointwise on all of S_{n+1}.
AlgebraElement horocyclic_radon(const AlgebraElement& f, int n);

}  // namespace sgh::serial
