#pragma once

#include "sgharm/algebra_element.hpp"
#include "sgharm/gelfand.hpp"
#include "sgharm/rational.hpp"

#include <utility>
#include <vector>

namespace sgh {

// Average of f over the embedded S_k (degree-k permutations acting on the
// first k points). f may live on any S_N with N >= k.
Rational level_subgroup_average(const AlgebraElement& f, int k);

// Average of f over the embedded S_{k+1} minus the embedded S_k, the
// nontrivial double coset of the pair at level k. Requires f.degree() >= k+1.
Rational level_transversal_average(const AlgebraElement& f, int k);

// <f, phi_n> for f on S_{n+1}, computed as
// (level_subgroup_average - level_transversal_average) / (n+1).
Rational spherical_coefficient(const AlgebraElement& f, int n);

// (coef_trivial, coef_phi) = (<f, 1>, <f, phi_n>) for f on S_{n+1}.
std::pair<Rational, Rational> transform_pair(const AlgebraElement& f, int n);

// Reconstructs biinvariant data from its two coefficients:
//   value on subgroup      = coef_trivial + n * coef_phi
//   value off the subgroup = coef_trivial -     coef_phi.
// The weights (1, n) make this a two-sided inverse of transform_pair on
// biinvariant input. Only biinvariant functions are recoverable from the two
// coefficients; arbitrary f on S_{n+1} is not determined by them.
BiinvariantFn invert_biinvariant(const Rational& coef_trivial,
                                 const Rational& coef_phi, int n);

// Transform data of f along the tower S_2 < S_3 < ... < S_{N+1}: at level k
// the pair (S_{k+1}, S_k) sees the restriction of f to the embedded S_{k+1}.
struct ChainLevel {
    int level;             // k
    Rational lambda1;      // average over the embedded S_k
    Rational lambda2;      // average over the embedded S_{k+1} minus S_k
    Rational coefficient;  // (lambda1 - lambda2) / (k+1)
};

struct ChainAverages {
    std::vector<ChainLevel> levels;  // levels[k-1] holds level k
};

// Levels 1..N for f on S_{N+1} (or larger; only the embedded images of
// S_{N+1} are read).
ChainAverages chain_transform(const AlgebraElement& f, int N);

// Evaluates the truncated closed-form estimate of f(Id) from the chain:
//   (1/n) sum_{k=1..n} (1+k)! c(k)
//   - (1/n) sum_{k=2..n} (n-k) f(t_{1,k})  -  (1/n^2) f(t_{1,n+1})
// with n = f.degree() - 1, c(k) the level-k coefficient and t_{1,k} the
// transposition of 1 and k. Returns estimate - f(Id). The estimate omits
// tail corrections, so this is a diagnostic, not an inversion: no bound on
// the residual is promised and callers must not gate on it.
Rational truncated_inversion_residual(const AlgebraElement& f);

}  // namespace sgh
