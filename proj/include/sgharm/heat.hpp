#pragma once

#include "sgharm/algebra_element.hpp"

namespace sgh {

// Delta f = f * nu - f, where nu is the Haar measure of the embedded S_n and
// * is measure convolution: Delta f(x) = (1/n!) sum_{h in S_n} f(x h) - f(x).
// Coset-constant functions are harmonic. Requires f.degree() == n + 1.
AlgebraElement sub_laplacian(const AlgebraElement& f, int n,
                             int bound = kEnumerationBound);

// One step of f_k(x) = (1/n!) sum_{h in S_n} f_{k-1}(x h): the state is
// convolved with nu and the step count incremented. Total mass is preserved.
struct HeatState {
    int k = 0;
    int n;  // ambient group is S_{n+1}
    AlgebraElement state;
};

HeatState heat_step(const HeatState& s, int bound = kEnumerationBound);

// Closed form of the evolution: f_0 for k = 0, f_0 * nu for every k >= 1
// (nu * nu = nu, so the walk collapses after one step). Equals k-fold
// heat_step exactly. Throws on k < 0.
AlgebraElement heat_solve(const AlgebraElement& f0, int k, int n,
                          int bound = kEnumerationBound);

// Coset average of the solution: horocyclic_radon(heat_solve(f0, k, n), n).
AlgebraElement radon_of_solution(const AlgebraElement& f0, int k, int n,
                                 int bound = kEnumerationBound);

}  // namespace sgh
