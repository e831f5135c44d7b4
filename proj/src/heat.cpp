#include "sgharm/heat.hpp"

#include "sgharm/radon.hpp"

#include <stdexcept>

namespace sgh {

AlgebraElement sub_laplacian(const AlgebraElement& f, int n, int bound) {
    if (f.degree() != n + 1)
        throw std::invalid_argument("sub_laplacian: degree mismatch");
    return measure_convolve(f, embedded_haar(n, n + 1, bound)) - f;
}

HeatState heat_step(const HeatState& s, int bound) {
    if (s.state.degree() != s.n + 1)
        throw std::invalid_argument("heat_step: degree mismatch");
    return {s.k + 1, s.n,
            measure_convolve(s.state, embedded_haar(s.n, s.n + 1, bound))};
}

AlgebraElement heat_solve(const AlgebraElement& f0, int k, int n, int bound) {
    if (f0.degree() != n + 1)
        throw std::invalid_argument("heat_solve: degree mismatch");
    if (k < 0) throw std::invalid_argument("heat_solve: negative step count");
    if (k == 0) return f0;
    // nu * nu = nu collapses the k-fold convolution after the first step.
    return measure_convolve(f0, embedded_haar(n, n + 1, bound));
}

AlgebraElement radon_of_solution(const AlgebraElement& f0, int k, int n, int bound) {
    return horocyclic_radon(heat_solve(f0, k, n, bound), n, bound);
}

}  // namespace sgh
