#pragma once

#include "sgharm/algebra_element.hpp"
#include "sgharm/permutation.hpp"
#include "sgharm/rational.hpp"

#include <utility>
#include <vector>

namespace sgh {

// Throughout, "the pair at n" means S_{n+1} together with the copy of S_n
// fixing the point n+1. A permutation s of degree n+1 lies in that copy
// exactly when s(n+1) = n+1, and the double coset K s K is determined by
// whether it does: there are exactly two double cosets.

// s(n+1); equals n+1 exactly on the subgroup.
int coset_label(const Permutation& s);
bool in_subgroup(const Permutation& s);

// Representatives {identity, transposition(1, n+1)} of the two double cosets.
std::vector<Permutation> double_coset_reps(int n);

// Partition of S_{n+1} into the two double cosets, in the order of
// double_coset_reps. Sizes are n! and n * n!.
std::vector<std::vector<Permutation>> double_cosets(int n, int bound = kEnumerationBound);

// A function on S_{n+1} that is constant on each double coset: it is
// determined by its value on the subgroup and its value off it.
struct BiinvariantFn {
    int n;  // the pair at n, so the group is S_{n+1}
    Rational on_subgroup;
    Rational on_transversal;

    const Rational& operator()(const Permutation& s) const {
        return in_subgroup(s) ? on_subgroup : on_transversal;
    }

    bool operator==(const BiinvariantFn&) const = default;
};

// Materializes the function on all of S_{n+1}.
AlgebraElement expand(const BiinvariantFn& f, int bound = kEnumerationBound);

// Indicator of the subgroup and of its complement, as biinvariant data.
BiinvariantFn subgroup_indicator(int n);
BiinvariantFn transversal_indicator(int n);

// The two spherical functions of the pair: the constant 1, and the function
// equal to 1 on the subgroup and -1/n off it.
BiinvariantFn spherical_trivial(int n);
BiinvariantFn spherical_nontrivial(int n);

// Averages f over left and right translation by the embedded S_n. Agrees
// with serial::biinvariant_project; this route only computes the two
// double-coset averages.
AlgebraElement biinvariant_project(const AlgebraElement& f, int n,
                                   int bound = kEnumerationBound);

// Average of f over each double coset, in double_coset_reps order. These are
// the two numbers biinvariant_project is built from. Only the support of f
// is read, so no enumeration bound applies.
std::pair<Rational, Rational> coset_averages(const AlgebraElement& f, int n);

// Exhaustively checks phi(s) phi(z) = (1/n!) sum over tau in the embedded
// S_n of phi(s tau z) for all s, z in S_{n+1}.
bool verify_spherical(const BiinvariantFn& phi, int bound = kEnumerationBound);

// All biinvariant phi with phi(id) = 1 satisfying the functional equation.
// For every n these are exactly the two spherical functions.
std::vector<BiinvariantFn> find_spherical(int n, int bound = kEnumerationBound);

}  // namespace sgh
