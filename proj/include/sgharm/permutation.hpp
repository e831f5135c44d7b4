#pragma once

#include "sgharm/partition.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sgh {

// Cap for whole-group enumeration (8! = 40320 elements); callers may pass a
// different bound where they can afford it.
inline constexpr int kEnumerationBound = 8;

// A permutation of {1..n} in one-line notation: images()[i-1] = s(i).
// Values are immutable after construction.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    static Permutation transposition(int degree, int i, int j);

    int degree() const { return static_cast<int>(images_.size()); }
    // s(i), 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    // Degree first, then lexicographic on images. This is the deterministic
    // order used for sparse-map keys and for enumeration fixtures.
    std::strong_ordering operator<=>(const Permutation& o) const;

private:
    std::vector<int> images_;
};

// (a o b)(i) = a(b(i)); the right factor acts first.
Permutation compose(const Permutation& a, const Permutation& b);

// +1 or -1 by the parity of any factorization into transpositions.
int signature(const Permutation& s);

// Disjoint cycles covering {1..n}, singletons included. Each cycle starts at
// its smallest element; cycles are ordered by that element.
std::vector<std::vector<int>> cycle_decompose(const Permutation& s);

// Agrees with s on the cycle, identity elsewhere.
Permutation cycle_restriction(const Permutation& s, const std::vector<int>& cycle);

// Sorted multiset of cycle lengths; a partition of degree().
Partition cycle_type(const Permutation& s);

// S_n -> S_m: agrees with s on 1..degree, fixes degree+1..m. Requires
// m >= s.degree().
Permutation embed(const Permutation& s, int m);

// All n! permutations of degree n in lexicographic order.
std::vector<Permutation> enumerate_group(int n, int bound = kEnumerationBound);

std::string to_string(const Permutation& s);  // "2 3 1"

}  // namespace sgh
