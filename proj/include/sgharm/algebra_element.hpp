#pragma once

#include "sgharm/permutation.hpp"
#include "sgharm/rational.hpp"

#include <map>
#include <optional>

namespace sgh {

// Finitely supported Rational-valued function/measure on a symmetric group.
// Zero coefficients are never stored, so structural equality is equality of
// the functions. The same type carries both the "measure" view (Dirac
// combinations, convolved by measure_convolve) and the "function" view
// (pointwise values, convolved by fn_convolve with the 1/|G| normalization).
class AlgebraElement {
public:
    using Support = std::map<Permutation, Rational>;

    explicit AlgebraElement(int degree);
    AlgebraElement(int degree, Support coeffs);

    int degree() const { return degree_; }
    const Support& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    // Value at s; zero when s is outside the support.
    const Rational& at(const Permutation& s) const;
    // Accumulates c at s, dropping the entry if it cancels to zero.
    void add_term(const Permutation& s, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
        a += b;
        return a;
    }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
        a -= b;
        return a;
    }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) {
        a *= c;
        return a;
    }

    bool operator==(const AlgebraElement& o) const {
        return degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

    Rational total_mass() const;

private:
    int degree_;
    Support coeffs_;
};

// Dirac measure at s.
AlgebraElement delta(const Permutation& s);

// Bilinear extension of delta_s * delta_t = delta_{st}.
AlgebraElement measure_convolve(const AlgebraElement& a, const AlgebraElement& b);

// (f*g)(x) = (1/|G|) sum_y f(y) g(y^-1 x), |G| = degree!.
AlgebraElement fn_convolve(const AlgebraElement& f, const AlgebraElement& g);

// (1/n!) sum over S_n of Dirac measures.
AlgebraElement haar(int n, int bound = kEnumerationBound);

// Haar measure of S_n embedded in S_m (fixing n+1..m pointwise).
AlgebraElement embedded_haar(int n, int m, int bound = kEnumerationBound);

// The constant function with the given value on all of S_degree.
AlgebraElement constant_fn(int degree, const Rational& value,
                           int bound = kEnumerationBound);

// <f,g> = (1/|G|) sum_s f(s) g(s), exact.
Rational inner_product(const AlgebraElement& f, const AlgebraElement& g);

// f(x) -> f(x^-1).
AlgebraElement check_involution(const AlgebraElement& f);

// Returns lambda != 0 with e*e = lambda*e (lambda == 1 means idempotent);
// nullopt when e*e is not a nonzero multiple of e. Throws on e == 0.
std::optional<Rational> essential_idempotency(const AlgebraElement& e);

}  // namespace sgh
