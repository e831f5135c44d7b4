#include "sgharm/algebra_element.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace sgh {

namespace {
const Rational kZero = 0;

void scrub_zeros(AlgebraElement::Support& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
}
}  // namespace

AlgebraElement::AlgebraElement(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("algebra element degree must be positive");
}

AlgebraElement::AlgebraElement(int degree, Support coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 1) throw std::invalid_argument("algebra element degree must be positive");
    for (const auto& [s, c] : coeffs_)
        if (s.degree() != degree)
            throw std::invalid_argument("support permutation has wrong degree");
    scrub_zeros(coeffs_);
}

const Rational& AlgebraElement::at(const Permutation& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? kZero : it->second;
}

void AlgebraElement::add_term(const Permutation& s, const Rational& c) {
    if (s.degree() != degree_)
        throw std::invalid_argument("add_term: permutation degree mismatch");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    for (const auto& [s, c] : o.coeffs_) add_term(s, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    for (const auto& [s, c] : o.coeffs_) add_term(s, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [s, v] : coeffs_) v *= c;
    return *this;
}

Rational AlgebraElement::total_mass() const {
    Rational m = 0;
    for (const auto& [s, c] : coeffs_) m += c;
    return m;
}

AlgebraElement delta(const Permutation& s) {
    AlgebraElement e(s.degree());
    e.add_term(s, 1);
    return e;
}

AlgebraElement measure_convolve(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("measure_convolve: degree mismatch");

    std::vector<const std::pair<const Permutation, Rational>*> as, bs;
    as.reserve(a.support_size());
    bs.reserve(b.support_size());
    for (const auto& e : a.coeffs()) as.push_back(&e);
    for (const auto& e : b.coeffs()) bs.push_back(&e);

    const long long nb = static_cast<long long>(bs.size());
    const long long total = static_cast<long long>(as.size()) * nb;

    AlgebraElement::Support acc;
    // Exact coefficients make the merge insensitive to thread count and
    // merge order: addition of rationals is associative and commutative
    // with no rounding, so the result is identical to the serial one.
#pragma omp parallel
    {
        AlgebraElement::Support local;
#pragma omp for schedule(static) nowait
        for (long long k = 0; k < total; ++k) {
            const auto& [sa, ca] = *as[static_cast<std::size_t>(k / nb)];
            const auto& [sb, cb] = *bs[static_cast<std::size_t>(k % nb)];
            auto [it, inserted] = local.try_emplace(compose(sa, sb), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
#pragma omp critical
        {
            for (auto& [s, c] : local) {
                auto [it, inserted] = acc.try_emplace(s, c);
                if (!inserted) it->second += c;
            }
        }
    }
    scrub_zeros(acc);
    return AlgebraElement(a.degree(), std::move(acc));
}

AlgebraElement fn_convolve(const AlgebraElement& f, const AlgebraElement& g) {
    // (f*g)(x) = (1/|G|) sum_y f(y) g(y^-1 x): the same pair sum as the
    // measure convolution, scaled by the group order.
    AlgebraElement out = measure_convolve(f, g);
    out *= Rational(1, factorial(f.degree()));
    return out;
}

AlgebraElement haar(int n, int bound) {
    AlgebraElement::Support m;
    const Rational w(1, factorial(n));
    for (auto& s : enumerate_group(n, bound)) m.emplace(std::move(s), w);
    return AlgebraElement(n, std::move(m));
}

AlgebraElement embedded_haar(int n, int m, int bound) {
    if (m < n) throw std::invalid_argument("embedded_haar: ambient degree too small");
    AlgebraElement::Support supp;
    const Rational w(1, factorial(n));
    for (const auto& s : enumerate_group(n, bound)) supp.emplace(embed(s, m), w);
    return AlgebraElement(m, std::move(supp));
}

AlgebraElement constant_fn(int degree, const Rational& value, int bound) {
    AlgebraElement::Support m;
    if (value != 0)
        for (auto& s : enumerate_group(degree, bound)) m.emplace(std::move(s), value);
    return AlgebraElement(degree, std::move(m));
}

Rational inner_product(const AlgebraElement& f, const AlgebraElement& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("inner_product: degree mismatch");
    const auto& small = f.support_size() <= g.support_size() ? f : g;
    const auto& large = f.support_size() <= g.support_size() ? g : f;
    Rational sum = 0;
    for (const auto& [s, c] : small.coeffs()) sum += c * large.at(s);
    return sum / Rational(factorial(f.degree()));
}

AlgebraElement check_involution(const AlgebraElement& f) {
    AlgebraElement::Support m;
    for (const auto& [s, c] : f.coeffs()) m.emplace(s.inverse(), c);
    return AlgebraElement(f.degree(), std::move(m));
}

std::optional<Rational> essential_idempotency(const AlgebraElement& e) {
    if (e.is_zero()) throw std::invalid_argument("essential_idempotency of zero");
    const AlgebraElement sq = measure_convolve(e, e);
    const auto& [s0, c0] = *e.coeffs().begin();
    const Rational lambda = sq.at(s0) / c0;
    if (lambda == 0) return std::nullopt;
    if (sq == e * lambda) return lambda;
    return std::nullopt;
}

}  // namespace sgh
