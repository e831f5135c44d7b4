#include "sgharm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n == 0) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n) throw std::invalid_argument("image out of range");
        if (seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("repeated image");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int i, int j) {
    if (i < 1 || j < 1 || i > degree || j > degree)
        throw std::invalid_argument("transposition point out of range");
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[static_cast<std::size_t>(i) - 1], im[static_cast<std::size_t>(j) - 1]);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= degree(); ++i)
        im[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return images_ <=> o.images_;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(static_cast<std::size_t>(a.degree()));
    for (int i = 1; i <= a.degree(); ++i)
        im[static_cast<std::size_t>(i) - 1] = a(b(i));
    return Permutation(std::move(im));
}

int signature(const Permutation& s) {
    int sign = 1;
    for (const auto& cycle : cycle_decompose(s))
        if (cycle.size() % 2 == 0) sign = -sign;
    return sign;
}

std::vector<std::vector<int>> cycle_decompose(const Permutation& s) {
    const int n = s.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start) - 1]) continue;
        std::vector<int> cycle;
        int i = start;
        do {
            seen[static_cast<std::size_t>(i) - 1] = true;
            cycle.push_back(i);
            i = s(i);
        } while (i != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

Permutation cycle_restriction(const Permutation& s, const std::vector<int>& cycle) {
    std::vector<int> im(static_cast<std::size_t>(s.degree()));
    std::iota(im.begin(), im.end(), 1);
    for (int i : cycle) im[static_cast<std::size_t>(i) - 1] = s(i);
    return Permutation(std::move(im));
}

Partition cycle_type(const Permutation& s) {
    std::vector<int> lengths;
    for (const auto& c : cycle_decompose(s))
        lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

Permutation embed(const Permutation& s, int m) {
    if (m < s.degree()) throw std::invalid_argument("embed: target degree too small");
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    for (int i = 1; i <= s.degree(); ++i) im[static_cast<std::size_t>(i) - 1] = s(i);
    return Permutation(std::move(im));
}

std::vector<Permutation> enumerate_group(int n, int bound) {
    if (n < 1) throw std::invalid_argument("enumerate_group: degree must be positive");
    if (n > bound) throw std::invalid_argument("enumerate_group: degree exceeds bound");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::string to_string(const Permutation& s) {
    std::string out;
    for (int i = 1; i <= s.degree(); ++i) {
        if (i > 1) out += " ";
        out += std::to_string(s(i));
    }
    return out;
}

}  // namespace sgh
