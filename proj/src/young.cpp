#include "sgharm/young.hpp"

#include "sgharm/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sgh {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void check_filling(int n, const std::vector<std::vector<int>>& rows) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > n) throw std::invalid_argument("tableau entry out of range");
            if (seen[static_cast<std::size_t>(v) - 1])
                throw std::invalid_argument("repeated tableau entry");
            seen[static_cast<std::size_t>(v) - 1] = true;
        }
}

// Direct product of the symmetric groups on the given disjoint value sets,
// as permutations of {1..degree}. Enumerated by an odometer over per-set
// arrangements, so the order is deterministic.
std::vector<Permutation> set_product_group(int degree,
                                           const std::vector<std::vector<int>>& sets) {
    struct Block {
        std::vector<int> sorted;
        std::vector<std::vector<int>> arrangements;
    };
    std::vector<Block> blocks;
    for (const auto& s : sets) {
        Block b;
        b.sorted = s;
        std::sort(b.sorted.begin(), b.sorted.end());
        std::vector<int> arr = b.sorted;
        do {
            b.arrangements.push_back(arr);
        } while (std::next_permutation(arr.begin(), arr.end()));
        blocks.push_back(std::move(b));
    }

    std::vector<std::size_t> idx(blocks.size(), 0);
    std::vector<Permutation> out;
    for (;;) {
        std::vector<int> im(static_cast<std::size_t>(degree));
        std::iota(im.begin(), im.end(), 1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& sorted = blocks[b].sorted;
            const auto& arranged = blocks[b].arrangements[idx[b]];
            for (std::size_t i = 0; i < sorted.size(); ++i)
                im[static_cast<std::size_t>(sorted[i]) - 1] = arranged[i];
        }
        out.push_back(Permutation(std::move(im)));

        std::size_t b = blocks.size();
        while (b > 0) {
            --b;
            if (++idx[b] < blocks[b].arrangements.size()) break;
            idx[b] = 0;
            if (b == 0) return out;
        }
        if (blocks.empty()) return out;
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("tableau row count does not match shape");
    for (int r = 0; r < shape_.rows(); ++r)
        if (static_cast<int>(rows_[static_cast<std::size_t>(r)].size()) != shape_.part(r))
            throw std::invalid_argument("tableau row length does not match shape");
    check_filling(shape_.weight(), rows_);
}

Tableau Tableau::row_major(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r = 0; r < shape.rows(); ++r) {
        std::vector<int> row(static_cast<std::size_t>(shape.part(r)));
        std::iota(row.begin(), row.end(), next);
        next += shape.part(r);
        rows.push_back(std::move(row));
    }
    return Tableau(shape, std::move(rows));
}

std::vector<int> Tableau::column(int j) const {
    std::vector<int> col;
    for (const auto& row : rows_)
        if (j < static_cast<int>(row.size())) col.push_back(row[static_cast<std::size_t>(j)]);
    return col;
}

bool Tableau::is_standard() const {
    for (const auto& row : rows_)
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i - 1] >= row[i]) return false;
    for (int j = 0; j < column_count(); ++j) {
        const auto col = column(j);
        for (std::size_t i = 1; i < col.size(); ++i)
            if (col[i - 1] >= col[i]) return false;
    }
    return true;
}

bool Tableau::operator==(const Tableau& o) const {
    return shape_ == o.shape_ && rows_ == o.rows_;
}

std::string to_string(const Tableau& t) {
    std::string s;
    for (const auto& row : t.rows()) {
        s += "[";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(row[i]);
        }
        s += "]";
    }
    return s;
}

Tableau apply(const Permutation& pi, const Tableau& t) {
    if (pi.degree() != t.size())
        throw std::invalid_argument("apply: degree does not match tableau size");
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& row : rows)
        for (int& v : row) v = pi(v);
    return Tableau(t.shape(), std::move(rows));
}

Tabloid::Tabloid(const Tableau& t) : shape_(t.shape()), rows_(t.rows()) {
    for (auto& row : rows_) std::sort(row.begin(), row.end());
}

Tabloid::Tabloid(Partition shape, std::vector<std::vector<int>> sorted_rows)
    : shape_(std::move(shape)), rows_(std::move(sorted_rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("tabloid row count does not match shape");
    for (int r = 0; r < shape_.rows(); ++r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != shape_.part(r))
            throw std::invalid_argument("tabloid row length does not match shape");
        if (!std::is_sorted(row.begin(), row.end()))
            throw std::invalid_argument("tabloid rows must be sorted");
    }
    check_filling(shape_.weight(), rows_);
}

std::string to_string(const Tabloid& t) {
    std::string s;
    for (const auto& row : t.rows()) {
        s += "{";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(row[i]);
        }
        s += "}";
    }
    return s;
}

std::vector<Permutation> row_stabilizer(const Tableau& t) {
    return set_product_group(t.size(), t.rows());
}

std::vector<Permutation> column_stabilizer(const Tableau& t) {
    std::vector<std::vector<int>> cols;
    for (int j = 0; j < t.column_count(); ++j) cols.push_back(t.column(j));
    return set_product_group(t.size(), cols);
}

AlgebraElement polytabloid(const Tableau& t) {
    AlgebraElement e(t.size());
    // p1 q1 = p2 q2 forces p1 = p2 and q1 = q2 (the stabilizers meet only in
    // the identity), so no term collides and the support has |P| * |Q|
    // entries, all with coefficient +1 or -1.
    for (const auto& q : column_stabilizer(t)) {
        const Rational sign = signature(q);
        for (const auto& p : row_stabilizer(t)) e.add_term(compose(p, q), sign);
    }
    return e;
}

std::vector<Tableau> standard_fillings(const Partition& shape) {
    const int n = shape.weight();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    std::vector<Tableau> out;

    // Values are placed in increasing order, so rows grow left to right with
    // increasing entries; a row may receive a value only while it is shorter
    // than the row above, which keeps columns increasing as well.
    auto place = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(Tableau(shape, rows));
            return;
        }
        for (int r = 0; r < shape.rows(); ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            if (static_cast<int>(row.size()) >= shape.part(r)) continue;
            if (r > 0 && rows[static_cast<std::size_t>(r) - 1].size() <= row.size()) continue;
            row.push_back(v);
            self(self, v + 1);
            row.pop_back();
        }
    };
    place(place, 1);
    return out;
}

int ideal_dimension(const Tableau& t, int bound) {
    const int n = t.size();
    const auto group = enumerate_group(n, bound);
    std::map<Permutation, std::size_t> col_of;
    for (std::size_t i = 0; i < group.size(); ++i) col_of.emplace(group[i], i);

    const AlgebraElement e = polytabloid(t);
    Matrix m(group.size(), std::vector<Rational>(group.size(), Rational(0)));
    // Row for pi holds delta_pi * e, whose value at pi s is e(s).
    for (std::size_t r = 0; r < group.size(); ++r)
        for (const auto& [s, c] : e.coeffs())
            m[r][col_of.at(compose(group[r], s))] = c;
    return exact_rank(std::move(m));
}

int ideal_dimension(const Partition& shape, int bound) {
    return ideal_dimension(Tableau::row_major(shape), bound);
}

Rational polytabloid_scalar(const Tableau& t) {
    const auto lambda = essential_idempotency(polytabloid(t));
    if (!lambda) throw std::logic_error("polytabloid is not essentially idempotent");
    return *lambda;
}

}  // namespace sgh
