#pragma once

#include "sgharm/algebra_element.hpp"
#include "sgharm/partition.hpp"
#include "sgharm/permutation.hpp"
#include "sgharm/rational.hpp"

#include <string>
#include <vector>

namespace sgh {

// All partitions of n, in the order produced by taking the largest part
// first and recursing (so (n) comes first and (1,...,1) last).
std::vector<Partition> partitions_of(int n);

// Filling of a Young diagram with 1..n, one row per part. Rows keep the
// order in which values were placed; column j collects entry j of each row
// that is long enough.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    // Rows filled left to right, top to bottom with 1..n.
    static Tableau row_major(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.weight(); }

    std::vector<int> column(int j) const;
    int column_count() const { return shape_.part(0); }

    // Rows increase left to right and columns increase top to bottom.
    bool is_standard() const;

    bool operator==(const Tableau& o) const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tableau& t);

// Entrywise action: pi . t replaces each entry v by pi(v).
Tableau apply(const Permutation& pi, const Tableau& t);

// Tableau up to reordering within rows: each row becomes a sorted set.
class Tabloid {
public:
    explicit Tabloid(const Tableau& t);
    Tabloid(Partition shape, std::vector<std::vector<int>> sorted_rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const Tabloid& o) const {
        return shape_ == o.shape_ && rows_ == o.rows_;
    }
    auto operator<=>(const Tabloid& o) const { return rows_ <=> o.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tabloid& t);

// Permutations preserving each row of t as a set: the direct product of the
// symmetric groups on the rows. Size is the product of (row length)!.
std::vector<Permutation> row_stabilizer(const Tableau& t);

// Same with columns.
std::vector<Permutation> column_stabilizer(const Tableau& t);

// e_t = sum over q in the column stabilizer, p in the row stabilizer of
// sign(q) delta_{p o q}. Support has exactly |P_t| * |Q_t| elements with
// coefficients +-1.
AlgebraElement polytabloid(const Tableau& t);

// All standard fillings of the shape; their count is the dimension of the
// module the polytabloids span.
std::vector<Tableau> standard_fillings(const Partition& shape);

// Dimension of the left ideal A(S_n) e_t: the exact rank of the family
// { delta_pi * e_t : pi in S_n }. The shape overload uses the row major
// filling; the value does not depend on the filling.
int ideal_dimension(const Tableau& t, int bound = kEnumerationBound);
int ideal_dimension(const Partition& shape, int bound = kEnumerationBound);

// e_t * e_t = lambda_t e_t with lambda_t = n! / dim; returns lambda_t.
Rational polytabloid_scalar(const Tableau& t);

}  // namespace sgh
