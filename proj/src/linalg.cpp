#include "sgharm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sgh {

int exact_rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);

        // Row updates below the pivot are independent of each other, and
        // each row's result does not depend on the order the others run.
        const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
        for (long long r = static_cast<long long>(rank) + 1; r < nrows; ++r) {
            auto& row = m[static_cast<std::size_t>(r)];
            if (row[col] == 0) continue;
            const Rational factor = row[col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                row[c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace sgh
