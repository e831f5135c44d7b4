#pragma once

#include "sgharm/rational.hpp"

#include <vector>

namespace sgh {

using Matrix = std::vector<std::vector<Rational>>;

// Rank over Q by Gaussian elimination. Exact: no pivot thresholding, a pivot
// is any nonzero entry. The input is taken by value and destroyed.
int exact_rank(Matrix m);

}  // namespace sgh
