#pragma once

#include <cstdint>
#include <vector>

namespace bga {

// Dense integer matrix, row major. All module-theoretic systems in this
// project have small integer entries (almost always 0/+-1); ranks are taken
// over the rationals.
using IntMat = std::vector<std::vector<std::int64_t>>;

// Rank over Q. Fraction-free elimination on int64 with a big-integer
// fallback when intermediates overflow, so the result is always exact.
int rank_exact(const IntMat& m);

// Nullity of the linear system given by the rows of `m` acting on
// `unknowns` variables (columns). Rows may be fewer or more than square.
int nullity_exact(const IntMat& m, int unknowns);

}  // namespace bga
