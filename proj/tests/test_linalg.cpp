#include <doctest.h>

#include "bga/linalg.hpp"

using namespace bga;

TEST_CASE("exact rank basics") {
  CHECK(rank_exact({}) == 0);
  CHECK(rank_exact({{0, 0}, {0, 0}}) == 0);
  CHECK(rank_exact({{1, 0}, {0, 1}}) == 2);
  CHECK(rank_exact({{1, 2}, {2, 4}}) == 1);
  CHECK(nullity_exact({{1, 1, 0}, {0, 1, 1}}, 3) == 1);
}

TEST_CASE("rank with large entries takes the big-integer fallback") {
  // Rows 2 and 3 are combinations of rows 0 and 1; huge entries overflow the
  // fraction-free int64 path, so this exercises the fallback.
  const std::int64_t big = 2'000'000'000'000'000'000LL;
  IntMat m = {
      {big, big - 1, 3, 5},
      {7, big, big - 3, 11},
      {0, 0, 0, 0},
      {0, 0, 0, 0},
  };
  for (int c = 0; c < 4; ++c) {
    m[2][c] = m[0][c] - m[1][c];
    m[3][c] = m[0][c] + m[1][c];
  }
  CHECK(rank_exact(m) == 2);
}
