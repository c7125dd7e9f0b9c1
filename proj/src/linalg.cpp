#include "bga/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>

namespace bga {

namespace {

struct Int64Overflow {};

// One Bareiss step value: (a*d - b*c)/prev, exact division. Throws the
// sentinel when the result leaves the int64 range.
std::int64_t bareiss_step64(std::int64_t a, std::int64_t d, std::int64_t b, std::int64_t c,
                            std::int64_t prev) {
  __int128 t = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  t /= prev;
  if (t > INT64_MAX || t < INT64_MIN) throw Int64Overflow{};
  return static_cast<std::int64_t>(t);
}

int rank_int64(IntMat m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = bareiss_step64(m[rank][col], m[r][c], m[r][col], m[rank][c], prev);
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

int rank_big(const IntMat& mi) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> m(mi.size());
  for (size_t r = 0; r < mi.size(); ++r) m[r].assign(mi[r].begin(), mi[r].end());
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_exact(const IntMat& m) {
  if (m.empty()) return 0;
  try {
    return rank_int64(m);
  } catch (const Int64Overflow&) {
    return rank_big(m);
  }
}

int nullity_exact(const IntMat& m, int unknowns) {
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != unknowns)
      throw std::invalid_argument("nullity_exact: row width mismatch");
  return unknowns - rank_exact(m);
}

}  // namespace bga
