#include "bga/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bga {

namespace {

HomTableEntry hom_entry(const Presentation& p, const std::vector<StringWord>& words,
                        const std::vector<MatrixRep>& reps, int ci, int di) {
  HomTableEntry e;
  e.c_index = ci;
  e.d_index = di;
  e.canonical_count = static_cast<int>(canonical_homs(p, words[ci], words[di]).size());
  e.oracle_dim = oracle_hom_dim(p, reps[ci], reps[di]);
  return e;
}

}  // namespace

std::vector<HomTableEntry> hom_table_serial(const Presentation& p,
                                            const std::vector<StringWord>& words) {
  const int n = static_cast<int>(words.size());
  std::vector<MatrixRep> reps;
  reps.reserve(n);
  for (const auto& w : words) reps.push_back(rep_of_word(p, w));
  std::vector<HomTableEntry> table(static_cast<size_t>(n) * n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) table[static_cast<size_t>(c) * n + d] = hom_entry(p, words, reps, c, d);
  return table;
}

std::vector<HomTableEntry> hom_table_parallel(const Presentation& p,
                                              const std::vector<StringWord>& words) {
  const int n = static_cast<int>(words.size());
  std::vector<MatrixRep> reps;
  reps.reserve(n);
  for (const auto& w : words) reps.push_back(rep_of_word(p, w));
  std::vector<HomTableEntry> table(static_cast<size_t>(n) * n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < static_cast<long long>(n) * n; ++idx) {
    int c = static_cast<int>(idx / n);
    int d = static_cast<int>(idx % n);
    table[idx] = hom_entry(p, words, reps, c, d);
  }
  return table;
}

long oracle_syzygy_dim(const Presentation& p, const StringWord& m) {
  MatrixRep rep = rep_of_word(p, m);
  std::vector<int> tops = top_positions(m);
  // Explicit cover matrix: one column per basis element of each covering
  // projective, rows over the basis of M.
  const int dim_m = static_cast<int>(m.dim());
  IntMat cover(dim_m);
  long cols = 0;
  std::vector<std::vector<int>> mstep(p.acount(), std::vector<int>(dim_m, -1));
  for (int a = 0; a < p.acount(); ++a)
    for (auto [from, to] : rep.action[a]) mstep[a][from] = to;
  for (int t : tops) {
    ProjectiveRep pr = projective_rep(p, vertex_at(p, m, t));
    const int dp = pr.rep.dim();
    // image[b]: -1 not yet propagated, -2 maps to zero, else basis index of M.
    std::vector<int> image(dp, -1);
    image[pr.top] = t;
    // Propagate along the projective's action entries to a fixpoint; the
    // shared socle receives the same (zero) image from both branches.
    for (int pass = 0; pass < dp; ++pass) {
      for (int a = 0; a < p.acount(); ++a) {
        for (auto [from, to] : pr.rep.action[a]) {
          if (image[from] == -1) continue;
          int img = image[from];
          int val = img == -2 ? -2 : (mstep[a][img] >= 0 ? mstep[a][img] : -2);
          if (image[to] != -1 && image[to] != val)
            throw std::logic_error("cover propagation disagrees at a shared basis element");
          image[to] = val;
        }
      }
    }
    for (int b = 0; b < dp; ++b) {
      for (int r = 0; r < dim_m; ++r) cover[r].push_back(image[b] == r ? 1 : 0);
      ++cols;
    }
  }
  int rank = rank_exact(cover);
  if (rank != dim_m) return -1;  // cover not surjective: construction bug
  return cols - rank;
}

namespace {

SyzygyCheckEntry syzygy_entry(const AlgebraContext& ctx, const std::vector<StringWord>& words,
                              int idx) {
  SyzygyCheckEntry e;
  e.index = idx;
  SyzygyResult r = syzygy(ctx, words[idx]);
  e.combinatorial_dim = r.output.dim();
  long oracle = oracle_syzygy_dim(ctx.pres, words[idx]);
  e.cover_surjective = oracle >= 0;
  e.oracle_dim = oracle;
  return e;
}

}  // namespace

std::vector<SyzygyCheckEntry> syzygy_check_serial(const AlgebraContext& ctx,
                                                  const std::vector<StringWord>& words) {
  std::vector<SyzygyCheckEntry> out(words.size());
  for (int i = 0; i < static_cast<int>(words.size()); ++i) out[i] = syzygy_entry(ctx, words, i);
  return out;
}

std::vector<SyzygyCheckEntry> syzygy_check_parallel(const AlgebraContext& ctx,
                                                    const std::vector<StringWord>& words) {
  std::vector<SyzygyCheckEntry> out(words.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < static_cast<int>(words.size()); ++i) out[i] = syzygy_entry(ctx, words, i);
  return out;
}

}  // namespace bga
