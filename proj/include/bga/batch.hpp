#pragma once

#include <vector>

#include "bga/homology.hpp"
#include "bga/strmod.hpp"

namespace bga {

// Data-parallel verification kernels. Each has a serial reference and an
// OpenMP variant producing identical output (order fixed by index, not by
// schedule); the benchmark target compares the two.

struct HomTableEntry {
  int c_index = 0;
  int d_index = 0;
  int canonical_count = 0;
  int oracle_dim = 0;
};

std::vector<HomTableEntry> hom_table_serial(const Presentation& p,
                                            const std::vector<StringWord>& words);
std::vector<HomTableEntry> hom_table_parallel(const Presentation& p,
                                              const std::vector<StringWord>& words);

// Kernel dimension of the projective cover, computed from the explicit cover
// matrix by exact rank; the independent referee for the combinatorial
// syzygy.
long oracle_syzygy_dim(const Presentation& p, const StringWord& m);

struct SyzygyCheckEntry {
  int index = 0;
  long combinatorial_dim = 0;
  long oracle_dim = 0;
  bool cover_surjective = false;
};

std::vector<SyzygyCheckEntry> syzygy_check_serial(const AlgebraContext& ctx,
                                                  const std::vector<StringWord>& words);
std::vector<SyzygyCheckEntry> syzygy_check_parallel(const AlgebraContext& ctx,
                                                    const std::vector<StringWord>& words);

}  // namespace bga
