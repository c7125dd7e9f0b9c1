// Benchmark: serial reference kernels vs the OpenMP variants on the
// hom-table and syzygy-check workloads, with an output equality check.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bga/batch.hpp"

using namespace bga;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_len = argc > 1 ? std::atoi(argv[1]) : 8;
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: not enabled\n";
#endif

  AlgebraContext ctx(make_star(2, {2, 2, 2}));
  std::vector<StringWord> words = all_words_up_to(ctx.pres, max_len);
  std::cout << "words up to length " << max_len << ": " << words.size() << " ("
            << static_cast<long long>(words.size()) * words.size() << " ordered pairs)\n";

  auto t0 = clock_type::now();
  auto serial = hom_table_serial(ctx.pres, words);
  double ts = seconds_since(t0);
  std::cout << "hom table serial:   " << ts << " s\n";

  t0 = clock_type::now();
  auto parallel = hom_table_parallel(ctx.pres, words);
  double tp = seconds_since(t0);
  std::cout << "hom table parallel: " << tp << " s  (speedup " << ts / tp << "x)\n";

  bool same = serial.size() == parallel.size();
  long mismatches = 0;
  for (size_t k = 0; same && k < serial.size(); ++k) {
    if (serial[k].canonical_count != parallel[k].canonical_count ||
        serial[k].oracle_dim != parallel[k].oracle_dim)
      ++mismatches;
    if (serial[k].canonical_count != serial[k].oracle_dim) ++mismatches;
  }
  std::cout << "outputs identical and basis = oracle: "
            << (same && mismatches == 0 ? "yes" : "NO") << "\n";

  t0 = clock_type::now();
  auto ss = syzygy_check_serial(ctx, words);
  double ss_t = seconds_since(t0);
  std::cout << "syzygy check serial:   " << ss_t << " s\n";
  t0 = clock_type::now();
  auto sp = syzygy_check_parallel(ctx, words);
  double sp_t = seconds_since(t0);
  std::cout << "syzygy check parallel: " << sp_t << " s  (speedup " << ss_t / sp_t << "x)\n";
  long bad = 0;
  for (size_t k = 0; k < ss.size(); ++k)
    if (ss[k].combinatorial_dim != sp[k].combinatorial_dim ||
        ss[k].combinatorial_dim != ss[k].oracle_dim || !ss[k].cover_surjective)
      ++bad;
  std::cout << "syzygy outputs identical and combinatorial = oracle: " << (bad == 0 ? "yes" : "NO")
            << "\n";
  return (mismatches == 0 && bad == 0) ? 0 : 1;
}
