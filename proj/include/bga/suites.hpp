#pragma once

#include <string>
#include <vector>

#include "bga/udr.hpp"

namespace bga {

struct SuiteRow {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteRow> rows;
  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return !rows.empty();
  }
};

struct SuiteConfig {
  unsigned long seed = 2024;
  int tree_count = 200;
  int min_edges = 2;
  int max_edges = 8;
  int max_len = 12;        // homs-oracle word length (acceptance pins 10)
  int syzygy_max_len = 6;  // module corpus for the syzygy referee
  int probe_depth = 0;     // 0 = default template depth
  int bound = 0;           // periodicity bound override
};

// Named verification suites; `verify <name>` in the CLI and the acceptance
// criteria both run these.
SuiteResult run_walks_suite(const SuiteConfig& cfg);
SuiteResult run_derived_eq_suite(const SuiteConfig& cfg);
SuiteResult run_homs_oracle_suite(const SuiteConfig& cfg);
SuiteResult run_syzygy_suite(const SuiteConfig& cfg);
SuiteResult run_tubes_suite(const SuiteConfig& cfg);
SuiteResult run_case1_suite(const SuiteConfig& cfg);
SuiteResult run_case2_suite(const SuiteConfig& cfg);
SuiteResult run_koszul_suite(const SuiteConfig& cfg);
SuiteResult run_section4_suite(const SuiteConfig& cfg);
SuiteResult run_udr_tables_suite(const SuiteConfig& cfg);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace bga
