#pragma once

#include <filesystem>

#include "rdp/classify.hpp"

namespace rdp {

/// CSV grid of f_n(x) values: header row of n, one row per x.
std::string render_table_csv(Kind kind, const ResidueRing& ring, i64 n_lo, i64 n_hi);

/// Comma-separated single row for a fixed x.
std::string render_table_row(Kind kind, const ResidueRing& ring, i64 n_lo, i64 n_hi, i64 x);

// Named verification suites behind `verify --suite ...`. Exit-relevant
// assertions are the hard lines; soft lines carry conjecture support.
SuiteReport suite_t5();
SuiteReport suite_t7();
SuiteReport suite_ring2();
SuiteReport suite_ring3();
SuiteReport suite_fixed_points();
SuiteReport suite_cycle_types();
SuiteReport suite_periods(i64 prime_cap);
SuiteReport suite_conjectures(i64 prime_cap);
SuiteReport suite_golden_appendix(const std::filesystem::path& data_dir);
SuiteReport suite_selftest_fail();  // synthetic failure, exercises the exit contract
SuiteReport suite_all(i64 prime_cap, const std::filesystem::path& data_dir);

/// Lifting-criterion verdict equals direct tabulation over Z_{p^t}.
SuiteReport lifting_vs_tabulation(i64 p, int t_max, i64 n_max);

}  // namespace rdp
