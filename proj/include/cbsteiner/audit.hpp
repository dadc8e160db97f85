#pragma once

// Randomised sweeps against the oracles, plus the scaling measurement.
// Every sweep is deterministic in (count, seed) and returns a JSON report
// with a top-level "pass" flag.

#include <cstdint>
#include <vector>

#include "cbsteiner/report.hpp"

namespace cbsteiner {

struct AuditReport {
    bool pass = false;
    Json report;
};

// Solver vs oracle over random connected instances (m <= 8, n <= 6),
// terminal cases cycling through all five types.
AuditReport oracle_sweep(int count, std::uint64_t seed);

// Random graphs on <= 7 vertices: min vertex cover vs min Steiner set on the
// reduced instance, caterpillar check, forward and backward certificate maps.
AuditReport vc_sweep(int count, std::uint64_t seed);

// Random connected interval families (<= 8 intervals): reduction pipeline vs
// brute force on the intersection graph.
AuditReport interval_sweep(int count, std::uint64_t seed);

// Domination via two Steiner calls: validity on every instance, size gap
// versus the minimum dominating set, and the m = 3 two-interval example.
// Passes when every output dominates and that example shows the gap 3 vs 2.
AuditReport domination_audit(int count, std::uint64_t seed);

// How often the table DP with back-pointer reconstruction misses the optimum
// on random R ⊂ Y instances. Informational; never fails.
AuditReport table_dp_audit(int count, std::uint64_t seed);

// Median wall time of solve_subset_y and compute_table for m = n = each size,
// and the fitted log-log exponent. Passes when both exponents are <= limit.
AuditReport scaling_audit(const std::vector<int>& sizes, int repeats, std::uint64_t seed, double limit = 3.5);

// Least-squares slope of log(time) against log(size).
double fitted_exponent(const std::vector<int>& sizes, const std::vector<double>& times);

}  // namespace cbsteiner
