#pragma once

#include <optional>
#include <vector>

#include "lasgap/instances.hpp"

namespace lasgap {

struct KnapScanRow {
  Rat p;
  bool verdict = false;                 // certificate certifies some gap
  Rat relaxation_value{0};
  bool gap_at_least_k = false;          // verdict and relaxation <= 1/k
};

struct KnapScanResult {
  int n = 0;
  Rat k;
  Rat lower_bound;  // (k-1)(2^n-1)^2: below this no certificate of gap >= k exists
  Rat upper_bound;  // k 2^{2n+1}: the closed-form construction works here
  std::vector<KnapScanRow> rows;  // ascending in p
  std::optional<Rat> threshold;   // least grid p whose row certifies gap >= k
};

// Sweeps the knapsack threshold parameter P over a geometric grid spanning
// the two analytic bounds and certifies the canonical symmetric certificate
// family at each point. The reported threshold is an upper estimate of the
// true feasibility threshold (only the symmetric family is tried). Requires
// k >= 2. jobs > 1 certifies grid points in parallel.
KnapScanResult scan_knap(int n, const Rat& k, int jobs = 1);

}  // namespace lasgap
