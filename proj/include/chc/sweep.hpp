#pragma once

// Exhaustive verification of the transfer over a box of parameters.

#include "chc/theta.hpp"

#include <ostream>
#include <vector>

namespace chc {

struct SweepRow {
  int p = 0, q = 0;
  Weight lambda;
  int a = 0, b = 0;
  SignaturePair target;
  std::size_t terms = 0;        // terms of the brute-force transfer at the theta signature
  bool match = false;           // brute force == closed form == lifted numerator, up to a constant
  bool zero_elsewhere = false;  // brute force is empty at every other signature
  bool orbit_ok = false;        // tau lambda and lambda' share an S_r x S_s orbit

  bool passed() const { return match && zero_elsewhere && orbit_ok; }
};

/// Checks one parameter.
SweepRow verify_parameter(const HCParameter& lambda);

struct SweepReport {
  std::vector<SweepRow> rows;
  bool all_passed = true;
};

/// All (p, q) with p <= q and 1 <= p + q <= max_n, all parameters with
/// |lambda_i| <= max_abs. Rows come back sorted by (p + q, p, lambda)
/// whatever the value of jobs. Throws std::invalid_argument if max_n > 8 or jobs < 1.
SweepReport run_sweep(int max_n, HalfInt max_abs, int jobs = 1);

/// Header plus one line per row, LF endings.
void write_sweep_csv(std::ostream& os, const SweepReport& report);

}  // namespace chc
