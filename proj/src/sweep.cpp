#include "chc/sweep.hpp"

#include "chc/characters.hpp"
#include "chc/transfer.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

namespace chc {

SweepRow verify_parameter(const HCParameter& lambda) {
  SweepRow row;
  row.p = lambda.p();
  row.q = lambda.q();
  row.lambda = lambda.entries();
  row.a = lambda.a();
  row.b = lambda.b();
  row.target = theta_signature(lambda);

  const auto brute = transfer_bruteforce(lambda, row.target);
  row.terms = brute.size();
  row.match = !brute.empty() && expsum_equal_up_to_constant(brute, transfer_closed_form(lambda, row.target)) &&
              expsum_equal_up_to_constant(brute, ds_numerator(theta_lift(lambda)).numerator);

  row.zero_elsewhere = true;
  for (int r = 0; r <= lambda.n() && row.zero_elsewhere; ++r) {
    const SignaturePair other{r, lambda.n() - r};
    if (other != row.target && !transfer_bruteforce(lambda, other).empty()) row.zero_elsewhere = false;
  }

  const auto moved = weight_permute(tau_permutation(lambda, row.target), lambda.entries());
  row.orbit_ok = weyl_orbit_equal(moved, theta_parameter(lambda), OrbitMode::Block,
                                  static_cast<std::size_t>(row.target.r));
  return row;
}

SweepReport run_sweep(int max_n, HalfInt max_abs, int jobs) {
  if (max_n > 8) throw std::invalid_argument("max_n above 8 is refused");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");

  std::vector<HCParameter> params;
  for (int n = 1; n <= max_n; ++n) {
    for (int p = 0; 2 * p <= n; ++p) {
      auto batch = enumerate_parameters(p, n - p, max_abs);
      params.insert(params.end(), batch.begin(), batch.end());
    }
  }

  SweepReport report;
  report.rows.resize(params.size());
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < params.size(); i += static_cast<std::size_t>(jobs)) {
      report.rows[i] = verify_parameter(params[i]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
  }

  std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return std::make_tuple(x.p + x.q, x.p, std::cref(x.lambda)) < std::make_tuple(y.p + y.q, y.p, std::cref(y.lambda));
  });
  for (const auto& row : report.rows) report.all_passed = report.all_passed && row.passed();
  return report;
}

void write_sweep_csv(std::ostream& os, const SweepReport& report) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << "p,q,lambda,a,b,r,s,terms,match,zero_elsewhere,orbit_ok\n";
  for (const auto& row : report.rows) {
    os << row.p << ',' << row.q << ',';
    for (std::size_t i = 0; i < row.lambda.size(); ++i) os << (i ? " " : "") << row.lambda[i].str();
    os << ',' << row.a << ',' << row.b << ',' << row.target.r << ',' << row.target.s << ',' << row.terms << ','
       << flag(row.match) << ',' << flag(row.zero_elsewhere) << ',' << flag(row.orbit_ok) << '\n';
  }
}

}  // namespace chc
