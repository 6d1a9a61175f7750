#include "chc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chc {

namespace {

// Coordinates ((m-1)/2, (m-3)/2, ..., -(m-1)/2) as doubled integers.
void append_half_sum_of_roots(std::vector<HalfInt>& out, std::size_t m) {
  const auto top = static_cast<std::int64_t>(m) - 1;
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(HalfInt::from_twice(top - 2 * static_cast<std::int64_t>(i)));
  }
}

double root_angle(const Root& a, const TorusPoint& theta) {
  return theta.theta[static_cast<std::size_t>(a.i)] - theta.theta[static_cast<std::size_t>(a.j)];
}

void check_length(const RootSystem& rs, const TorusPoint& theta) {
  if (theta.size() != rs.n()) throw std::invalid_argument("torus point has the wrong length");
}

}  // namespace

RootSystem build_root_system(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) throw std::invalid_argument("need p, q >= 0 and p + q >= 1");
  RootSystem rs;
  rs.p_ = static_cast<std::size_t>(p);
  rs.q_ = static_cast<std::size_t>(q);
  rs.n_ = rs.p_ + rs.q_;
  for (int i = 0; i < p + q; ++i) {
    for (int j = i + 1; j < p + q; ++j) {
      rs.roots_.push_back({i, j, (i < p) == (j < p)});
    }
  }
  std::vector<HalfInt> rho;
  append_half_sum_of_roots(rho, rs.n_);
  rs.rho_ = Weight(std::move(rho));
  std::vector<HalfInt> rho_k;
  append_half_sum_of_roots(rho_k, rs.p_);
  append_half_sum_of_roots(rho_k, rs.q_);
  rs.rho_compact_ = Weight(std::move(rho_k));
  return rs;
}

// With G' = G the pair offsets reduce to alpha = p (r = p <= s = q).
std::vector<StronglyOrthogonalSet> strongly_orthogonal_sets(int p, int q) {
  if (p < 0 || q < 0 || p > q) throw std::invalid_argument("strongly_orthogonal_sets needs 0 <= p <= q");
  std::vector<StronglyOrthogonalSet> out;
  StronglyOrthogonalSet current;
  out.push_back(current);
  for (int t = 1; t <= p; ++t) {
    current.index = t;
    current.pairs.emplace_back(t - 1, p + t - 1);
    out.push_back(current);
  }
  return out;
}

CartanShape cartan_shape(const StronglyOrthogonalSet& s, int n) {
  const auto pairs = static_cast<int>(s.pairs.size());
  if (2 * pairs > n) throw std::invalid_argument("strongly orthogonal set too large for rank");
  return {n - 2 * pairs, pairs};
}

Complex delta_psi(const RootSystem& rs, const TorusPoint& theta) {
  check_length(rs, theta);
  Complex out{1.0, 0.0};
  for (const auto& a : rs.positive_roots()) {
    out *= Complex(0.0, 2.0 * std::sin(0.5 * root_angle(a, theta)));
  }
  return out;
}

Complex delta_phi(const RootSystem& rs, const TorusPoint& theta) {
  check_length(rs, theta);
  Complex out{1.0, 0.0};
  for (const auto& a : rs.positive_roots()) {
    out *= Complex(0.0, -2.0 * std::sin(0.5 * root_angle(a, theta)));
  }
  return out;
}

double abs_delta_squared(const RootSystem& rs, const TorusPoint& theta) {
  check_length(rs, theta);
  double out = 1.0;
  for (const auto& a : rs.positive_roots()) out *= std::norm(1.0 - std::polar(1.0, root_angle(a, theta)));
  return out;
}

double weyl_D_sqrt(const RootSystem& rs, const TorusPoint& theta) {
  check_length(rs, theta);
  double out = 1.0;
  for (const auto& a : rs.positive_roots()) out *= std::abs(1.0 - std::polar(1.0, root_angle(a, theta)));
  return out;
}

bool is_regular(const RootSystem& rs, const TorusPoint& theta, double tolerance) {
  return weyl_D_sqrt(rs, theta) > tolerance;
}

std::vector<std::pair<int, int>> eta_roots(int k, int r, int s) {
  const int n = r + s;
  if (k < 1 || k > std::min(r, s)) throw std::invalid_argument("eta roots need 1 <= k <= min(r,s)");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i) {
    for (int j = k; j < n - k; ++j) out.emplace_back(i, j);
  }
  for (int i = k; i < n - k; ++i) {
    for (int j = n - k; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

Complex eta_determinant(int k, int r, int s, const EtaCoordinates& coords) {
  const int n = r + s;
  const auto roots = eta_roots(k, r, s);
  if (coords.theta.size() != static_cast<std::size_t>(k) ||
      coords.log_radius.size() != static_cast<std::size_t>(k) ||
      coords.circle_angles.size() != static_cast<std::size_t>(n - 2 * k)) {
    throw std::invalid_argument("eta coordinates have the wrong shape");
  }
  std::vector<Complex> h(static_cast<std::size_t>(n));
  for (int t = 0; t < k; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    h[ut] = std::exp(Complex(-coords.log_radius[ut], coords.theta[ut]));
    h[static_cast<std::size_t>(n - k + t)] = std::exp(Complex(coords.log_radius[ut], coords.theta[ut]));
  }
  for (int j = 0; j < n - 2 * k; ++j) {
    h[static_cast<std::size_t>(k + j)] = std::polar(1.0, coords.circle_angles[static_cast<std::size_t>(j)]);
  }
  Complex out{1.0, 0.0};
  for (auto [i, j] : roots) {
    out *= 1.0 - h[static_cast<std::size_t>(j)] / h[static_cast<std::size_t>(i)];
  }
  return out;
}

double eta_positivity(int k, int r, int s, const EtaCoordinates& coords) {
  const auto value = eta_determinant(k, r, s, coords);
  const double scale = std::max(1.0, std::abs(value));
  if (std::abs(value) <= kRegularityTolerance) throw std::domain_error("singular point for eta'(S_k)");
  if (std::abs(value.imag()) > 1e-10 * scale || value.real() <= 0.0) {
    throw std::logic_error("det(Id - Ad(h))|eta'(S_k) is not real positive");
  }
  return value.real();
}

}  // namespace chc
