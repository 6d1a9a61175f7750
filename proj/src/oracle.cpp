#include "chc/oracle.hpp"

#include "chc/characters.hpp"
#include "chc/roots.hpp"
#include "chc/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace chc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Quadrature values below this on every level are residues that vanish.
constexpr double kVanishingTerm = 1e-10;

// Residuals below this are trapezoid aliasing, about e^{-N x}, and carry no
// ordering information.
constexpr double kResidualFloor = 1e-12;

void check_regular_target(const TorusPoint& theta_prime, std::size_t n) {
  if (theta_prime.size() != n) throw std::invalid_argument("theta' has the wrong length");
  const auto rs = build_root_system(0, static_cast<int>(n));
  if (!is_regular(rs, theta_prime)) throw SingularPoint("theta' is singular");
}

void check_pattern(const HCParameter& lambda, SignaturePair target, const Permutation& sigma,
                   const Deformation& d) {
  const auto pattern = e_sigma_pattern(sigma, lambda.p(), lambda.q(), target.r, target.s);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const double x = d[static_cast<std::size_t>(sigma(static_cast<int>(i)))];
    if ((x > 0.0 ? 1 : -1) != pattern[i]) {
      throw std::invalid_argument("pattern mismatch: deformation is not in E_sigma");
    }
  }
}

// Quadrature of each numerator term on its own, in the iteration order of
// the numerator. The integrand of a single term is a product of one-variable
// factors, so the N^n-point product rule is the product of N-point rules.
std::vector<Complex> term_values(const SignedExpSum& numerator, const TorusPoint& theta_prime,
                                 const Permutation& sigma, const Deformation& d, std::size_t N) {
  const auto n = theta_prime.size();
  std::vector<Complex> nodes(N);
  for (std::size_t k = 0; k < N; ++k) nodes[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / N);

  // Inverse kernel factor per axis and node.
  std::vector<std::vector<Complex>> kernel(n, std::vector<Complex>(N));
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(sigma(static_cast<int>(i)));
    const Complex pole = std::exp(Complex(-d[j], theta_prime.theta[j]));
    for (std::size_t k = 0; k < N; ++k) kernel[i][k] = 1.0 / (1.0 - nodes[k] / pole);
  }

  std::vector<Complex> out;
  out.reserve(numerator.size());
  for (const auto& [w, coeff] : numerator.terms()) {
    Complex value = static_cast<double>(coeff);
    for (std::size_t i = 0; i < n; ++i) {
      // Integer frequency (w + xi)_i.
      const auto m = static_cast<int>((w[i].twice() + 1) / 2);
      Complex axis{0.0, 0.0};
      for (std::size_t k = 0; k < N; ++k) {
        const auto idx = static_cast<std::size_t>(((static_cast<long long>(m) * static_cast<long long>(k)) %
                                                   static_cast<long long>(N) + static_cast<long long>(N)) %
                                                  static_cast<long long>(N));
        axis += nodes[idx] * kernel[i][k];
      }
      value *= axis / static_cast<double>(N);
    }
    out.push_back(value);
  }
  return out;
}

void check_quadrature_args(const HCParameter& lambda, SignaturePair target, const Permutation& sigma,
                           std::size_t d_size, std::size_t N) {
  if (target.r < 0 || target.s < 0 || target.r + target.s != lambda.n()) {
    throw std::invalid_argument("target signature must satisfy r + s = p + q");
  }
  const auto n = static_cast<std::size_t>(lambda.n());
  if (sigma.size() != n || d_size != n) throw std::invalid_argument("transfer quadrature: length mismatch");
  if (N < 8) throw std::invalid_argument("transfer quadrature needs at least 8 nodes per axis");
}

}  // namespace

Complex circle_quadrature(std::int64_t k, Complex a, std::size_t N) {
  if (N < 64) throw std::invalid_argument("circle_quadrature needs N >= 64");
  if (std::abs(std::log(std::abs(a))) < kMinContourDistance) {
    throw std::domain_error("pole too close to the unit circle for the trapezoid rule");
  }
  // dz = i z dtheta, so (1/2 pi i) \oint f dz = (1/N) sum_j f(z_j) z_j.
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < N; ++j) {
    const Complex z = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(N));
    sum += std::pow(z, static_cast<int>(k)) / (z - a) * z;
  }
  return sum / static_cast<double>(N);
}

Complex transfer_quadrature_at(const HCParameter& lambda, SignaturePair target, const TorusPoint& theta_prime,
                               const Permutation& sigma, const Deformation& d, std::size_t N,
                               PatternCheck check) {
  check_quadrature_args(lambda, target, sigma, d.size(), N);
  check_regular_target(theta_prime, static_cast<std::size_t>(lambda.n()));
  if (check == PatternCheck::Enforce) check_pattern(lambda, target, sigma, d);
  Complex total{0.0, 0.0};
  for (auto v : term_values(ds_numerator(lambda).numerator, theta_prime, sigma, d, N)) total += v;
  return total;
}

QuadratureExtrapolation transfer_quadrature(const HCParameter& lambda, SignaturePair target,
                                            const TorusPoint& theta_prime, const Permutation& sigma,
                                            const Deformation& direction, std::size_t N,
                                            std::span<const double> schedule, PatternCheck check) {
  check_quadrature_args(lambda, target, sigma, direction.size(), N);
  check_regular_target(theta_prime, static_cast<std::size_t>(lambda.n()));
  if (schedule.size() < 2) throw std::invalid_argument("extrapolation needs at least two levels");
  for (double x : schedule) {
    if (!(x > 0.0)) throw std::invalid_argument("schedule entries must be positive");
  }
  if (check == PatternCheck::Enforce) check_pattern(lambda, target, sigma, direction);

  const auto numerator = ds_numerator(lambda).numerator;
  const auto levels = schedule.size();
  std::vector<std::vector<Complex>> per_level;
  for (double x : schedule) per_level.push_back(term_values(numerator, theta_prime, sigma, direction.scaled(x), N));

  QuadratureExtrapolation out;
  out.schedule.assign(schedule.begin(), schedule.end());
  out.level_values.assign(levels, Complex{0.0, 0.0});
  out.limit = {0.0, 0.0};

  const std::size_t smallest = static_cast<std::size_t>(
      std::min_element(schedule.begin(), schedule.end()) - schedule.begin());
  double mean_x = 0.0;
  for (double x : schedule) mean_x += x;
  mean_x /= static_cast<double>(levels);

  for (std::size_t t = 0; t < numerator.size(); ++t) {
    bool vanishing = true;
    for (std::size_t k = 0; k < levels; ++k) {
      out.level_values[k] += per_level[k][t];
      if (std::abs(per_level[k][t]) >= kVanishingTerm) vanishing = false;
    }
    if (vanishing) continue;

    // Least-squares line through (x_k, log|v_k|).
    double mean_y = 0.0;
    std::vector<double> y(levels);
    for (std::size_t k = 0; k < levels; ++k) {
      y[k] = std::log(std::abs(per_level[k][t]));
      mean_y += y[k];
    }
    mean_y /= static_cast<double>(levels);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < levels; ++k) {
      sxy += (schedule[k] - mean_x) * (y[k] - mean_y);
      sxx += (schedule[k] - mean_x) * (schedule[k] - mean_x);
    }
    if (sxx == 0.0) throw std::invalid_argument("schedule entries must be distinct");
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    for (std::size_t k = 0; k < levels; ++k) {
      out.fit_residual = std::max(out.fit_residual, std::abs(y[k] - (intercept + slope * schedule[k])));
    }
    out.limit += std::polar(std::exp(intercept), std::arg(per_level[smallest][t]));
  }

  for (const auto& v : out.level_values) out.residuals.push_back(std::abs(v - out.limit));
  return out;
}

Deformation pattern_direction(const Permutation& sigma, int p, int q, SignaturePair target) {
  const auto pattern = e_sigma_pattern(sigma, p, q, target.r, target.s);
  std::vector<double> x(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    x[static_cast<std::size_t>(sigma(static_cast<int>(i)))] = static_cast<double>(pattern[i]);
  }
  return Deformation(std::move(x));
}

Complex symbolic_slice_value(const HCParameter& lambda, SignaturePair target, const TorusPoint& theta_prime,
                             const Permutation& sigma) {
  const auto n = static_cast<std::size_t>(lambda.n());
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * torus_char(theta_prime, Weight::half_ones(n)) *
         transfer_slice(lambda, target, sigma).evaluate(theta_prime);
}

double omega_ratio(int p, int n, std::span<const double> X) {
  // Logarithms keep large n p X away from overflow.
  double log_ratio = 0.0;
  for (double x : X) log_ratio += 2.0 * p * x - n * std::log(std::cosh(x));
  return std::exp(log_ratio);
}

bool omega_bound_check(int p, int n, std::span<const double> X) {
  if (p < 1 || n < 2 * p) throw std::invalid_argument("omega bound needs p >= 1 and n >= 2p");
  if (X.size() != static_cast<std::size_t>(p)) throw std::invalid_argument("X must have length p");
  for (double x : X) {
    if (!(x > 0.0)) throw std::invalid_argument("X_k must be positive");
  }
  return omega_ratio(p, n, X) <= std::pow(2.0, n * p);
}

CircleOracleReport circle_oracle_sweep(std::size_t N) {
  CircleOracleReport out;
  out.N = N;
  for (int k = -6; k <= 6; ++k) {
    for (double modulus : {0.5, 0.9, 1.1, 2.0}) {
      for (int phase = 0; phase < 8; ++phase) {
        const Complex a = std::polar(modulus, kTwoPi * (phase + 0.5) / 8.0);
        const double err = std::abs(circle_quadrature(k, a, N) - cauchy_circle_integral(k, a));
        out.max_error = std::max(out.max_error, err);
        ++out.cases;
      }
    }
  }
  return out;
}

TransferOracleReport transfer_oracle_sweep(int max_n, HalfInt max_abs, std::size_t grid,
                                           std::span<const double> schedule, std::size_t points,
                                           std::uint64_t seed) {
  TransferOracleReport out;
  out.grid = grid;
  out.schedule.assign(schedule.begin(), schedule.end());
  std::uint64_t stream = seed;
  for (int n = 1; n <= max_n; ++n) {
    const auto thetas = sample_regular_points(static_cast<std::size_t>(n), points, stream++);
    for (int p = 0; 2 * p <= n; ++p) {
      const int q = n - p;
      for (const auto& lambda : enumerate_parameters(p, q, max_abs)) {
        for (int r = 0; r <= n; ++r) {
          const SignaturePair target{r, n - r};
          for (const auto& [sigma, sign] : symmetric_group(static_cast<std::size_t>(n))) {
            const auto direction = pattern_direction(sigma, p, q, target);
            for (const auto& theta : thetas) {
              TransferOracleCase c;
              c.p = p;
              c.q = q;
              c.lambda = lambda.entries();
              c.target = target;
              c.sigma = sigma;
              c.theta_prime = theta;
              c.expected = symbolic_slice_value(lambda, target, theta, sigma);
              const auto ex = transfer_quadrature(lambda, target, theta, sigma, direction, grid, schedule);
              c.extrapolated = ex.limit;
              c.symbolic_zero = transfer_slice(lambda, target, sigma).empty();
              const double diff = std::abs(c.extrapolated - c.expected);
              if (c.symbolic_zero) {
                c.relative_error = diff;
                out.max_zero_slice_value = std::max(out.max_zero_slice_value, diff);
              } else {
                c.relative_error = diff / std::max(std::abs(c.expected), 1e-300);
              }
              c.residuals_monotone = true;
              for (std::size_t k = 1; k < ex.residuals.size(); ++k) {
                // Residuals are listed in schedule order; a smaller x must not do worse.
                const bool closer = schedule[k] < schedule[k - 1];
                const double before = ex.residuals[k - 1], after = ex.residuals[k];
                if (closer ? after > before * (1.0 + 1e-9) + kResidualFloor
                           : before > after * (1.0 + 1e-9) + kResidualFloor) {
                  c.residuals_monotone = false;
                }
              }
              out.max_relative_error = std::max(out.max_relative_error, c.relative_error);
              out.cases.push_back(std::move(c));
            }
          }
        }
      }
    }
  }
  return out;
}

OmegaReport omega_survey(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::map<std::pair<int, int>, OmegaRow> rows;
  for (std::size_t i = 0; i < samples; ++i) {
    const int p = 1 + static_cast<int>(i % 3);
    const int n = 2 * p + static_cast<int>((i / 3) % 4);
    std::vector<double> X(static_cast<std::size_t>(p));
    // 1 - u lies in (0, 1], so X lies in (0, 5].
    for (auto& x : X) x = 5.0 * (1.0 - unit(rng));

    auto& row = rows[{p, n}];
    row.p = p;
    row.n = n;
    row.allowed_constant = std::pow(2.0, n * p);
    ++row.samples;
    row.min_constant = std::max(row.min_constant, omega_ratio(p, n, X));
    if (!omega_bound_check(p, n, X)) row.bound_ok = false;
    bool chain = true;
    for (double x : X) chain = chain && 2 * p * std::log(std::cosh(x)) >= 2.0 * p * x;
    if (chain) ++row.proof_chain_holds;
  }
  OmegaReport out;
  for (auto& [key, row] : rows) {
    out.min_constant = std::max(out.min_constant, row.min_constant);
    out.all_ok = out.all_ok && row.bound_ok && std::isfinite(row.min_constant);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace chc
