#pragma once

// Floating-point oracles, independent of the residue bookkeeping: trapezoid
// quadrature of the Cauchy circle integral, product-trapezoid quadrature of
// the transfer integrand on the n-torus, and the Omega-versus-Xi inequality.

#include "chc/algebra.hpp"
#include "chc/theta.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace chc {

/// Smallest |log|a|| accepted by circle_quadrature.
inline constexpr double kMinContourDistance = 0.05;

/// (1/2 pi i) \oint z^k / (z - a) dz by the N-point trapezoid rule. Throws
/// std::domain_error if |log|a|| < kMinContourDistance, std::invalid_argument
/// if N < 64.
Complex circle_quadrature(std::int64_t k, Complex a, std::size_t N);

enum class PatternCheck { Enforce, Ignore };

/// Product-trapezoid value, N points per axis, of
///   \int_T numerator(theta) e^{i sum theta_j / 2} / weil_kernel_det(theta, theta', sigma, d) dtheta
/// (normalised Haar measure), where numerator is the discrete series
/// numerator of lambda. With PatternCheck::Enforce the signs of d must match
/// e_sigma_pattern(sigma) (std::invalid_argument otherwise). Throws
/// SingularPoint for singular theta'.
Complex transfer_quadrature_at(const HCParameter& lambda, SignaturePair target, const TorusPoint& theta_prime,
                               const Permutation& sigma, const Deformation& d, std::size_t N,
                               PatternCheck check = PatternCheck::Enforce);

struct QuadratureExtrapolation {
  std::vector<double> schedule;
  std::vector<Complex> level_values;  // quadrature at direction * schedule[k]
  Complex limit;                      // extrapolated to the unit torus
  std::vector<double> residuals;      // |level_values[k] - limit|
  double fit_residual = 0.0;          // worst log-linear misfit over numerator terms
};

/// Runs the quadrature along the deformation direction * x for every x in
/// schedule and extrapolates to x = 0. Each numerator term depends on x as
/// A e^{-M x}, so log|value| is fitted linearly in x per term; terms that
/// vanish on every level extrapolate to 0.
QuadratureExtrapolation transfer_quadrature(const HCParameter& lambda, SignaturePair target,
                                            const TorusPoint& theta_prime, const Permutation& sigma,
                                            const Deformation& direction, std::size_t N,
                                            std::span<const double> schedule,
                                            PatternCheck check = PatternCheck::Enforce);

/// The pattern-consistent unit deformation for sigma: X_{sigma(i)} = pattern[i].
Deformation pattern_direction(const Permutation& sigma, int p, int q, SignaturePair target);

/// What transfer_quadrature should converge to: (-1)^n e^{i xi.theta'} times
/// transfer_slice(lambda, target, sigma) evaluated at theta'.
Complex symbolic_slice_value(const HCParameter& lambda, SignaturePair target, const TorusPoint& theta_prime,
                             const Permutation& sigma);

/// prod_k ch(X_k)^{-n} / prod_k e^{-2p X_k}.
double omega_ratio(int p, int n, std::span<const double> X);

/// prod_k ch(X_k)^{-n} <= 2^{n p} prod_k e^{-2p X_k}. Throws
/// std::invalid_argument if n < 2p, X has length other than p, or some X_k <= 0.
bool omega_bound_check(int p, int n, std::span<const double> X);

// ------------------------------------------------------------ sweeps

struct CircleOracleReport {
  std::size_t N = 0;
  std::size_t cases = 0;
  double max_error = 0.0;
};

/// k in [-6, 6], |a| in {0.5, 0.9, 1.1, 2}, 8 phases.
CircleOracleReport circle_oracle_sweep(std::size_t N);

struct TransferOracleCase {
  int p = 0, q = 0;
  Weight lambda;
  SignaturePair target;
  Permutation sigma;
  TorusPoint theta_prime;
  Complex expected;
  Complex extrapolated;
  double relative_error = 0.0;
  bool symbolic_zero = false;
  bool residuals_monotone = false;
};

struct TransferOracleReport {
  std::size_t grid = 0;
  std::vector<double> schedule;
  std::vector<TransferOracleCase> cases;
  double max_relative_error = 0.0;
  double max_zero_slice_value = 0.0;
};

/// Every (p, q) with p <= q, p + q <= max_n, every parameter with entries of
/// modulus <= max_abs, every target, every sigma, `points` random regular theta'.
TransferOracleReport transfer_oracle_sweep(int max_n, HalfInt max_abs, std::size_t grid,
                                           std::span<const double> schedule, std::size_t points,
                                           std::uint64_t seed);

struct OmegaRow {
  int p = 0;
  int n = 0;
  std::size_t samples = 0;
  double min_constant = 0.0;   // max of omega_ratio over the samples
  double allowed_constant = 0.0;  // 2^{n p}
  std::size_t proof_chain_holds = 0;  // samples with ch(X_k)^{2p} >= e^{2p X_k} for all k
  bool bound_ok = true;
};

struct OmegaReport {
  std::vector<OmegaRow> rows;
  double min_constant = 0.0;
  bool all_ok = true;
};

/// `samples` draws of X in (0, 5]^p, cycling p = 1..3 and n = 2p..2p+3.
OmegaReport omega_survey(std::size_t samples, std::uint64_t seed);

}  // namespace chc
