#include "chc/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace chc {

namespace {

void check_target(const HCParameter& lambda, SignaturePair target) {
  if (target.r < 0 || target.s < 0 || target.r + target.s != lambda.n()) {
    throw std::invalid_argument("target signature must satisfy r, s >= 0 and r + s = p + q");
  }
}

// Exponent k = lambda_i - 1/2 of the i-th contour factor.
std::int64_t contour_exponent(HalfInt entry) {
  if (!entry.is_strict_half()) throw std::invalid_argument("non-genuine parameter: integer entry");
  return (entry.twice() - 1) / 2;
}

// Product of the residue coefficients for the pair (sigma, beta), or 0. The
// i-th factor has its pole at coordinate sigma(beta^{-1}(i)) whose side is
// pattern[beta^{-1}(i)].
int residue_sign(std::span<const int> pattern, std::span<const int> beta_inverse,
                 std::span<const std::int64_t> exponents) {
  int sign = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const auto m = static_cast<std::size_t>(beta_inverse[i]);
    const int c = residue_coefficient(exponents[i], pattern[m] > 0);
    if (c == 0) return 0;
    sign *= c;
  }
  return sign;
}

std::vector<std::int64_t> contour_exponents(const HCParameter& lambda) {
  std::vector<std::int64_t> out;
  for (auto x : lambda.entries()) out.push_back(contour_exponent(x));
  return out;
}

// (sigma beta^{-1}) lambda, written coordinate by coordinate.
Weight moved_weight(const Permutation& sigma, std::span<const int> beta_inverse, const Weight& lambda) {
  Weight out = Weight::zero(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    out[static_cast<std::size_t>(sigma(beta_inverse[i]))] = lambda[i];
  }
  return out;
}

struct BlockElement {
  std::vector<int> inverse;
  Permutation perm;
  int sign;
};

std::vector<BlockElement> block_elements(const HCParameter& lambda) {
  std::vector<BlockElement> out;
  for (auto& [beta, sign] : block_group(static_cast<std::size_t>(lambda.p()),
                                        static_cast<std::size_t>(lambda.q()))) {
    const auto inv = beta.inverse();
    out.push_back({std::vector<int>(inv.zero_based().begin(), inv.zero_based().end()), beta, sign});
  }
  return out;
}

}  // namespace

int residue_coefficient(std::int64_t k, bool pole_inside) {
  if (k >= 0 && pole_inside) return 1;
  if (k < 0 && !pole_inside) return -1;
  return 0;
}

Complex cauchy_circle_integral(std::int64_t k, Complex a) {
  const double modulus = std::abs(a);
  if (std::abs(modulus - 1.0) <= 1e-12) throw std::domain_error("pole on the unit circle");
  if (modulus == 0.0 && k < 0) throw std::domain_error("a = 0 with negative exponent");
  const int c = residue_coefficient(k, modulus < 1.0);
  if (c == 0) return {0.0, 0.0};
  return static_cast<double>(c) * std::pow(a, static_cast<int>(k));
}

std::vector<int> e_sigma_pattern(const Permutation& sigma, int p, int q, int r, int s) {
  if (p < 0 || q < 0 || r < 0 || s < 0 || p + q != r + s || sigma.size() != static_cast<std::size_t>(p + q)) {
    throw std::invalid_argument("e_sigma_pattern: inconsistent sizes");
  }
  std::vector<int> out(sigma.size());
  for (int i = 0; i < p + q; ++i) {
    const bool source_first = i < p;
    const bool image_first = sigma(i) < r;
    out[static_cast<std::size_t>(i)] = source_first == image_first ? 1 : -1;
  }
  return out;
}

bool residue_support_predicate(const Permutation& g, const HCParameter& lambda, SignaturePair target) {
  check_target(lambda, target);
  if (g.size() != static_cast<std::size_t>(lambda.n())) throw std::invalid_argument("permutation size mismatch");
  for (int i = 0; i < lambda.n(); ++i) {
    const bool positive = lambda[static_cast<std::size_t>(i)] > HalfInt();
    const bool first_block = i < lambda.p();
    const bool to_first = g(i) < target.r;
    // Positive entries of the first block and negative entries of the second
    // must land in 1..r; the other two kinds in r+1..r+s.
    if (to_first != (positive == first_block)) return false;
  }
  return true;
}

std::optional<ResidueTerm> residue_term(const Permutation& sigma, const Permutation& beta,
                                        const HCParameter& lambda, SignaturePair target) {
  check_target(lambda, target);
  const auto pattern = e_sigma_pattern(sigma, lambda.p(), lambda.q(), target.r, target.s);
  const auto beta_inverse = beta.inverse();
  const auto exponents = contour_exponents(lambda);
  const int coeff = residue_sign(pattern, beta_inverse.zero_based(), exponents);
  if (coeff == 0) return std::nullopt;
  return ResidueTerm{sigma, beta, moved_weight(sigma, beta_inverse.zero_based(), lambda.entries()),
                     sigma.sign() * beta.sign() * coeff};
}

SignedExpSum transfer_slice(const HCParameter& lambda, SignaturePair target, const Permutation& sigma) {
  check_target(lambda, target);
  const auto pattern = e_sigma_pattern(sigma, lambda.p(), lambda.q(), target.r, target.s);
  const auto exponents = contour_exponents(lambda);
  SignedExpSum out;
  for (const auto& beta : block_elements(lambda)) {
    const int coeff = residue_sign(pattern, beta.inverse, exponents);
    if (coeff != 0) out.add(moved_weight(sigma, beta.inverse, lambda.entries()), beta.sign * coeff);
  }
  return out;
}

SignedExpSum transfer_bruteforce(const HCParameter& lambda, SignaturePair target) {
  check_target(lambda, target);
  const auto exponents = contour_exponents(lambda);
  const auto betas = block_elements(lambda);
  SignedExpSum out;
  for (const auto& [sigma, sigma_sign] : symmetric_group(static_cast<std::size_t>(lambda.n()))) {
    const auto pattern = e_sigma_pattern(sigma, lambda.p(), lambda.q(), target.r, target.s);
    for (const auto& beta : betas) {
      const int coeff = residue_sign(pattern, beta.inverse, exponents);
      if (coeff == 0) continue;
      out.add(moved_weight(sigma, beta.inverse, lambda.entries()), sigma_sign * beta.sign * coeff);
    }
  }
  return out;
}

SignedExpSum transfer_closed_form(const HCParameter& lambda, SignaturePair target) {
  check_target(lambda, target);
  SignedExpSum out;
  if (target != theta_signature(lambda)) return out;
  const auto moved = weight_permute(tau_permutation(lambda, target), lambda.entries());
  for (const auto& [sigma, sign] : block_group(static_cast<std::size_t>(target.r),
                                               static_cast<std::size_t>(target.s))) {
    out.add(weight_permute(sigma, moved), sign);
  }
  return out;
}

Complex weil_kernel_det(const TorusPoint& theta, const TorusPoint& theta_prime, const Permutation& sigma,
                        const Deformation& d) {
  const auto n = theta.size();
  if (theta_prime.size() != n || sigma.size() != n || d.size() != n) {
    throw std::invalid_argument("weil_kernel_det: length mismatch");
  }
  Complex out{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(sigma(static_cast<int>(i)));
    const Complex h = std::polar(1.0, theta.theta[i]);
    const Complex rh = std::exp(Complex(-d[j], theta_prime.theta[j]));
    out *= 1.0 - h / rh;
  }
  return out;
}

bool transfer_matches_theta_lift(const HCParameter& lambda) {
  const auto target = theta_signature(lambda);
  const auto brute = transfer_bruteforce(lambda, target);
  const auto lifted = ds_numerator(theta_lift(lambda));
  return !brute.empty() && expsum_equal_up_to_constant(brute, lifted.numerator);
}

}  // namespace chc
