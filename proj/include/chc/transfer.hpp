#pragma once

// Cauchy-Harish-Chandra transfer of a discrete series character of the
// double cover of U(p,q) to U(r,s), r + s = p + q, on the compact Cartan.
//
// Two routes are provided. transfer_bruteforce sums the residues of
//   sum_{sigma in S_n} sum_{beta in S_p x S_q} eps(sigma) eps(beta)
//     prod_i (1/2 pi i) \oint z^{lambda_i - 1/2} / (z - (r h')_{sigma beta^{-1}(i)}) dz
// with the side of each pole read off the deformation region E_{sigma}.
// transfer_closed_form is the alternating sum over S_r x S_s of tau_{a,b} lambda.
// Both drop the overall constant, so results are compared up to a scalar.

#include "chc/algebra.hpp"
#include "chc/characters.hpp"
#include "chc/theta.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace chc {

/// Coefficient c in (1/2 pi i) \oint z^k / (z - a) dz = c a^k: +1 for k >= 0
/// with the pole inside the circle, -1 for k < 0 with the pole outside, else 0.
int residue_coefficient(std::int64_t k, bool pole_inside);

/// Throws std::domain_error if ||a| - 1| <= 1e-12, or a == 0 with k < 0.
Complex cauchy_circle_integral(std::int64_t k, Complex a);

/// For each i, the required sign of X_{sigma(i)} in E_{sigma}; +1 means the
/// radius e^{-X} is below one.
std::vector<int> e_sigma_pattern(const Permutation& sigma, int p, int q, int r, int s);

/// True iff g = sigma o beta^{-1} sends every index to the block that gives a
/// nonzero residue.
bool residue_support_predicate(const Permutation& g, const HCParameter& lambda, SignaturePair target);

struct ResidueTerm {
  Permutation sigma;
  Permutation beta;
  Weight weight;  // (sigma beta^{-1}) lambda
  int sign = 1;   // eps(sigma) eps(beta) times the residue coefficients
};

/// The (sigma, beta) residue, or nullopt when some factor vanishes.
std::optional<ResidueTerm> residue_term(const Permutation& sigma, const Permutation& beta,
                                        const HCParameter& lambda, SignaturePair target);

/// sum_beta eps(beta) (residue coefficients) e^{(sigma beta^{-1}) lambda}; the
/// sigma-th summand of the brute force without eps(sigma).
SignedExpSum transfer_slice(const HCParameter& lambda, SignaturePair target, const Permutation& sigma);

/// Throws std::invalid_argument unless r, s >= 0 and r + s = p + q.
SignedExpSum transfer_bruteforce(const HCParameter& lambda, SignaturePair target);

/// Empty unless target == theta_signature(lambda).
SignedExpSum transfer_closed_form(const HCParameter& lambda, SignaturePair target);

/// prod_i (1 - h_i (r h')^{-1}_{sigma(i)}) with h_i = e^{i theta_i} and
/// (r h')_j = e^{-X_j + i theta'_j}.
Complex weil_kernel_det(const TorusPoint& theta, const TorusPoint& theta_prime, const Permutation& sigma,
                        const Deformation& d);

/// The brute-force transfer at the theta signature agrees up to a constant
/// with the discrete series numerator of U(r,s) at lambda'_{a,b}.
bool transfer_matches_theta_lift(const HCParameter& lambda);

}  // namespace chc
