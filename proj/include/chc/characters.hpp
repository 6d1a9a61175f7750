#pragma once

// Discrete series characters on the compact Cartan: the alternating
// numerator over the compact Weyl group, pointwise values and boundedness.

#include "chc/algebra.hpp"
#include "chc/roots.hpp"
#include "chc/theta.hpp"

#include <cstdint>
#include <stdexcept>

namespace chc {

class SingularPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Theta_lambda = global_sign * numerator / delta_psi on the compact Cartan.
struct DSCharacter {
  SignedExpSum numerator;
  int global_sign = 1;
  RootSystem roots;
};

/// numerator = sum_{w in S_p x S_q} eps(w) e^{w lambda}, global_sign = (-1)^{pq}.
DSCharacter ds_numerator(const HCParameter& lambda);

/// Throws SingularPoint if weyl_D_sqrt(theta) <= kRegularityTolerance.
Complex ds_evaluate(const DSCharacter& c, const TorusPoint& theta);

/// Minimum weyl_D_sqrt accepted by the random samplers.
inline constexpr double kSamplingRejection = 1e-6;

/// Uniform points of [0, 2pi)^n with weyl_D_sqrt > kSamplingRejection.
std::vector<TorusPoint> sample_regular_points(std::size_t n, std::size_t count, std::uint64_t seed);

/// max over sampled regular theta of |D|^{1/2} |num(theta) / delta_psi(theta)|.
double boundedness_scan(const SignedExpSum& num, std::size_t samples, std::uint64_t seed);

/// Seed from CHC_SEED when set, otherwise `fallback`.
std::uint64_t seed_from_environment(std::uint64_t fallback = 20240917);

}  // namespace chc
