#pragma once

// Harish-Chandra parameters of genuine discrete series of the double cover of
// U(p,q), the theta correspondence on these parameters, the reordering
// permutation tau_{a,b} and Weyl-orbit comparisons.

#include "chc/algebra.hpp"

#include <stdexcept>
#include <string_view>

namespace chc {

enum class ParameterError {
  LengthMismatch,
  NonHalfInteger,
  NotDecreasing,
  ZeroEntry,
  Duplicate,
};

std::string_view to_string(ParameterError e);

class InvalidParameter : public std::invalid_argument {
 public:
  InvalidParameter(ParameterError kind, const std::string& detail);
  ParameterError kind() const { return kind_; }

 private:
  ParameterError kind_;
};

/// lambda_{a,b} = (alpha | beta || gamma | delta): two strictly decreasing
/// blocks of sizes p and q in Z + 1/2, with a (resp. b) positive entries
/// leading the first (resp. second) block, all entries distinct.
class HCParameter {
 public:
  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  int a() const { return a_; }
  int b() const { return b_; }
  const Weight& entries() const { return entries_; }
  HalfInt operator[](std::size_t i) const { return entries_[i]; }

  auto operator<=>(const HCParameter&) const = default;

 private:
  friend HCParameter validate_hc_parameter(const Weight& raw, int p, int q);
  int p_ = 0, q_ = 0, a_ = 0, b_ = 0;
  Weight entries_;
};

/// Throws InvalidParameter. Checks run in the order LengthMismatch, ZeroEntry,
/// NonHalfInteger, NotDecreasing, Duplicate.
HCParameter validate_hc_parameter(const Weight& raw, int p, int q);

struct SignaturePair {
  int r = 0;
  int s = 0;
  auto operator<=>(const SignaturePair&) const = default;
};

/// (r, s) = (a + q - b, b + p - a).
SignaturePair theta_signature(const HCParameter& lambda);

/// lambda'_{a,b} = (alpha, delta, gamma, beta).
Weight theta_parameter(const HCParameter& lambda);

/// The theta lift as a validated parameter of U(r, s).
HCParameter theta_lift(const HCParameter& lambda);

/// tau_{a,b} in S_{r+s}; identity on the stabilised index sets. Throws
/// std::invalid_argument unless target == theta_signature(lambda).
Permutation tau_permutation(const HCParameter& lambda, SignaturePair target);

enum class OrbitMode { Full, Block };

/// Full: same S_n orbit. Block: same S_r x S_s orbit with the split after
/// the first `split` coordinates.
bool weyl_orbit_equal(const Weight& mu, const Weight& nu, OrbitMode mode, std::size_t split = 0);

/// Highest weight of the lowest K-type, lambda + rho - 2 rho(k).
Weight lowest_k_type(const HCParameter& lambda);

/// All valid parameters of U(p,q) with |lambda_i| <= max_abs, in increasing
/// order of the entry vector.
std::vector<HCParameter> enumerate_parameters(int p, int q, HalfInt max_abs);

}  // namespace chc
