#pragma once

// Exact arithmetic substrate: half-integers, weights, permutations, signed
// exponential sums and points of the double-cover torus.

#include <boost/rational.hpp>

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chc {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

/// A number in (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

  /// Accepts "k", "k/2" with an optional sign. Throws std::invalid_argument.
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_strict_half() const { return (twice_ & 1) != 0; }
  constexpr bool is_zero() const { return twice_ == 0; }
  double value() const { return 0.5 * static_cast<double>(twice_); }

  /// "k/2" for strict halves, plain "k" otherwise.
  std::string str() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt other) const { return HalfInt(twice_ + other.twice_); }
  constexpr HalfInt operator-(HalfInt other) const { return HalfInt(twice_ - other.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// A linear form sum_i w_i e_i with half-integer coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<HalfInt> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<HalfInt> coords) : coords_(coords) {}

  static Weight zero(std::size_t n) { return Weight(std::vector<HalfInt>(n)); }
  /// xi = (1/2, ..., 1/2).
  static Weight half_ones(std::size_t n);
  static Weight from_twice(std::span<const std::int64_t> twice);
  /// Comma separated list of half-integers, e.g. "1/2,-3/2".
  static Weight parse(std::string_view text);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  HalfInt operator[](std::size_t i) const { return coords_[i]; }
  HalfInt& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<HalfInt>& coords() const { return coords_; }

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;

  /// Sub-vector [first, first + count).
  Weight slice(std::size_t first, std::size_t count) const;

  /// Lexicographic on doubled coordinates.
  auto operator<=>(const Weight&) const = default;

  std::string str() const;

 private:
  std::vector<HalfInt> coords_;
};

/// Bijection of {0, ..., n-1}; the public one-line notation is 1-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// Throws std::invalid_argument unless images is a bijection of {1..n}.
  static Permutation from_one_line(std::span<const int> images);
  static Permutation from_one_line(std::initializer_list<int> images);
  /// Zero-based images; throws unless a bijection.
  static Permutation from_zero_based(std::vector<int> images);
  /// The transposition of zero-based positions i and j in S_n.
  static Permutation transposition(std::size_t n, int i, int j);

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> zero_based() const { return images_; }
  std::vector<int> one_line() const;

  /// (*this * other)(i) = (*this)(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

  std::string str() const;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// A permutation together with its sign, as produced by the enumerators.
struct SignedPermutation {
  Permutation perm;
  int sign = 1;
};

/// All of S_n in lexicographic order of one-line notation.
std::vector<SignedPermutation> symmetric_group(std::size_t n);

/// S_p x S_q acting on {0..p-1} and {p..p+q-1} separately.
std::vector<SignedPermutation> block_group(std::size_t p, std::size_t q);

int perm_sign(const Permutation& p);

/// result[p(i)] = w[i], so that (p.w)(theta) = w(p^{-1} theta).
Weight weight_permute(const Permutation& p, const Weight& w);

/// An angle vector on the double cover of the compact torus.
struct TorusPoint {
  std::vector<double> theta;

  std::size_t size() const { return theta.size(); }
};

/// Same convention as weight_permute: result[p(i)] = theta[i].
TorusPoint torus_permute(const Permutation& p, const TorusPoint& point);

/// exp(i sum_j w_j theta_j); throws std::invalid_argument on length mismatch.
Complex torus_char(const TorusPoint& point, const Weight& w);

/// Radii r_j = exp(-X_j) of a point off the unit torus; every |X_j| > 0.
class Deformation {
 public:
  /// Throws std::invalid_argument if some X_j is zero.
  explicit Deformation(std::vector<double> log_radii);

  std::size_t size() const { return log_radii_.size(); }
  double operator[](std::size_t j) const { return log_radii_[j]; }
  std::span<const double> log_radii() const { return log_radii_; }
  Deformation scaled(double factor) const;

 private:
  std::vector<double> log_radii_;
};

/// Finite sum sum_w c_w e^{i w.theta} with nonzero integer coefficients.
class SignedExpSum {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  SignedExpSum() = default;

  void add(const Weight& w, std::int64_t coeff);
  SignedExpSum& operator+=(const SignedExpSum& other);
  SignedExpSum operator+(const SignedExpSum& other) const;
  SignedExpSum operator-() const;
  SignedExpSum scaled(std::int64_t factor) const;
  /// Applies weight_permute to every weight.
  SignedExpSum permuted(const Permutation& p) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(const Weight& w) const;
  /// Sum of |c_w|; bounds |evaluate(theta)| for every real theta.
  std::int64_t coefficient_bound() const;

  Complex evaluate(const TorusPoint& point) const;

  bool operator==(const SignedExpSum&) const = default;

 private:
  Terms terms_;
};

/// A SignedExpSum divided by the coefficient of its greatest weight.
class NormalizedExpSum {
 public:
  using Terms = std::map<Weight, Rational>;

  NormalizedExpSum() = default;
  explicit NormalizedExpSum(Terms terms) : terms_(std::move(terms)) {}

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const NormalizedExpSum&) const = default;

 private:
  Terms terms_;
};

/// Throws std::invalid_argument on the empty sum.
NormalizedExpSum expsum_normalize(const SignedExpSum& s);

bool expsum_equal_up_to_constant(const SignedExpSum& s1, const SignedExpSum& s2);

std::string rational_str(const Rational& r);

}  // namespace chc
