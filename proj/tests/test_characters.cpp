#include "chc/characters.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numbers>

using namespace chc;
using chc::testing::inversion_sign;
using chc::testing::relative_gap;

namespace {

const double pi = std::numbers::pi;

HCParameter param(const char* text, int p, int q) { return validate_hc_parameter(Weight::parse(text), p, q); }

// sum over S_p x S_q of eps(w) e^{i (w lambda) . theta}, enumerating each block
// with next_permutation and the inversion-count sign.
Complex direct_numerator(const HCParameter& lambda, const TorusPoint& theta) {
  const auto p = static_cast<std::size_t>(lambda.p());
  const auto n = static_cast<std::size_t>(lambda.n());
  std::vector<int> first(p), second(n - p);
  for (std::size_t i = 0; i < p; ++i) first[i] = static_cast<int>(i);
  for (std::size_t i = p; i < n; ++i) second[i - p] = static_cast<int>(i);
  Complex sum{0.0, 0.0};
  do {
    auto b = second;
    do {
      std::vector<int> w(first);
      w.insert(w.end(), b.begin(), b.end());
      // (w lambda)_{w(i)} = lambda_i.
      double phase = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        phase += lambda[i].value() * theta.theta[static_cast<std::size_t>(w[i])];
      }
      sum += static_cast<double>(inversion_sign(w)) * std::polar(1.0, phase);
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(first.begin(), first.end()));
  return sum;
}

}  // namespace

TEST_CASE("discrete series numerators") {
  const auto u11 = ds_numerator(param("1/2,-1/2", 1, 1));
  CHECK(u11.numerator.size() == 1);
  CHECK(u11.numerator.coefficient(Weight::parse("1/2,-1/2")) == 1);
  CHECK(u11.global_sign == -1);
  CHECK(expsum_normalize(u11.numerator.scaled(-1)).terms().begin()->second == Rational(1));

  const auto u20 = ds_numerator(param("3/2,1/2", 2, 0));
  CHECK(u20.numerator.size() == 2);
  CHECK(u20.numerator.coefficient(Weight::parse("3/2,1/2")) == 1);
  CHECK(u20.numerator.coefficient(Weight::parse("1/2,3/2")) == -1);
  CHECK(u20.global_sign == 1);

  CHECK(ds_numerator(param("-1/2,1/2", 1, 1)).numerator.size() == 1);
}

TEST_CASE("numerator matches a term-by-term evaluation") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto params = enumerate_parameters(p, n - p, HalfInt::from_twice(7));
      for (std::size_t i = 0; i < params.size(); i += 97) {
        const auto c = ds_numerator(params[i]);
        const auto theta = chc::testing::random_point(static_cast<std::size_t>(n), rng);
        REQUIRE(relative_gap(c.numerator.evaluate(theta), direct_numerator(params[i], theta)) < 1e-10);
        // Antisymmetry under the compact Weyl group.
        for (const auto& [w, sign] : block_group(static_cast<std::size_t>(p), static_cast<std::size_t>(n - p))) {
          REQUIRE(c.numerator.permuted(w) == c.numerator.scaled(sign));
        }
      }
    }
  }
}

TEST_CASE("pointwise values") {
  const auto c = ds_numerator(param("1/2,-1/2", 1, 1));
  CHECK(std::abs(ds_evaluate(c, TorusPoint{{pi, 0.0}}) - Complex(-0.5, 0.0)) < 1e-15);
  CHECK_THROWS_AS(ds_evaluate(c, TorusPoint{{0.7, 0.7}}), SingularPoint);

  std::mt19937_64 rng(4);
  const auto lambda = param("5/2,-1/2,3/2,-3/2", 2, 2);
  const auto d = ds_numerator(lambda);
  for (const auto& theta : sample_regular_points(4, 50, rng())) {
    const auto value = ds_evaluate(d, theta);
    for (const auto& [w, sign] : block_group(2, 2)) {
      REQUIRE(relative_gap(ds_evaluate(d, torus_permute(w, theta)), value) < 1e-9);
    }
    TorusPoint minus = theta;
    for (auto& t : minus.theta) t = -t;
    REQUIRE(relative_gap(ds_evaluate(d, minus), std::conj(value)) < 1e-9);
  }
}

TEST_CASE("boundedness on the compact Cartan") {
  CHECK(boundedness_scan(ds_numerator(param("1/2,-1/2", 1, 1)).numerator, 200, 1) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const double u20 = boundedness_scan(ds_numerator(param("3/2,1/2", 2, 0)).numerator, 2000, 2);
  CHECK(u20 <= 2.0);
  CHECK(u20 > 1.99);
  // |D|^{1/2} |Theta| <= p! q! for every parameter tried.
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 4; ++q) {
      if (p + q == 0) continue;
      const auto params = enumerate_parameters(p, q, HalfInt::from_twice(5));
      const auto num = ds_numerator(params.front()).numerator;
      REQUIRE(boundedness_scan(num, 100, 3) <= static_cast<double>(num.coefficient_bound()) + 1e-9);
    }
  }
  CHECK_THROWS_AS(boundedness_scan(SignedExpSum{}, 10, 1), std::invalid_argument);
}

TEST_CASE("regular sampling") {
  const auto a = sample_regular_points(3, 20, 99);
  const auto b = sample_regular_points(3, 20, 99);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].theta == b[i].theta);
  const auto rs = build_root_system(0, 3);
  for (const auto& t : a) CHECK(weyl_D_sqrt(rs, t) > kSamplingRejection);
}

TEST_CASE("seed from the environment") {
  ::unsetenv("CHC_SEED");
  CHECK(seed_from_environment(5) == 5);
  ::setenv("CHC_SEED", "123", 1);
  CHECK(seed_from_environment(5) == 123);
  ::setenv("CHC_SEED", "abc", 1);
  CHECK_THROWS_AS(seed_from_environment(5), std::invalid_argument);
  ::unsetenv("CHC_SEED");
}
