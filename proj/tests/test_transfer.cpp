#include "chc/transfer.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numbers>

using namespace chc;

namespace {

HCParameter param(const char* text, int p, int q) { return validate_hc_parameter(Weight::parse(text), p, q); }

// Pole (r h')_j = e^{-X_j + i theta'_j} with X_{sigma(i)} = eps * pattern[i].
std::vector<Complex> poles(const Permutation& sigma, const std::vector<int>& pattern, const TorusPoint& theta,
                           double eps) {
  std::vector<Complex> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto j = static_cast<std::size_t>(sigma(static_cast<int>(i)));
    out[j] = std::exp(Complex(-eps * pattern[i], theta.theta[j]));
  }
  return out;
}

std::int64_t exponent(HalfInt x) { return (x.twice() - 1) / 2; }

}  // namespace

TEST_CASE("Cauchy integral on the unit circle") {
  CHECK(residue_coefficient(0, true) == 1);
  CHECK(residue_coefficient(-1, false) == -1);
  CHECK(residue_coefficient(3, false) == 0);
  CHECK(residue_coefficient(-2, true) == 0);
  CHECK(std::abs(cauchy_circle_integral(0, 0.5) - 1.0) < 1e-15);
  CHECK(std::abs(cauchy_circle_integral(-1, 2.0) + 0.5) < 1e-15);
  CHECK(std::abs(cauchy_circle_integral(3, 2.0)) == 0.0);
  CHECK_THROWS_AS(cauchy_circle_integral(1, std::polar(1.0, 0.3)), std::domain_error);
  CHECK_THROWS_AS(cauchy_circle_integral(-1, 0.0), std::domain_error);
}

TEST_CASE("deformation region patterns") {
  const auto id1 = Permutation::identity(1);
  CHECK(e_sigma_pattern(id1, 0, 1, 0, 1) == std::vector<int>{1});
  CHECK(e_sigma_pattern(id1, 0, 1, 1, 0) == std::vector<int>{-1});
  CHECK(e_sigma_pattern(Permutation::identity(2), 1, 1, 1, 1) == std::vector<int>{1, 1});
  CHECK(e_sigma_pattern(Permutation::from_one_line({2, 1}), 1, 1, 1, 1) == std::vector<int>{-1, -1});
  CHECK_THROWS_AS(e_sigma_pattern(id1, 1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("support predicate examples") {
  const auto l = param("1/2", 0, 1);
  CHECK(residue_support_predicate(Permutation::identity(1), l, {0, 1}));
  CHECK_FALSE(residue_support_predicate(Permutation::identity(1), l, {1, 0}));
}

TEST_CASE("support predicate agrees with the product of Cauchy integrals") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const auto& lambda : enumerate_parameters(p, n - p, HalfInt::from_twice(5))) {
        const auto theta = chc::testing::random_point(static_cast<std::size_t>(n), rng);
        for (int r = 0; r <= n; ++r) {
          const SignaturePair target{r, n - r};
          for (const auto& [sigma, s_sign] : symmetric_group(static_cast<std::size_t>(n))) {
            const auto pattern = e_sigma_pattern(sigma, p, n - p, r, n - r);
            const auto a = poles(sigma, pattern, theta, 0.5);
            for (const auto& [beta, b_sign] : block_group(static_cast<std::size_t>(p),
                                                          static_cast<std::size_t>(n - p))) {
              const auto g = sigma * beta.inverse();
              double coeff = 1.0;
              for (int i = 0; i < n; ++i) {
                const auto k = exponent(lambda[static_cast<std::size_t>(i)]);
                const Complex c = cauchy_circle_integral(k, a[static_cast<std::size_t>(g(i))]);
                coeff *= c == 0.0 ? 0.0 : (std::real(c / std::pow(a[static_cast<std::size_t>(g(i))],
                                                                   static_cast<int>(k))) > 0 ? 1.0 : -1.0);
              }
              const bool predicate = residue_support_predicate(g, lambda, target);
              REQUIRE(predicate == (coeff != 0.0));
              const auto term = residue_term(sigma, beta, lambda, target);
              REQUIRE(term.has_value() == predicate);
              if (term) {
                REQUIRE(term->sign == static_cast<int>(coeff) * s_sign * b_sign);
                REQUIRE(term->weight == weight_permute(g, lambda.entries()));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("brute force equals the numerically assembled residue sum") {
  // Poles a hair off the circle: prod a^k ~ e^{i (lambda - xi) . theta'}.
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto params = enumerate_parameters(p, n - p, HalfInt::from_twice(5));
      for (std::size_t idx = 0; idx < params.size(); idx += 7) {
        const auto& lambda = params[idx];
        const auto theta = chc::testing::random_point(static_cast<std::size_t>(n), rng);
        for (int r = 0; r <= n; ++r) {
          const SignaturePair target{r, n - r};
          Complex numeric{0.0, 0.0};
          for (const auto& [sigma, s_sign] : symmetric_group(static_cast<std::size_t>(n))) {
            const auto a = poles(sigma, e_sigma_pattern(sigma, p, n - p, r, n - r), theta, 1e-7);
            for (const auto& [beta, b_sign] : block_group(static_cast<std::size_t>(p),
                                                          static_cast<std::size_t>(n - p))) {
              const auto g = sigma * beta.inverse();
              Complex term = static_cast<double>(s_sign * b_sign);
              for (int i = 0; i < n; ++i) {
                term *= cauchy_circle_integral(exponent(lambda[static_cast<std::size_t>(i)]),
                                               a[static_cast<std::size_t>(g(i))]);
              }
              numeric += term;
            }
          }
          const auto brute = transfer_bruteforce(lambda, target);
          const Complex exact =
              torus_char(theta, -Weight::half_ones(static_cast<std::size_t>(n))) * brute.evaluate(theta);
          REQUIRE(std::abs(numeric - exact) < 1e-4 * std::max(1.0, static_cast<double>(brute.coefficient_bound())));
        }
      }
    }
  }
}

TEST_CASE("transfer examples") {
  const auto u01 = param("1/2", 0, 1);
  const auto one = transfer_bruteforce(u01, {0, 1});
  REQUIRE(one.size() == 1);
  CHECK(std::abs(one.coefficient(Weight::parse("1/2"))) == 1);
  CHECK(transfer_bruteforce(u01, {1, 0}).empty());
  CHECK(transfer_closed_form(u01, {0, 1}).coefficient(Weight::parse("1/2")) == 1);
  CHECK(transfer_closed_form(u01, {1, 0}).empty());

  const auto u11 = param("1/2,-1/2", 1, 1);
  const auto closed = transfer_closed_form(u11, {2, 0});
  CHECK(closed.size() == 2);
  CHECK(closed.coefficient(Weight::parse("1/2,-1/2")) == 1);
  CHECK(closed.coefficient(Weight::parse("-1/2,1/2")) == -1);
  CHECK(expsum_equal_up_to_constant(transfer_bruteforce(u11, {2, 0}), closed));
  CHECK(transfer_bruteforce(u11, {1, 1}).empty());
  CHECK(transfer_bruteforce(u11, {0, 2}).empty());
  CHECK(transfer_matches_theta_lift(u01));
  CHECK(transfer_matches_theta_lift(u11));
  CHECK_THROWS_AS(transfer_bruteforce(u11, {1, 2}), std::invalid_argument);
}

TEST_CASE("slices add up to the brute force") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const auto& lambda : enumerate_parameters(p, n - p, HalfInt::from_twice(3))) {
        for (int r = 0; r <= n; ++r) {
          SignedExpSum total;
          for (const auto& [sigma, sign] : symmetric_group(static_cast<std::size_t>(n))) {
            total += transfer_slice(lambda, {r, n - r}, sigma).scaled(sign);
          }
          REQUIRE(total == transfer_bruteforce(lambda, {r, n - r}));
        }
      }
    }
  }
}

TEST_CASE("Weil kernel determinant") {
  const auto id = Permutation::identity(1);
  const auto v = weil_kernel_det(TorusPoint{{0.0}}, TorusPoint{{0.0}}, id, Deformation({std::log(2.0)}));
  CHECK(std::abs(v + 1.0) < 1e-15);
  const auto far = weil_kernel_det(TorusPoint{{0.4, 1.0}}, TorusPoint{{2.0, 3.0}}, Permutation::from_one_line({2, 1}),
                                   Deformation({-40.0, -40.0}));
  CHECK(std::abs(far - 1.0) < 1e-15);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sigma = chc::testing::random_permutation(3, rng);
    const auto x = chc::testing::random_point(3, rng, 0.01, 1.0);
    const Deformation d({x.theta[0], -x.theta[1], x.theta[2]});
    REQUIRE(std::abs(weil_kernel_det(chc::testing::random_point(3, rng), chc::testing::random_point(3, rng),
                                     sigma, d)) > 0.0);
  }
  CHECK_THROWS_AS(weil_kernel_det(TorusPoint{{0.0}}, TorusPoint{{0.0, 1.0}}, id, Deformation({1.0})),
                  std::invalid_argument);
}
