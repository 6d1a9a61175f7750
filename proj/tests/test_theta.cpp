#include "chc/theta.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace chc;

namespace {

HCParameter param(const char* text, int p, int q) { return validate_hc_parameter(Weight::parse(text), p, q); }

ParameterError error_of(const char* text, int p, int q) {
  try {
    validate_hc_parameter(Weight::parse(text), p, q);
  } catch (const InvalidParameter& e) {
    return e.kind();
  }
  FAIL("expected InvalidParameter for " << text);
  return ParameterError::LengthMismatch;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  const auto l = param("1/2,-1/2", 1, 1);
  CHECK(l.a() == 1);
  CHECK(l.b() == 0);
  const auto m = param("-3/2,5/2", 1, 1);
  CHECK(m.a() == 0);
  CHECK(m.b() == 1);

  CHECK(error_of("1,-1", 1, 1) == ParameterError::NonHalfInteger);
  CHECK(error_of("1/2", 1, 1) == ParameterError::LengthMismatch);
  CHECK(error_of("0,1/2", 1, 1) == ParameterError::ZeroEntry);
  CHECK(error_of("1/2,3/2,-1/2", 2, 1) == ParameterError::NotDecreasing);
  CHECK(error_of("1/2,1/2", 1, 1) == ParameterError::Duplicate);
  CHECK(error_of("3/2,1/2,1/2", 2, 1) == ParameterError::Duplicate);
  CHECK(to_string(ParameterError::NonHalfInteger) == "NonHalfInteger");
}

TEST_CASE("theta signature and parameter") {
  CHECK(theta_signature(param("1/2,-1/2", 1, 1)) == SignaturePair{2, 0});
  CHECK(theta_signature(param("-1/2,1/2", 1, 1)) == SignaturePair{0, 2});
  CHECK(theta_signature(param("3/2,-1/2,5/2,-5/2", 2, 2)) == SignaturePair{2, 2});

  CHECK(theta_parameter(param("1/2,-1/2", 1, 1)) == Weight::parse("1/2,-1/2"));
  CHECK(theta_parameter(param("-3/2,5/2", 1, 1)) == Weight::parse("5/2,-3/2"));
  CHECK(theta_parameter(param("3/2,-1/2,5/2,-5/2", 2, 2)) == Weight::parse("3/2,-5/2,5/2,-1/2"));
}

TEST_CASE("tau permutations") {
  const auto l = param("1/2,-1/2", 1, 1);
  CHECK(tau_permutation(l, {2, 0}).is_identity());
  CHECK_THROWS_AS(tau_permutation(l, {1, 1}), std::invalid_argument);

  const auto m = param("-1/2,-3/2,-5/2,-7/2", 2, 2);
  CHECK(tau_permutation(m, {2, 2}).one_line() == std::vector<int>{3, 4, 1, 2});
}

TEST_CASE("theta lift is an involution on parameters") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const auto& lambda : enumerate_parameters(p, n - p, HalfInt::from_twice(7))) {
        const auto lifted = theta_lift(lambda);
        const auto target = theta_signature(lambda);
        REQUIRE(lifted.p() == target.r);
        REQUIRE(lifted.q() == target.s);
        REQUIRE(weyl_orbit_equal(lifted.entries(), lambda.entries(), OrbitMode::Full));
        REQUIRE(theta_signature(lifted) == SignaturePair{p, n - p});
        REQUIRE(theta_lift(lifted) == lambda);
      }
    }
  }
}

TEST_CASE("tau lambda lies in the block orbit of lambda'") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const auto& lambda : enumerate_parameters(p, n - p, HalfInt::from_twice(7))) {
        const auto target = theta_signature(lambda);
        const auto moved = weight_permute(tau_permutation(lambda, target), lambda.entries());
        REQUIRE(weyl_orbit_equal(moved, theta_parameter(lambda), OrbitMode::Block,
                                 static_cast<std::size_t>(target.r)));
      }
    }
  }
}

TEST_CASE("orbit comparison") {
  const auto x = Weight::parse("1/2,-1/2");
  const auto y = Weight::parse("-1/2,1/2");
  CHECK(weyl_orbit_equal(x, y, OrbitMode::Full));
  CHECK_FALSE(weyl_orbit_equal(x, y, OrbitMode::Block, 1));
  CHECK(weyl_orbit_equal(x, x, OrbitMode::Block, 1));
  CHECK_THROWS_AS(weyl_orbit_equal(x, Weight::parse("1/2"), OrbitMode::Full), std::invalid_argument);
}

TEST_CASE("lowest K-type") {
  // U(1,1): rho = (1/2, -1/2), rho_c = 0.
  CHECK(lowest_k_type(param("1/2,-1/2", 1, 1)) == Weight::parse("1,-1"));
  // U(2,0) is compact: lambda + rho - 2 rho_c = lambda - rho.
  CHECK(lowest_k_type(param("3/2,1/2", 2, 0)) == Weight::parse("1,1"));
}

TEST_CASE("parameter enumeration counts") {
  for (std::int64_t twice = 1; twice <= 7; twice += 2) {
    const auto values = static_cast<std::uint64_t>(twice + 1);  // odd t with |t| <= twice
    for (int n = 1; n <= 4; ++n) {
      for (int p = 0; p <= n; ++p) {
        const auto params = enumerate_parameters(p, n - p, HalfInt::from_twice(twice));
        REQUIRE(params.size() == binomial(values, static_cast<std::uint64_t>(p)) *
                                     binomial(values - static_cast<std::uint64_t>(p),
                                              static_cast<std::uint64_t>(n - p)));
        for (std::size_t i = 1; i < params.size(); ++i) REQUIRE(params[i - 1].entries() < params[i].entries());
      }
    }
  }
}
