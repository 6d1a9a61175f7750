#include "chc/theta.hpp"

#include "chc/roots.hpp"

#include <algorithm>
#include <functional>

namespace chc {

std::string_view to_string(ParameterError e) {
  switch (e) {
    case ParameterError::LengthMismatch: return "LengthMismatch";
    case ParameterError::NonHalfInteger: return "NonHalfInteger";
    case ParameterError::NotDecreasing: return "NotDecreasing";
    case ParameterError::ZeroEntry: return "ZeroEntry";
    case ParameterError::Duplicate: return "Duplicate";
  }
  return "Unknown";
}

InvalidParameter::InvalidParameter(ParameterError kind, const std::string& detail)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

HCParameter validate_hc_parameter(const Weight& raw, int p, int q) {
  if (p < 0 || q < 0 || p + q == 0 || raw.size() != static_cast<std::size_t>(p + q)) {
    throw InvalidParameter(ParameterError::LengthMismatch,
                           "expected " + std::to_string(p + q) + " entries, got " + std::to_string(raw.size()));
  }
  for (auto x : raw) {
    if (x.is_zero()) throw InvalidParameter(ParameterError::ZeroEntry, raw.str());
  }
  for (auto x : raw) {
    if (!x.is_strict_half()) throw InvalidParameter(ParameterError::NonHalfInteger, x.str());
  }
  const auto up = static_cast<std::size_t>(p);
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    if (i + 1 == up) continue;
    if (!(raw[i] > raw[i + 1])) throw InvalidParameter(ParameterError::NotDecreasing, raw.str());
  }
  auto sorted = raw.coords();
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidParameter(ParameterError::Duplicate, raw.str());
  }
  HCParameter out;
  out.p_ = p;
  out.q_ = q;
  out.entries_ = raw;
  for (std::size_t i = 0; i < up; ++i) out.a_ += raw[i] > HalfInt() ? 1 : 0;
  for (std::size_t i = up; i < raw.size(); ++i) out.b_ += raw[i] > HalfInt() ? 1 : 0;
  return out;
}

SignaturePair theta_signature(const HCParameter& lambda) {
  return {lambda.a() + lambda.q() - lambda.b(), lambda.b() + lambda.p() - lambda.a()};
}

Weight theta_parameter(const HCParameter& lambda) {
  const auto& e = lambda.entries();
  const auto p = static_cast<std::size_t>(lambda.p());
  const auto q = static_cast<std::size_t>(lambda.q());
  const auto a = static_cast<std::size_t>(lambda.a());
  const auto b = static_cast<std::size_t>(lambda.b());
  std::vector<HalfInt> out;
  out.reserve(p + q);
  auto append = [&](std::size_t first, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(e[first + i]);
  };
  append(0, a);          // alpha
  append(p + b, q - b);  // delta
  append(p, b);          // gamma
  append(a, p - a);      // beta
  return Weight(std::move(out));
}

HCParameter theta_lift(const HCParameter& lambda) {
  const auto target = theta_signature(lambda);
  return validate_hc_parameter(theta_parameter(lambda), target.r, target.s);
}

Permutation tau_permutation(const HCParameter& lambda, SignaturePair target) {
  if (target != theta_signature(lambda)) {
    throw std::invalid_argument("tau_permutation: target is not the theta signature");
  }
  const int p = lambda.p(), q = lambda.q(), a = lambda.a(), b = lambda.b();
  const int n = p + q, r = target.r, s = target.s;
  // One-line images, 1-based while filling.
  std::vector<int> tau(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) tau[static_cast<std::size_t>(i)] = i;
  auto set = [&](int from, int to) { tau[static_cast<std::size_t>(from)] = to; };

  if (r <= p) {
    // Product of the transpositions (a+t, p+b+t), t = 1..r-a.
    for (int t = 1; t <= r - a; ++t) {
      set(a + t, p + b + t);
      set(p + b + t, a + t);
    }
  } else if (r <= p + b) {
    for (int t = 0; a + 1 + t <= r; ++t) set(a + 1 + t, p + b + 1 + t);
    for (int t = 0; p + b + 1 + t <= n; ++t) set(p + b + 1 + t, a + 1 + t);
  } else {
    for (int t = 0; a + 1 + t <= p + b; ++t) set(a + 1 + t, r + 1 + t);
    for (int t = 0; t < s; ++t) set(r + 1 + t, a + 1 + t);
  }
  std::vector<int> images(tau.begin() + 1, tau.end());
  return Permutation::from_one_line(std::span<const int>(images));
}

bool weyl_orbit_equal(const Weight& mu, const Weight& nu, OrbitMode mode, std::size_t split) {
  if (mu.size() != nu.size()) throw std::invalid_argument("weyl_orbit_equal: length mismatch");
  auto same_multiset = [](std::vector<HalfInt> x, std::vector<HalfInt> y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  };
  if (mode == OrbitMode::Full) return same_multiset(mu.coords(), nu.coords());
  if (split > mu.size()) throw std::invalid_argument("weyl_orbit_equal: split out of range");
  const auto rest = mu.size() - split;
  return same_multiset(mu.slice(0, split).coords(), nu.slice(0, split).coords()) &&
         same_multiset(mu.slice(split, rest).coords(), nu.slice(split, rest).coords());
}

Weight lowest_k_type(const HCParameter& lambda) {
  const auto rs = build_root_system(lambda.p(), lambda.q());
  return lambda.entries() + rs.rho() - rs.rho_compact() - rs.rho_compact();
}

std::vector<HCParameter> enumerate_parameters(int p, int q, HalfInt max_abs) {
  std::vector<HalfInt> values;
  for (std::int64_t t = -max_abs.twice(); t <= max_abs.twice(); ++t) {
    if (t % 2 != 0) values.push_back(HalfInt::from_twice(t));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  const auto m = values.size();
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);

  std::vector<HCParameter> out;
  std::vector<HalfInt> entries(up + uq);
  std::vector<bool> used(m, false);
  // Each block is a decreasing choice of distinct values, i.e. an increasing
  // index sequence into `values`.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t start) {
    if (pos == up + uq) {
      out.push_back(validate_hc_parameter(Weight(entries), p, q));
      return;
    }
    if (pos == up) start = 0;
    for (std::size_t v = start; v < m; ++v) {
      if (used[v]) continue;
      used[v] = true;
      entries[pos] = values[v];
      fill(pos + 1, v + 1);
      used[v] = false;
    }
  };
  if (up + uq > 0) fill(0, 0);
  std::sort(out.begin(), out.end(), [](const HCParameter& x, const HCParameter& y) {
    return x.entries() < y.entries();
  });
  return out;
}

}  // namespace chc
