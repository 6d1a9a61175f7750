#include "chc/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>

namespace chc {

DSCharacter ds_numerator(const HCParameter& lambda) {
  DSCharacter out{SignedExpSum{}, (lambda.p() * lambda.q()) % 2 == 0 ? 1 : -1,
                  build_root_system(lambda.p(), lambda.q())};
  for (const auto& [w, sign] : block_group(static_cast<std::size_t>(lambda.p()),
                                           static_cast<std::size_t>(lambda.q()))) {
    out.numerator.add(weight_permute(w, lambda.entries()), sign);
  }
  return out;
}

Complex ds_evaluate(const DSCharacter& c, const TorusPoint& theta) {
  if (!is_regular(c.roots, theta)) throw SingularPoint("character evaluated at a singular point");
  return static_cast<double>(c.global_sign) * c.numerator.evaluate(theta) / delta_psi(c.roots, theta);
}

std::vector<TorusPoint> sample_regular_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  const auto rs = build_root_system(0, static_cast<int>(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<TorusPoint> out;
  out.reserve(count);
  while (out.size() < count) {
    TorusPoint point{std::vector<double>(n)};
    for (auto& t : point.theta) t = angle(rng);
    if (weyl_D_sqrt(rs, point) > kSamplingRejection) out.push_back(std::move(point));
  }
  return out;
}

double boundedness_scan(const SignedExpSum& num, std::size_t samples, std::uint64_t seed) {
  if (num.empty()) throw std::invalid_argument("boundedness_scan needs a nonempty numerator");
  const auto n = num.terms().begin()->first.size();
  const auto rs = build_root_system(0, static_cast<int>(n));
  double best = 0.0;
  for (const auto& point : sample_regular_points(n, samples, seed)) {
    const double value = weyl_D_sqrt(rs, point) * std::abs(num.evaluate(point) / delta_psi(rs, point));
    best = std::max(best, value);
  }
  return best;
}

std::uint64_t seed_from_environment(std::uint64_t fallback) {
  if (const char* env = std::getenv("CHC_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CHC_SEED is not an unsigned integer: ") + env);
    }
  }
  return fallback;
}

}  // namespace chc
