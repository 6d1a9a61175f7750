#include "chc/serialization.hpp"

#include <charconv>

namespace chc {

nlohmann::json weight_to_json(const Weight& w) {
  auto out = nlohmann::json::array();
  for (auto c : w) out.push_back(c.str());
  return out;
}

Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array");
  std::vector<HalfInt> coords;
  for (const auto& c : j) coords.push_back(HalfInt::parse(c.get<std::string>()));
  return Weight(std::move(coords));
}

nlohmann::json expsum_to_json(const SignedExpSum& s) {
  auto out = nlohmann::json::array();
  for (const auto& [w, c] : s.terms()) {
    out.push_back({{"weight", weight_to_json(w)}, {"coeff", std::to_string(c)}});
  }
  return out;
}

nlohmann::json expsum_to_json(const NormalizedExpSum& s) {
  auto out = nlohmann::json::array();
  for (const auto& [w, c] : s.terms()) {
    out.push_back({{"weight", weight_to_json(w)}, {"coeff", rational_str(c)}});
  }
  return out;
}

SignedExpSum expsum_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expsum must be a JSON array");
  SignedExpSum out;
  for (const auto& term : j) {
    const auto text = term.at("coeff").get<std::string>();
    std::int64_t coeff = 0;
    const char* first = text.data();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), coeff);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw std::invalid_argument("coefficient is not an integer: " + text);
    }
    out.add(weight_from_json(term.at("weight")), coeff);
  }
  return out;
}

}  // namespace chc
