#include "chc/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace chc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------- HalfInt

HalfInt HalfInt::parse(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_int(parse_int(s, text));
  const auto num = parse_int(trim(s.substr(0, slash)), text);
  const auto den = parse_int(trim(s.substr(slash + 1)), text);
  if (den == 1) return from_int(num);
  if (den == 2) return from_twice(num);
  if (den == -2) return from_twice(-num);
  throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
}

std::string HalfInt::str() const {
  if (is_strict_half()) return std::to_string(twice_) + "/2";
  return std::to_string(twice_ / 2);
}

// ---------------------------------------------------------------- Weight

Weight Weight::half_ones(std::size_t n) {
  return Weight(std::vector<HalfInt>(n, HalfInt::from_twice(1)));
}

Weight Weight::from_twice(std::span<const std::int64_t> twice) {
  std::vector<HalfInt> coords;
  coords.reserve(twice.size());
  for (auto t : twice) coords.push_back(HalfInt::from_twice(t));
  return Weight(std::move(coords));
}

Weight Weight::parse(std::string_view text) {
  std::vector<HalfInt> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
    coords.push_back(HalfInt::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

Weight Weight::operator+(const Weight& other) const {
  if (size() != other.size()) throw std::invalid_argument("weight length mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.coords_[i] = coords_[i] + other.coords_[i];
  return out;
}

Weight Weight::operator-(const Weight& other) const { return *this + (-other); }

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Weight Weight::slice(std::size_t first, std::size_t count) const {
  return Weight(std::vector<HalfInt>(coords_.begin() + static_cast<std::ptrdiff_t>(first),
                                     coords_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::string Weight::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + ")";
}

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_zero_based(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  std::vector<int> zero;
  zero.reserve(images.size());
  for (int v : images) zero.push_back(v - 1);
  return from_zero_based(std::move(zero));
}

Permutation Permutation::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::transposition(std::size_t n, int i, int j) {
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_);
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = images_[static_cast<std::size_t>(other.images_[i])];
  }
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(out));
}

// Parity from the cycle decomposition: each cycle of length L contributes L-1
// transpositions.
int Permutation::sign() const {
  std::vector<bool> visited(size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (auto i = start; !visited[i]; i = static_cast<std::size_t>(images_[i])) {
      visited[i] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i] + 1);
  }
  return out + "]";
}

std::vector<SignedPermutation> symmetric_group(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    auto p = Permutation::from_zero_based(images);
    const int sign = p.sign();
    out.push_back({std::move(p), sign});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<SignedPermutation> block_group(std::size_t p, std::size_t q) {
  const auto first = symmetric_group(p);
  const auto second = symmetric_group(q);
  std::vector<SignedPermutation> out;
  out.reserve(first.size() * second.size());
  for (const auto& a : first) {
    for (const auto& b : second) {
      std::vector<int> images(p + q);
      for (std::size_t i = 0; i < p; ++i) images[i] = a.perm(static_cast<int>(i));
      for (std::size_t i = 0; i < q; ++i) {
        images[p + i] = static_cast<int>(p) + b.perm(static_cast<int>(i));
      }
      out.push_back({Permutation::from_zero_based(std::move(images)), a.sign * b.sign});
    }
  }
  return out;
}

int perm_sign(const Permutation& p) { return p.sign(); }

Weight weight_permute(const Permutation& p, const Weight& w) {
  if (p.size() != w.size()) throw std::invalid_argument("weight_permute: length mismatch");
  Weight out = Weight::zero(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(p(static_cast<int>(i)))] = w[i];
  return out;
}

// ---------------------------------------------------------------- torus

TorusPoint torus_permute(const Permutation& p, const TorusPoint& point) {
  if (p.size() != point.size()) throw std::invalid_argument("torus_permute: length mismatch");
  TorusPoint out{std::vector<double>(point.size())};
  for (std::size_t i = 0; i < point.size(); ++i) {
    out.theta[static_cast<std::size_t>(p(static_cast<int>(i)))] = point.theta[i];
  }
  return out;
}

Complex torus_char(const TorusPoint& point, const Weight& w) {
  if (point.size() != w.size()) throw std::invalid_argument("torus_char: length mismatch");
  double phase = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) phase += w[j].value() * point.theta[j];
  return std::polar(1.0, phase);
}

Deformation::Deformation(std::vector<double> log_radii) : log_radii_(std::move(log_radii)) {
  for (double x : log_radii_) {
    if (!(std::abs(x) > 0.0)) throw std::invalid_argument("deformation touches the unit torus");
  }
}

Deformation Deformation::scaled(double factor) const {
  std::vector<double> out(log_radii_);
  for (auto& x : out) x *= factor;
  return Deformation(std::move(out));
}

// ---------------------------------------------------------------- SignedExpSum

void SignedExpSum::add(const Weight& w, std::int64_t coeff) {
  if (coeff == 0) return;
  if (!terms_.empty() && terms_.begin()->first.size() != w.size()) {
    throw std::invalid_argument("SignedExpSum: weight length mismatch");
  }
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SignedExpSum& SignedExpSum::operator+=(const SignedExpSum& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

SignedExpSum SignedExpSum::operator+(const SignedExpSum& other) const {
  SignedExpSum out = *this;
  out += other;
  return out;
}

SignedExpSum SignedExpSum::operator-() const { return scaled(-1); }

SignedExpSum SignedExpSum::scaled(std::int64_t factor) const {
  SignedExpSum out;
  if (factor == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * factor);
  return out;
}

SignedExpSum SignedExpSum::permuted(const Permutation& p) const {
  SignedExpSum out;
  for (const auto& [w, c] : terms_) out.add(weight_permute(p, w), c);
  return out;
}

std::int64_t SignedExpSum::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t SignedExpSum::coefficient_bound() const {
  std::int64_t total = 0;
  for (const auto& [w, c] : terms_) total += c < 0 ? -c : c;
  return total;
}

Complex SignedExpSum::evaluate(const TorusPoint& point) const {
  Complex total{0.0, 0.0};
  for (const auto& [w, c] : terms_) total += static_cast<double>(c) * torus_char(point, w);
  return total;
}

NormalizedExpSum expsum_normalize(const SignedExpSum& s) {
  if (s.empty()) throw std::invalid_argument("cannot normalize the empty sum");
  const auto pivot = s.terms().rbegin()->second;
  NormalizedExpSum::Terms out;
  for (const auto& [w, c] : s.terms()) out.emplace(w, Rational(c, pivot));
  return NormalizedExpSum(std::move(out));
}

bool expsum_equal_up_to_constant(const SignedExpSum& s1, const SignedExpSum& s2) {
  if (s1.empty() || s2.empty()) return s1.empty() && s2.empty();
  return expsum_normalize(s1) == expsum_normalize(s2);
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace chc
