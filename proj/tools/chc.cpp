// chc: command-line front end for the transfer engine.
//
//   chc transfer --p 1 --q 1 --lambda 1/2,-1/2
//   chc verify --max-n 5 --max-abs-lambda 13/2 --jobs 4
//   chc eval --p 1 --q 1 --lambda 1/2,-1/2 --theta pi,0
//   chc oracle --N 2048 --grid 512 --schedule 0.5,0.25,0.125
//
// Exit codes: 0 success, 1 verification or tolerance failure, 2 invalid input.

#include "chc/characters.hpp"
#include "chc/oracle.hpp"
#include "chc/serialization.hpp"
#include "chc/sweep.hpp"
#include "chc/theta.hpp"
#include "chc/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

struct InputError {
  std::string name;
  std::string detail;
};

[[noreturn]] void input_error(std::string name, std::string detail) {
  throw InputError{std::move(name), std::move(detail)};
}

chc::HCParameter read_parameter(int p, int q, const std::string& text) {
  chc::Weight raw;
  try {
    raw = chc::Weight::parse(text);
  } catch (const std::invalid_argument& e) {
    input_error("MalformedLambda", e.what());
  }
  try {
    return chc::validate_hc_parameter(raw, p, q);
  } catch (const chc::InvalidParameter& e) {
    // what() already reads "<Kind>: <detail>".
    const std::string name(chc::to_string(e.kind()));
    std::string detail = e.what();
    if (detail.starts_with(name + ": ")) detail.erase(0, name.size() + 2);
    input_error(name, detail);
  }
}

double parse_number(std::string_view s, std::string_view whole) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) input_error("MalformedAngle", std::string(whole));
  return v;
}

// Accepts plain decimals and multiples of pi: "pi", "-pi/2", "3pi/4", "0.5*pi", "1.25".
double parse_angle(std::string_view text) {
  std::string_view s = text;
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  double denom = 1.0;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    denom = parse_number(s.substr(slash + 1), text);
    s = s.substr(0, slash);
  }
  double value = 0.0;
  if (auto pi = s.find("pi"); pi != std::string_view::npos) {
    if (pi + 2 != s.size()) input_error("MalformedAngle", std::string(text));
    auto coeff = s.substr(0, pi);
    if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
    value = (coeff.empty() ? 1.0 : parse_number(coeff, text)) * std::numbers::pi;
  } else {
    value = parse_number(s, text);
  }
  if (denom == 0.0) input_error("MalformedAngle", std::string(text));
  return sign * value / denom;
}

chc::TorusPoint parse_point(const std::string& text) {
  chc::TorusPoint point;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    point.theta.push_back(parse_angle(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return point;
}

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = std::string_view(text).substr(start, comma - start);
    const double x = parse_number(piece, text);
    if (!(x > 0.0)) input_error("MalformedSchedule", text);
    out.push_back(x);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() < 2) input_error("MalformedSchedule", "need at least two levels");
  return out;
}

chc::HalfInt parse_bound(const std::string& text) {
  try {
    const auto h = chc::HalfInt::parse(text);
    if (h < chc::HalfInt()) input_error("MalformedBound", text);
    return h;
  } catch (const std::invalid_argument& e) {
    input_error("MalformedBound", e.what());
  }
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// ------------------------------------------------------------------ transfer

int cmd_transfer(int p, int q, const std::string& lambda_text) {
  const auto lambda = read_parameter(p, q, lambda_text);
  const auto target = chc::theta_signature(lambda);
  const auto brute = chc::transfer_bruteforce(lambda, target);
  const auto closed = chc::transfer_closed_form(lambda, target);
  const bool match = !brute.empty() && chc::expsum_equal_up_to_constant(brute, closed) &&
                     chc::expsum_equal_up_to_constant(brute, chc::ds_numerator(chc::theta_lift(lambda)).numerator);
  json out;
  out["p"] = p;
  out["q"] = q;
  out["a"] = lambda.a();
  out["b"] = lambda.b();
  out["r"] = target.r;
  out["s"] = target.s;
  out["lambda_prime"] = chc::weight_to_json(chc::theta_parameter(lambda));
  out["tau"] = chc::tau_permutation(lambda, target).one_line();
  out["bruteforce_numerator"] = chc::expsum_to_json(brute);
  out["closed_form_numerator"] = chc::expsum_to_json(closed);
  out["match"] = match;
  std::cout << out.dump(2) << '\n';
  return match ? 0 : kExitFailure;
}

// -------------------------------------------------------------------- verify

int cmd_verify(int max_n, const std::string& max_abs_text, int jobs) {
  if (max_n < 1 || max_n > 8) input_error("MaxNOutOfRange", "--max-n must lie in 1..8");
  if (jobs < 1) input_error("InvalidJobs", "--jobs must be positive");
  const auto report = chc::run_sweep(max_n, parse_bound(max_abs_text), jobs);
  chc::write_sweep_csv(std::cout, report);
  std::size_t failed = 0;
  for (const auto& row : report.rows) failed += row.passed() ? 0 : 1;
  std::cerr << report.rows.size() << " parameters, " << failed << " failed\n";
  return report.all_passed ? 0 : kExitFailure;
}

// ---------------------------------------------------------------------- eval

int cmd_eval(int p, int q, const std::string& lambda_text, const std::string& kind,
             const std::vector<std::string>& theta_texts, std::size_t scan) {
  const auto lambda = read_parameter(p, q, lambda_text);
  chc::DSCharacter character;
  if (kind == "ds") {
    character = chc::ds_numerator(lambda);
  } else {
    const auto target = chc::theta_signature(lambda);
    character = chc::DSCharacter{chc::transfer_bruteforce(lambda, target), (target.r * target.s) % 2 == 0 ? 1 : -1,
                                 chc::build_root_system(target.r, target.s)};
  }
  const auto n = static_cast<std::size_t>(lambda.n());

  std::vector<chc::TorusPoint> points;
  for (const auto& t : theta_texts) {
    auto point = parse_point(t);
    if (point.size() != n) input_error("LengthMismatch", "theta needs " + std::to_string(n) + " angles");
    points.push_back(std::move(point));
  }
  if (scan > 0) {
    auto sampled = chc::sample_regular_points(n, scan, chc::seed_from_environment());
    points.insert(points.end(), sampled.begin(), sampled.end());
  }
  if (points.empty()) input_error("NoPoints", "give --theta or --scan");

  // Evaluate everything before printing so a singular point leaves no partial table.
  std::vector<std::string> lines;
  double worst = 0.0;
  for (const auto& point : points) {
    chc::Complex value;
    try {
      value = chc::ds_evaluate(character, point);
    } catch (const chc::SingularPoint& e) {
      input_error("SingularPoint", e.what());
    }
    const double bound = chc::weyl_D_sqrt(character.roots, point) * std::abs(value);
    worst = std::max(worst, bound);
    std::string theta;
    for (std::size_t i = 0; i < point.size(); ++i) theta += (i ? " " : "") + format_double(point.theta[i]);
    lines.push_back(theta + ',' + format_double(value.real()) + ',' + format_double(value.imag()) + ',' +
                    format_double(bound));
  }
  std::cout << "theta,re,im,bound\n";
  for (const auto& line : lines) std::cout << line << '\n';
  std::cerr << "max |D|^{1/2}|Theta| = " << format_double(worst) << " (coefficient bound "
            << character.numerator.coefficient_bound() << ")\n";
  return 0;
}

// -------------------------------------------------------------------- oracle

struct OracleOptions {
  std::size_t N = 2048;
  std::size_t grid = 512;
  std::size_t seeds = 5;
  std::string schedule = "0.5,0.25,0.125";
  std::string max_abs = "3/2";
  std::size_t omega_samples = 1000;
};

int cmd_oracle(const OracleOptions& o) {
  constexpr double kCircleTolerance = 1e-8;
  constexpr double kTransferTolerance = 1e-6;
  if (o.N < 64) input_error("InvalidN", "--N must be at least 64");
  if (o.grid < 8) input_error("InvalidGrid", "--grid must be at least 8");
  if (o.seeds < 1) input_error("InvalidSeeds", "--seeds must be positive");
  const auto schedule = parse_schedule(o.schedule);
  const auto max_abs = parse_bound(o.max_abs);
  const auto seed = chc::seed_from_environment();

  const auto circle = chc::circle_oracle_sweep(o.N);
  const bool circle_ok = circle.max_error <= kCircleTolerance;

  const auto transfer = chc::transfer_oracle_sweep(2, max_abs, o.grid, schedule, o.seeds, seed);
  bool monotone = true;
  for (const auto& c : transfer.cases) monotone = monotone && c.residuals_monotone;
  const bool transfer_ok =
      transfer.max_relative_error <= kTransferTolerance && transfer.max_zero_slice_value <= kTransferTolerance;

  const auto omega = chc::omega_survey(o.omega_samples, seed);

  json report;
  report["seed"] = seed;
  report["circle"] = {{"N", o.N},
                      {"cases", circle.cases},
                      {"max_error", circle.max_error},
                      {"tolerance", kCircleTolerance},
                      {"ok", circle_ok}};
  report["transfer"] = {{"grid", o.grid},
                        {"schedule", schedule},
                        {"points_per_slice", o.seeds},
                        {"cases", transfer.cases.size()},
                        {"max_relative_error", transfer.max_relative_error},
                        {"max_zero_slice_value", transfer.max_zero_slice_value},
                        {"residuals_monotone", monotone},
                        {"tolerance", kTransferTolerance},
                        {"ok", transfer_ok}};
  json rows = json::array();
  for (const auto& row : omega.rows) {
    rows.push_back({{"p", row.p},
                    {"n", row.n},
                    {"samples", row.samples},
                    {"min_constant", row.min_constant},
                    {"allowed_constant", row.allowed_constant},
                    {"proof_chain_holds", row.proof_chain_holds},
                    {"ok", row.bound_ok}});
  }
  report["omega"] = {{"samples", o.omega_samples}, {"min_constant", omega.min_constant}, {"rows", rows},
                     {"ok", omega.all_ok}};
  const bool ok = circle_ok && transfer_ok && omega.all_ok;
  report["ok"] = ok;
  std::cout << report.dump(2) << '\n';
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy-Harish-Chandra transfer of discrete series characters"};
  app.require_subcommand(1);

  int p = 0, q = 0;
  std::string lambda;
  auto* transfer = app.add_subcommand("transfer", "brute-force and closed-form transfer of one parameter");
  transfer->add_option("--p", p, "first signature index")->required();
  transfer->add_option("--q", q, "second signature index")->required();
  transfer->add_option("--lambda", lambda, "comma separated Harish-Chandra parameter, e.g. 1/2,-1/2")->required();

  int max_n = 5, jobs = 1;
  std::string max_abs = "13/2";
  auto* verify = app.add_subcommand("verify", "exhaustive sweep over a box of parameters");
  verify->add_option("--max-n", max_n, "largest p + q (at most 8)");
  verify->add_option("--max-abs-lambda", max_abs, "bound on |lambda_i|, e.g. 13/2");
  verify->add_option("--jobs", jobs, "worker threads");

  std::string kind = "ds";
  std::vector<std::string> thetas;
  std::size_t scan = 0;
  auto* eval = app.add_subcommand("eval", "pointwise character values on the compact Cartan");
  eval->add_option("--p", p, "first signature index")->required();
  eval->add_option("--q", q, "second signature index")->required();
  eval->add_option("--lambda", lambda, "comma separated Harish-Chandra parameter")->required();
  eval->add_option("--kind", kind, "ds: the character of lambda; transfer: its transfer to U(r,s)")
      ->check(CLI::IsMember({"ds", "transfer"}));
  eval->add_option("--theta", thetas, "comma separated angles, pi allowed (repeatable)");
  eval->add_option("--scan", scan, "number of random regular points to add");

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "floating-point oracles against the exact results");
  oracle->add_option("--N", oracle_opts.N, "trapezoid nodes for the circle integral");
  oracle->add_option("--grid", oracle_opts.grid, "nodes per axis for the torus quadrature");
  oracle->add_option("--seeds", oracle_opts.seeds, "random theta' per slice");
  oracle->add_option("--schedule", oracle_opts.schedule, "deformation levels, comma separated");
  oracle->add_option("--max-abs-lambda", oracle_opts.max_abs, "bound on |lambda_i| for the torus quadrature");
  oracle->add_option("--omega-samples", oracle_opts.omega_samples, "samples for the Omega bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*transfer) return cmd_transfer(p, q, lambda);
    if (*verify) return cmd_verify(max_n, max_abs, jobs);
    if (*eval) return cmd_eval(p, q, lambda, kind, thetas, scan);
    if (*oracle) return cmd_oracle(oracle_opts);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.name << ": " << e.detail << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInvalid;
}
