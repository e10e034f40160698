// Copyright 2026 The qprotect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qprotect/channels.hpp"
#include "qprotect/circuits.hpp"
#include "qprotect/error.hpp"
#include "qprotect/estimation.hpp"
#include "qprotect/harness.hpp"
#include "qprotect/optimizer.hpp"
#include "qprotect/schemes.hpp"
#include "qprotect/validation.hpp"
#include "qprotect/version.hpp"

namespace qprotect::cli {

namespace {

using nlohmann::json;

// Raised for bad flag values detected after CLI11 has parsed the line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double angle_or_throw(const std::string& flag, const std::string& text) {
  if (auto v = parse_angle(text)) return *v;
  throw UsageError(flag + ": cannot parse angle '" + text + "'");
}

Scheme scheme_or_throw(const std::string& flag, const std::string& text) {
  if (auto s = parse_scheme(text)) return *s;
  throw UsageError(flag + ": unknown scheme '" + text +
                   "' (expected unprotected, ind-ind, ind-coll, coll-ind, "
                   "coll-coll)");
}

ChannelKind kind_or_throw(const std::string& flag, const std::string& text) {
  if (auto k = parse_channel_kind(text)) return *k;
  throw UsageError(flag + ": unknown channel '" + text +
                   "' (expected amplitude-damping, dephasing, depolarizing)");
}

EstimationMode mode_or_throw(const std::string& text) {
  if (text == "exact") return EstimationMode::Exact;
  if (text == "sampled") return EstimationMode::Sampled;
  throw UsageError("--mode: expected exact or sampled, got '" + text + "'");
}

DampingModification damping_or_throw(const std::string& text) {
  if (text == "circuit") return DampingModification::CircuitOrder;
  if (text == "matrix") return DampingModification::MatrixOrder;
  throw UsageError("--damping-order: expected circuit or matrix, got '" +
                   text + "'");
}

std::vector<double> p_grid_or_throw(const std::string& text) {
  const auto parts = [&] {
    std::vector<std::string> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) v.push_back(item);
    return v;
  }();
  if (parts.size() != 3) {
    throw UsageError("--p-grid: expected start:stop:count, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const double start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    const double stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    const long count = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    if (!(start >= 0.0 && stop <= 1.0 && start <= stop) || count < 1 ||
        (count > 1 && start == stop)) {
      throw UsageError("--p-grid: need 0 <= start < stop <= 1 and count >= 1, got '" +
                       text + "'");
    }
    return make_p_grid(start, stop, static_cast<std::size_t>(count));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("--p-grid: malformed value '" + text + "'");
  }
}

json estimate_json(const FidelityEstimate& est) {
  json j = {{"fidelity", est.value},
            {"stderr", est.std_error},
            {"shots", est.shots}};
  if (est.seed) j["seed"] = *est.seed;
  return j;
}

json optimum_json(const XiOptimum& opt) {
  return {{"xi_star", opt.xi_star},
          {"f_star", opt.f_star},
          {"mode", to_string(opt.mode)},
          {"evaluations", opt.evaluations}};
}

// Options shared by run / optimize / calibrate.
struct PointOptions {
  std::string scheme;
  std::string channel;
  double p = 0.0;
  std::size_t n = 2;
  std::string theta = "2pi/3";
  std::string damping = "circuit";
  std::string format = "text";

  void attach(CLI::App* sub, bool scheme_required) {
    auto* s = sub->add_option("--scheme", scheme,
                              "unprotected | ind-ind | ind-coll | coll-ind | coll-coll");
    if (scheme_required) s->required();
    sub->add_option("--channel", channel,
                    "amplitude-damping | dephasing | depolarizing")
        ->required();
    sub->add_option("--p", p, "decoherence strength in [0, 1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--n", n, "number of qubits (simulations use 2 or 4)")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, kMaxQubits));
    sub->add_option("--theta", theta,
                    "input-state angle in radians; accepts pi fractions like 2pi/3")
        ->capture_default_str();
    sub->add_option("--damping-order", damping,
                    "bit-flip composition for amplitude damping: circuit | matrix")
        ->capture_default_str()
        ->check(CLI::IsMember({"circuit", "matrix"}));
    sub->add_option("--format", format, "output format: text | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
  }

  XiProblem problem(Scheme s) const {
    return {s, kind_or_throw("--channel", channel), p, n,
            angle_or_throw("--theta", theta), damping_or_throw(damping)};
  }
};

int do_run(const PointOptions& opts, const std::string& mode_text,
           std::size_t shots, std::uint64_t seed,
           const std::optional<std::string>& xi_text, std::ostream& out) {
  const Scheme scheme = scheme_or_throw("--scheme", opts.scheme);
  const XiProblem problem = opts.problem(scheme);
  const EstimationMode mode = mode_or_throw(mode_text);

  double xi = 0.0;
  bool optimized = false;
  if (xi_text) {
    xi = angle_or_throw("--xi", *xi_text);
  } else if (uses_xi(scheme)) {
    xi = optimize_xi_exact(problem).xi_star;
    optimized = true;
  }

  const StateVector psi = input_state(problem.n, problem.theta);
  const SchemeInstance inst = resolve_scheme(scheme, problem.kind, problem.n,
                                             problem.theta, xi, problem.modification);
  const DensityMatrix rho =
      run_protected(inst, make_channel(problem.kind, problem.p), psi);
  const FidelityEstimate est =
      mode == EstimationMode::Exact
          ? fidelity_exact(psi, rho)
          : fidelity_sampled(u_prep(problem.n, problem.theta), rho, shots, seed);

  if (opts.format == "json") {
    json j = {{"scheme", to_string(scheme)},
              {"channel", to_string(problem.kind)},
              {"n", problem.n},
              {"theta", problem.theta},
              {"p", problem.p},
              {"xi", inst.xi},
              {"xi_optimized", optimized},
              {"mode", to_string(mode)}};
    j.update(estimate_json(est));
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "scheme=" << to_string(scheme) << " channel=" << to_string(problem.kind)
      << " n=" << problem.n << " theta=" << format_double(problem.theta)
      << " p=" << format_double(problem.p) << " xi=" << format_double(inst.xi)
      << (optimized ? " (optimized)" : "") << " mode=" << to_string(mode) << "\n";
  out << "F = " << fixed12(est.value);
  if (!est.exact()) out << " +/- " << fixed12(est.std_error);
  out << "\n";
  return kExitOk;
}

int do_optimize(const PointOptions& opts, std::size_t grid_points,
                std::ostream& out) {
  const XiProblem problem = opts.problem(scheme_or_throw("--scheme", opts.scheme));
  const XiOptimum opt = optimize_xi_exact(problem, grid_points);
  if (opts.format == "json") {
    out << optimum_json(opt).dump(2) << "\n";
    return kExitOk;
  }
  out << "xi* = " << fixed12(opt.xi_star) << "\n"
      << "F*  = " << fixed12(opt.f_star) << "\n"
      << "mode = exact, evaluations = " << opt.evaluations << "\n";
  return kExitOk;
}

int do_calibrate(const PointOptions& opts, std::size_t shots,
                 std::uint64_t seed, std::size_t grid_points, std::size_t width,
                 std::ostream& out) {
  const XiProblem problem = opts.problem(scheme_or_throw("--scheme", opts.scheme));
  const Calibration cal =
      calibrate_xi_sampled(problem, shots, seed, grid_points, width);
  if (opts.format == "json") {
    json j = optimum_json(cal.optimum);
    j["shots"] = shots;
    j["seed"] = seed;
    j["curve"] = json::array();
    for (const auto& pt : cal.curve) {
      j["curve"].push_back({{"xi", pt.xi},
                            {"fidelity", pt.estimate.value},
                            {"stderr", pt.estimate.std_error}});
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "xi* = " << fixed12(cal.optimum.xi_star) << "\n"
      << "F*  = " << fixed12(cal.optimum.f_star) << "\n"
      << "mode = sampled, shots = " << shots << ", grid points = "
      << grid_points << "\n"
      << "xi,fidelity,stderr\n";
  for (const auto& pt : cal.curve) {
    out << format_double(pt.xi) << "," << format_double(pt.estimate.value)
        << "," << format_double(pt.estimate.std_error) << "\n";
  }
  return kExitOk;
}

int do_validate(const std::string& format, std::ostream& out) {
  const auto results = run_self_checks();
  const bool all = std::all_of(results.begin(), results.end(),
                               [](const CheckResult& r) { return r.passed; });
  if (format == "json") {
    json j = {{"passed", all}, {"checks", json::array()}};
    for (const auto& r : results) {
      j["checks"].push_back(
          {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
          << "\n";
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all ? kExitOk : kExitValidationFailure;
}

struct SweepOptions {
  std::size_t n = 2;
  std::string theta = "2pi/3";
  std::string channels = "amplitude-damping,dephasing,depolarizing";
  std::string schemes = "unprotected,ind-ind,ind-coll,coll-ind,coll-coll";
  std::string p_grid = "0:1:21";
  std::string mode = "exact";
  std::size_t shots = kDefaultShots;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::size_t width = 1;
  bool no_optimize = false;
  std::string damping = "circuit";
};

int do_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.n = o.n;
  cfg.theta = angle_or_throw("--theta", o.theta);
  cfg.kinds.clear();
  for (const auto& k : split_list(o.channels)) {
    cfg.kinds.push_back(kind_or_throw("--channels", k));
  }
  cfg.schemes.clear();
  for (const auto& s : split_list(o.schemes)) {
    cfg.schemes.push_back(scheme_or_throw("--schemes", s));
  }
  if (cfg.kinds.empty()) throw UsageError("--channels: empty list");
  if (cfg.schemes.empty()) throw UsageError("--schemes: empty list");
  cfg.p_grid = p_grid_or_throw(o.p_grid);
  cfg.mode = mode_or_throw(o.mode);
  cfg.shots = o.shots;
  cfg.base_seed = o.seed;
  cfg.width = o.width;
  cfg.optimize_xi = !o.no_optimize;
  cfg.modification = damping_or_throw(o.damping);

  const OutputFormat format = *parse_output_format(o.format);
  std::filesystem::path path = o.out;
  if (path.empty()) {
    const char* dir = std::getenv(kOutputDirEnv);
    path = std::filesystem::path(dir && *dir ? dir : ".") /
           ("sweep_n" + std::to_string(cfg.n) + "." +
            std::string(to_string(format)));
  }

  const SweepResult result = run_sweep(cfg);
  serialize(result.curves, format, path, result.failures);
  for (const auto& f : result.failures) {
    err << "point failed: " << to_string(f.scheme) << " " << to_string(f.kind)
        << " p=" << format_double(f.p) << ": " << f.message << "\n";
  }
  std::size_t points = 0;
  for (const auto& c : result.curves) points += c.points.size();
  out << "wrote " << result.curves.size() << " curves (" << points
      << " points) to " << path.string() << "\n";
  return result.failures.empty() ? kExitOk : kExitValidationFailure;
}

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) return std::nullopt;
  static const std::regex pi_form(
      R"(^([+-]?(?:\d+\.?\d*|\.\d+)?)\*?pi(?:/(\d+\.?\d*|\.\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    double coeff = 1.0;
    const std::string c = m[1].str();
    if (c == "-") {
      coeff = -1.0;
    } else if (!c.empty() && c != "+") {
      coeff = std::stod(c);
    }
    double denom = 1.0;
    if (m[2].matched) denom = std::stod(m[2].str());
    if (denom == 0.0) return std::nullopt;
    return coeff * std::numbers::pi / denom;
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "qprotect: density-matrix simulator for unitary pre/post-processing "
      "protection against identical single-qubit decoherence.\n"
      "Defaults follow the reference simulation setup: theta = 2pi/3, "
      "shots = 10000, n = 2 (n = 4 is the other studied size)."};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "fidelity-vs-strength curves");
  sweep_cmd->add_option("--n", sweep.n, "number of qubits (2 or 4 in the reference setup)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, kMaxQubits));
  sweep_cmd->add_option("--theta", sweep.theta, "input-state angle (radians or pi fraction)")
      ->capture_default_str();
  sweep_cmd->add_option("--channels", sweep.channels, "comma-separated channel kinds")
      ->capture_default_str();
  sweep_cmd->add_option("--schemes", sweep.schemes, "comma-separated schemes")
      ->capture_default_str();
  sweep_cmd->add_option("--p-grid", sweep.p_grid, "strength grid start:stop:count")
      ->capture_default_str();
  sweep_cmd->add_option("--mode", sweep.mode, "exact | sampled")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "sampled"}));
  sweep_cmd->add_option("--shots", sweep.shots, "shots per point in sampled mode")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000'000}));
  sweep_cmd->add_option("--seed", sweep.seed, "base seed for sampled mode")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out,
                        std::string("output path (default: $") + kOutputDirEnv +
                            "/sweep_n<N>.<format>, or the current directory)");
  sweep_cmd->add_option("--format", sweep.format, "csv | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--width", sweep.width, "worker threads (0 = all cores)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{0}, std::size_t{1024}));
  sweep_cmd->add_flag("--no-optimize-xi", sweep.no_optimize,
                      "use xi = 0 instead of per-strength optimization");
  sweep_cmd->add_option("--damping-order", sweep.damping, "circuit | matrix")
      ->capture_default_str()
      ->check(CLI::IsMember({"circuit", "matrix"}));

  PointOptions run_opts;
  std::string run_mode = "exact";
  std::size_t run_shots = kDefaultShots;
  std::uint64_t run_seed = 0;
  std::optional<std::string> run_xi;
  auto* run_cmd = app.add_subcommand("run", "one (scheme, channel, p) point");
  run_opts.attach(run_cmd, true);
  run_cmd->add_option("--mode", run_mode, "exact | sampled")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "sampled"}));
  run_cmd->add_option("--shots", run_shots, "shots in sampled mode")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000'000}));
  run_cmd->add_option("--seed", run_seed, "seed in sampled mode")->capture_default_str();
  run_cmd->add_option("--xi", run_xi,
                      "collective angle; optimized per strength when omitted");

  PointOptions opt_opts;
  std::size_t opt_grid = 181;
  auto* opt_cmd = app.add_subcommand("optimize", "exact xi optimization");
  opt_opts.attach(opt_cmd, true);
  opt_cmd->add_option("--grid-points", opt_grid, "initial uniform grid size")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{3}, std::size_t{1'000'000}));

  PointOptions cal_opts;
  std::size_t cal_shots = kDefaultShots;
  std::uint64_t cal_seed = 0;
  std::size_t cal_grid = 181;
  std::size_t cal_width = 1;
  auto* cal_cmd = app.add_subcommand("calibrate", "shot-sampled xi calibration curve");
  cal_opts.attach(cal_cmd, true);
  cal_cmd->add_option("--shots", cal_shots, "shots per grid angle")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000'000}));
  cal_cmd->add_option("--seed", cal_seed, "base seed")->capture_default_str();
  cal_cmd->add_option("--grid-points", cal_grid, "uniform grid size over [-pi, pi)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{3}, std::size_t{1'000'000}));
  cal_cmd->add_option("--width", cal_width, "worker threads (0 = all cores)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{0}, std::size_t{1024}));

  std::string validate_format = "text";
  auto* val_cmd = app.add_subcommand("validate", "run the built-in invariant suite");
  val_cmd->add_option("--format", validate_format, "text | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep_cmd) return do_sweep(sweep, out, err);
    if (*run_cmd) {
      return do_run(run_opts, run_mode, run_shots, run_seed, run_xi, out);
    }
    if (*opt_cmd) return do_optimize(opt_opts, opt_grid, out);
    if (*cal_cmd) {
      return do_calibrate(cal_opts, cal_shots, cal_seed, cal_grid, cal_width, out);
    }
    if (*val_cmd) return do_validate(validate_format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
  return kExitUsage;
}

}  // namespace qprotect::cli
