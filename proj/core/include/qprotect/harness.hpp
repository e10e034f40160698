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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qprotect/channels.hpp"
#include "qprotect/optimizer.hpp"
#include "qprotect/schemes.hpp"

namespace qprotect {

inline constexpr double kDefaultTheta = 2.0 * std::numbers::pi / 3.0;
inline constexpr std::size_t kDefaultShots = 10000;
inline constexpr std::size_t kDefaultGridPoints = 21;

/// `count` evenly spaced strengths from start to stop inclusive.
std::vector<double> make_p_grid(double start, double stop, std::size_t count);

struct SweepConfig {
  std::size_t n = 2;
  double theta = kDefaultTheta;
  std::vector<ChannelKind> kinds{kAllChannelKinds.begin(),
                                 kAllChannelKinds.end()};
  std::vector<Scheme> schemes{kAllSchemes.begin(), kAllSchemes.end()};
  std::vector<double> p_grid = make_p_grid(0.0, 1.0, kDefaultGridPoints);
  EstimationMode mode = EstimationMode::Exact;
  std::size_t shots = kDefaultShots;
  std::uint64_t base_seed = 0;
  bool optimize_xi = true;
  DampingModification modification = DampingModification::CircuitOrder;
  /// Worker threads; 0 uses every hardware thread.
  std::size_t width = 1;
};

/// Throws InputError on an empty or unsorted grid, p outside [0, 1], no
/// kinds or schemes, or zero shots in sampled mode.
void validate(const SweepConfig& cfg);

struct FidelityPoint {
  double p = 0.0;
  double fidelity = 0.0;
  double std_error = 0.0;
  double xi = 0.0;
};

struct CurveMetadata {
  EstimationMode mode = EstimationMode::Exact;
  std::size_t shots = 0;
  std::uint64_t base_seed = 0;
  std::string tool_version;
};

struct FidelityCurve {
  Scheme scheme = Scheme::Unprotected;
  ChannelKind kind = ChannelKind::Dephasing;
  std::size_t n = 0;
  double theta = 0.0;
  std::vector<FidelityPoint> points;
  CurveMetadata metadata;
};

struct PointFailure {
  Scheme scheme = Scheme::Unprotected;
  ChannelKind kind = ChannelKind::Dephasing;
  double p = 0.0;
  std::string message;
};

struct SweepResult {
  std::vector<FidelityCurve> curves;
  std::vector<PointFailure> failures;
};

/// Evaluates every (scheme, kind, p) point. xi is re-optimized at each
/// strength for the mixed schemes when cfg.optimize_xi is set, else 0.
/// Sampled points use point_seed(base_seed, scheme, kind, p index), so the
/// result does not depend on cfg.width. A failing point is left out of its
/// curve and recorded in `failures`.
SweepResult run_sweep(const SweepConfig& cfg);

enum class OutputFormat { Csv, Json };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Header `scheme,kind,n,theta,p,fidelity,stderr,xi` and one row per point,
/// floats at 12 significant digits.
std::string to_csv(const std::vector<FidelityCurve>& curves);

/// {"curves": [...], "failures": [...]} with FidelityCurve field names.
std::string to_json(const std::vector<FidelityCurve>& curves,
                    const std::vector<PointFailure>& failures = {});

/// Rows are grouped into curves by consecutive (scheme, kind, n, theta).
/// Metadata is not part of the CSV format and is left default.
std::vector<FidelityCurve> parse_csv(std::string_view text);
std::vector<FidelityCurve> parse_json(std::string_view text);

/// Writes curves to `path`. Throws IoError naming the path on failure.
void serialize(const std::vector<FidelityCurve>& curves, OutputFormat format,
               const std::filesystem::path& path,
               const std::vector<PointFailure>& failures = {});

/// Renders a double at 12 significant digits ("%.12g").
std::string format_double(double x);

}  // namespace qprotect
