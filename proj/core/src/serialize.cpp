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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qprotect/error.hpp"
#include "qprotect/harness.hpp"

namespace qprotect {

namespace {

using nlohmann::json;

constexpr std::string_view kCsvHeader = "scheme,kind,n,theta,p,fidelity,stderr,xi";

// JSON carries the same 12-digit values as CSV so the two formats agree.
double rounded(double x) { return std::stod(format_double(x)); }

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& field, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw InputError("CSV line " + std::to_string(line_no) +
                     ": malformed number '" + field + "'");
  }
}

Scheme scheme_or_throw(std::string_view name) {
  if (auto s = parse_scheme(name)) return *s;
  throw InputError("unknown scheme '" + std::string(name) + "'");
}

ChannelKind kind_or_throw(std::string_view name) {
  if (auto k = parse_channel_kind(name)) return *k;
  throw InputError("unknown channel kind '" + std::string(name) + "'");
}

EstimationMode mode_or_throw(std::string_view name) {
  if (name == "exact") return EstimationMode::Exact;
  if (name == "sampled") return EstimationMode::Sampled;
  throw InputError("unknown estimation mode '" + std::string(name) + "'");
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string to_csv(const std::vector<FidelityCurve>& curves) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& c : curves) {
    const std::string prefix = std::string(to_string(c.scheme)) + "," +
                               std::string(to_string(c.kind)) + "," +
                               std::to_string(c.n) + "," +
                               format_double(c.theta) + ",";
    for (const auto& pt : c.points) {
      out += prefix;
      out += format_double(pt.p) + "," + format_double(pt.fidelity) + "," +
             format_double(pt.std_error) + "," + format_double(pt.xi) + "\n";
    }
  }
  return out;
}

std::vector<FidelityCurve> parse_csv(std::string_view text) {
  std::vector<FidelityCurve> curves;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kCsvHeader) {
        throw InputError("CSV header mismatch: '" + line + "'");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) {
      throw InputError("CSV line " + std::to_string(line_no) + ": expected 8 fields, got " +
                       std::to_string(f.size()));
    }
    const Scheme scheme = scheme_or_throw(f[0]);
    const ChannelKind kind = kind_or_throw(f[1]);
    const auto n = static_cast<std::size_t>(parse_number(f[2], line_no));
    const double theta = parse_number(f[3], line_no);
    const FidelityPoint pt{parse_number(f[4], line_no),
                           parse_number(f[5], line_no),
                           parse_number(f[6], line_no),
                           parse_number(f[7], line_no)};
    if (curves.empty() || curves.back().scheme != scheme ||
        curves.back().kind != kind || curves.back().n != n ||
        curves.back().theta != theta) {
      FidelityCurve c;
      c.scheme = scheme;
      c.kind = kind;
      c.n = n;
      c.theta = theta;
      curves.push_back(std::move(c));
    }
    curves.back().points.push_back(pt);
  }
  if (line_no == 0) throw InputError("CSV input is empty");
  return curves;
}

std::string to_json(const std::vector<FidelityCurve>& curves,
                    const std::vector<PointFailure>& failures) {
  json doc;
  doc["curves"] = json::array();
  for (const auto& c : curves) {
    json jc;
    jc["scheme"] = to_string(c.scheme);
    jc["kind"] = to_string(c.kind);
    jc["n"] = c.n;
    jc["theta"] = rounded(c.theta);
    jc["points"] = json::array();
    for (const auto& pt : c.points) {
      jc["points"].push_back({{"p", rounded(pt.p)},
                              {"fidelity", rounded(pt.fidelity)},
                              {"stderr", rounded(pt.std_error)},
                              {"xi_used", rounded(pt.xi)}});
    }
    jc["metadata"] = {{"mode", to_string(c.metadata.mode)},
                      {"shots", c.metadata.shots},
                      {"base_seed", c.metadata.base_seed},
                      {"tool_version", c.metadata.tool_version}};
    doc["curves"].push_back(std::move(jc));
  }
  doc["failures"] = json::array();
  for (const auto& f : failures) {
    doc["failures"].push_back({{"scheme", to_string(f.scheme)},
                               {"kind", to_string(f.kind)},
                               {"p", rounded(f.p)},
                               {"message", f.message}});
  }
  return doc.dump(2) + "\n";
}

std::vector<FidelityCurve> parse_json(std::string_view text) {
  std::vector<FidelityCurve> curves;
  try {
    const json doc = json::parse(text);
    for (const auto& jc : doc.at("curves")) {
      FidelityCurve c;
      c.scheme = scheme_or_throw(jc.at("scheme").get<std::string>());
      c.kind = kind_or_throw(jc.at("kind").get<std::string>());
      c.n = jc.at("n").get<std::size_t>();
      c.theta = jc.at("theta").get<double>();
      for (const auto& jp : jc.at("points")) {
        c.points.push_back({jp.at("p").get<double>(),
                            jp.at("fidelity").get<double>(),
                            jp.at("stderr").get<double>(),
                            jp.at("xi_used").get<double>()});
      }
      const auto& jm = jc.at("metadata");
      c.metadata.mode = mode_or_throw(jm.at("mode").get<std::string>());
      c.metadata.shots = jm.at("shots").get<std::size_t>();
      c.metadata.base_seed = jm.at("base_seed").get<std::uint64_t>();
      c.metadata.tool_version = jm.at("tool_version").get<std::string>();
      curves.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed results JSON: ") + e.what());
  }
  return curves;
}

void serialize(const std::vector<FidelityCurve>& curves, OutputFormat format,
               const std::filesystem::path& path,
               const std::vector<PointFailure>& failures) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << (format == OutputFormat::Csv ? to_csv(curves)
                                      : to_json(curves, failures));
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace qprotect
