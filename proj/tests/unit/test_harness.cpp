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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qprotect/error.hpp"
#include "qprotect/harness.hpp"
#include "qprotect/version.hpp"

using namespace qprotect;

namespace {

constexpr const char* kHeader = "scheme,kind,n,theta,p,fidelity,stderr,xi";

void check_same(const std::vector<FidelityCurve>& a, const std::vector<FidelityCurve>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].scheme == b[i].scheme);
    CHECK(a[i].kind == b[i].kind);
    CHECK(a[i].n == b[i].n);
    CHECK(std::abs(a[i].theta - b[i].theta) < 1e-11);
    REQUIRE(a[i].points.size() == b[i].points.size());
    for (std::size_t j = 0; j < a[i].points.size(); ++j) {
      CHECK(std::abs(a[i].points[j].p - b[i].points[j].p) < 1e-11);
      CHECK(std::abs(a[i].points[j].fidelity - b[i].points[j].fidelity) < 1e-11);
      CHECK(std::abs(a[i].points[j].std_error - b[i].points[j].std_error) < 1e-11);
      CHECK(std::abs(a[i].points[j].xi - b[i].points[j].xi) < 1e-11);
    }
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("make_p_grid") {
  const auto g = make_p_grid(0.0, 1.0, 21);
  REQUIRE(g.size() == 21);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(std::abs(g[10] - 0.5) < 1e-15);
  CHECK(make_p_grid(0.3, 0.9, 1) == std::vector<double>{0.3});
  CHECK_THROWS_AS(make_p_grid(0.0, 1.0, 0), InputError);
}

TEST_CASE("default sweep configuration") {
  const SweepConfig cfg;
  CHECK(cfg.n == 2);
  CHECK(std::abs(cfg.theta - 2 * std::numbers::pi / 3) < 1e-15);
  CHECK(cfg.kinds.size() == 3);
  CHECK(cfg.schemes.size() == 5);
  CHECK(cfg.p_grid.size() == 21);
  CHECK(cfg.mode == EstimationMode::Exact);
  CHECK(cfg.shots == 10000);
  CHECK(cfg.optimize_xi);
  CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("sweep validation") {
  SweepConfig cfg;
  cfg.n = 0;
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg = SweepConfig{};
  cfg.p_grid = {0.0, 1.2};
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg.p_grid = {0.5, 0.2};
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg.p_grid = {};
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg = SweepConfig{};
  cfg.kinds.clear();
  CHECK_THROWS_AS(run_sweep(cfg), InputError);
  cfg = SweepConfig{};
  cfg.mode = EstimationMode::Sampled;
  cfg.shots = 0;
  CHECK_THROWS_AS(validate(cfg), InputError);
}

TEST_CASE("unprotected at zero strength") {
  SweepConfig cfg;
  cfg.schemes = {Scheme::Unprotected};
  cfg.p_grid = {0.0};
  const auto r = run_sweep(cfg);
  CHECK(r.failures.empty());
  REQUIRE(r.curves.size() == 3);
  for (const auto& c : r.curves) {
    REQUIRE(c.points.size() == 1);
    CHECK(std::abs(c.points[0].fidelity - 1.0) < 1e-12);
    CHECK(c.points[0].xi == 0.0);
    CHECK(c.metadata.tool_version == kVersion);
  }
}

TEST_CASE("sweep ordering and xi bookkeeping") {
  SweepConfig cfg;
  cfg.p_grid = make_p_grid(0.0, 1.0, 5);
  const auto r = run_sweep(cfg);
  REQUIRE(r.curves.size() == 15);
  std::size_t i = 0;
  for (Scheme s : kAllSchemes) {
    for (ChannelKind k : kAllChannelKinds) {
      CHECK(r.curves[i].scheme == s);
      CHECK(r.curves[i].kind == k);
      CHECK(r.curves[i].points.size() == 5);
      for (const auto& pt : r.curves[i].points) {
        if (!uses_xi(s)) CHECK(pt.xi == 0.0);
        CHECK(pt.std_error == 0.0);
        CHECK(pt.fidelity >= 0.0);
        CHECK(pt.fidelity <= 1.0);
      }
      ++i;
    }
  }

  cfg.optimize_xi = false;
  const auto fixed = run_sweep(cfg);
  for (const auto& c : fixed.curves)
    for (const auto& pt : c.points) CHECK(pt.xi == 0.0);
}

TEST_CASE("sweeps are reproducible across worker counts") {
  SweepConfig cfg;
  cfg.p_grid = make_p_grid(0.0, 1.0, 6);
  cfg.mode = EstimationMode::Sampled;
  cfg.shots = 500;
  cfg.base_seed = 12345;
  const std::string one = to_json(run_sweep(cfg).curves);
  cfg.width = 4;
  const std::string four = to_json(run_sweep(cfg).curves);
  CHECK(one == four);
  CHECK(one == to_json(run_sweep(cfg).curves));
  cfg.base_seed = 12346;
  CHECK(one != to_json(run_sweep(cfg).curves));

  cfg.mode = EstimationMode::Exact;
  cfg.width = 1;
  const std::string a = to_csv(run_sweep(cfg).curves);
  cfg.width = 3;
  CHECK(a == to_csv(run_sweep(cfg).curves));
}

TEST_CASE("CSV layout") {
  CHECK(to_csv({}) == std::string(kHeader) + "\n");
  FidelityCurve c;
  c.scheme = Scheme::CollectiveIndividual;
  c.kind = ChannelKind::AmplitudeDamping;
  c.n = 4;
  c.theta = 0.5;
  c.points = {{0.25, 0.75, 0.0, -1.5}};
  CHECK(to_csv({c}) ==
        std::string(kHeader) + "\ncoll-ind,amplitude-damping,4,0.5,0.25,0.75,0,-1.5\n");
  CHECK(parse_csv(std::string(kHeader) + "\n").empty());
  CHECK_THROWS_AS(parse_csv("a,b\n"), InputError);
  CHECK_THROWS_AS(parse_csv(""), InputError);
  CHECK_THROWS_AS(parse_csv(std::string(kHeader) + "\nind-ind,dephasing,2,1,0.5\n"),
                  InputError);
  CHECK_THROWS_AS(parse_csv(std::string(kHeader) + "\nind-ind,dephasing,2,1,x,1,0,0\n"),
                  InputError);
}

TEST_CASE("CSV and JSON round trips") {
  SweepConfig cfg;
  cfg.p_grid = make_p_grid(0.0, 1.0, 4);
  cfg.mode = EstimationMode::Sampled;
  cfg.shots = 300;
  cfg.base_seed = 9;
  const auto curves = run_sweep(cfg).curves;
  check_same(curves, parse_csv(to_csv(curves)));
  const auto back = parse_json(to_json(curves));
  check_same(curves, back);
  CHECK(back[0].metadata.mode == EstimationMode::Sampled);
  CHECK(back[0].metadata.shots == 300);
  CHECK(back[0].metadata.base_seed == 9);
  CHECK(back[0].metadata.tool_version == kVersion);
  CHECK(to_json(back) == to_json(curves));
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(parse_json(R"({"curves":[{"scheme":"bogus"}]})"), InputError);
}

TEST_CASE("JSON shape") {
  FidelityCurve c;
  c.scheme = Scheme::IndividualCollective;
  c.kind = ChannelKind::Dephasing;
  c.n = 2;
  c.theta = 1.0;
  c.points = {{0.5, 0.9, 0.01, 0.2}};
  const std::string j =
      to_json({c}, {{Scheme::IndividualIndividual, ChannelKind::Depolarizing, 0.3, "boom"}});
  for (const char* key : {"\"curves\"", "\"points\"", "\"xi_used\"", "\"stderr\"",
                          "\"metadata\"", "\"tool_version\"", "\"failures\"", "\"boom\""}) {
    CHECK(j.find(key) != std::string::npos);
  }
}

TEST_CASE("serialize writes files and reports bad paths") {
  const auto dir = std::filesystem::temp_directory_path() / "qprotect_harness_test";
  std::filesystem::create_directories(dir);
  SweepConfig cfg;
  cfg.p_grid = {0.0, 0.5};
  cfg.schemes = {Scheme::CollectiveCollective};
  const auto curves = run_sweep(cfg).curves;
  serialize(curves, OutputFormat::Csv, dir / "a.csv");
  serialize(curves, OutputFormat::Json, dir / "a.json");
  CHECK(read_file(dir / "a.csv") == to_csv(curves));
  check_same(curves, parse_json(read_file(dir / "a.json")));
  CHECK_THROWS_AS(serialize(curves, OutputFormat::Csv, dir / "missing" / "x" / "a.csv"),
                  IoError);
  std::filesystem::remove_all(dir);

  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK_FALSE(parse_output_format("xml").has_value());
}
