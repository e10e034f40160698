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
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using qprotect::cli::parse_angle;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qprotect::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_angle") {
  constexpr double pi = std::numbers::pi;
  CHECK(*parse_angle("0.25") == 0.25);
  CHECK(*parse_angle("-1e-3") == -1e-3);
  CHECK(std::abs(*parse_angle("pi") - pi) < 1e-15);
  CHECK(std::abs(*parse_angle("2pi/3") - 2 * pi / 3) < 1e-15);
  CHECK(std::abs(*parse_angle("-pi/4") + pi / 4) < 1e-15);
  CHECK(std::abs(*parse_angle("0.5*pi") - pi / 2) < 1e-15);
  CHECK_FALSE(parse_angle("").has_value());
  CHECK_FALSE(parse_angle("two").has_value());
  CHECK_FALSE(parse_angle("pi/0").has_value());
}

TEST_CASE("run prints the exact fidelity") {
  auto r = invoke({"run", "--scheme", "coll-coll", "--channel", "dephasing", "--p", "0.7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F = 1.000000000000") != std::string::npos);

  r = invoke({"run", "--scheme", "coll-coll", "--channel", "depolarizing", "--p", "0.4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F = 0.640000000000") != std::string::npos);

  r = invoke({"run", "--scheme", "ind-coll", "--channel", "dephasing", "--p", "0.2",
              "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"xi_optimized\": true") != std::string::npos);

  r = invoke({"run", "--scheme", "ind-coll", "--channel", "dephasing", "--p", "0.2",
              "--mode", "sampled", "--shots", "1000", "--seed", "4", "--xi", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("+/-") != std::string::npos);
}

TEST_CASE("usage errors exit with 2 and name the flag") {
  auto r = invoke({"run", "--scheme", "coll-coll", "--channel", "dephasing", "--p", "1.5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--p") != std::string::npos);

  r = invoke({"run", "--scheme", "sideways", "--channel", "dephasing", "--p", "0.1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--scheme") != std::string::npos);

  r = invoke({"run", "--scheme", "ind-ind", "--channel", "dephasing", "--p", "0.1",
              "--theta", "banana"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--theta") != std::string::npos);

  r = invoke({"sweep", "--p-grid", "0:1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--p-grid") != std::string::npos);

  r = invoke({"optimize", "--scheme", "coll-coll", "--channel", "dephasing", "--p", "0.1"});
  CHECK(r.code == 2);

  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("validate subcommand") {
  auto r = invoke({"validate"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  r = invoke({"validate", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"passed\"") != std::string::npos);
}

TEST_CASE("optimize and calibrate") {
  auto r = invoke({"optimize", "--scheme", "ind-coll", "--channel", "dephasing", "--p", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("xi* = ") != std::string::npos);
  r = invoke({"calibrate", "--scheme", "coll-ind", "--channel", "dephasing", "--p", "0.3",
              "--shots", "200", "--grid-points", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("xi* = ") != std::string::npos);
}

TEST_CASE("sweep writes the requested file") {
  const auto dir = std::filesystem::temp_directory_path() / "qprotect_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto csv = dir / "s.csv";
  auto r = invoke({"sweep", "--schemes", "unprotected,coll-coll", "--channels", "dephasing",
                   "--p-grid", "0:1:3", "--out", csv.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(csv));

  setenv(qprotect::cli::kOutputDirEnv, dir.c_str(), 1);
  r = invoke({"sweep", "--n", "4", "--schemes", "ind-ind", "--p-grid", "0:1:2", "--format",
              "json"});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "sweep_n4.json"));
  unsetenv(qprotect::cli::kOutputDirEnv);

  r = invoke({"sweep", "--p-grid", "0:1:2", "--out", (dir / "no" / "such" / "f.csv").string()});
  CHECK(r.code == 1);
  std::filesystem::remove_all(dir);
}
