// Copyright 2026 The dimcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "support/process.hpp"
#include "support/programs.hpp"

using dimcheck::testing::kListingF;
using dimcheck::testing::quote;
using dimcheck::testing::ProcessResult;
using dimcheck::testing::TempSource;

namespace {

ProcessResult cli(const std::string& args) {
  return dimcheck::testing::run_process(DIMCHECK_CLI, args);
}

std::string sample(const char* name) {
  return quote(std::string(DIMCHECK_SAMPLES) + "/" + name);
}

}  // namespace

TEST_CASE("run prints the free-fall time") {
  const ProcessResult r = cli("run " + sample("free_fall.udl"));
  CHECK(r.exit_code == 0);
  char want[64];
  std::snprintf(want, sizeof want, "t = %.17g s\n", std::sqrt(2.0 / 9.81));
  CHECK(r.out == want);
  CHECK(r.err.empty());
  CHECK(cli("run --fast " + sample("free_fall.udl")).out == r.out);
}

TEST_CASE("run on the derived-units sample") {
  const ProcessResult r = cli("run " + sample("derived_units.udl"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(1*m + 75*cm) = 175 cm\n") != std::string::npos);
  CHECK(r.out.find("c = 299792458 m/s\n") != std::string::npos);
}

TEST_CASE("check reports diagnostics with exit 1") {
  TempSource bad(kListingF + "print t in m;\n");
  const ProcessResult r = cli("check " + quote(bad.path()));
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  CHECK(r.err == bad.path() +
                     ":9:9: error[DimensionMismatch]: cannot express s^1 in "
                     "'m' (m^1)\n");
}

TEST_CASE("check accepts several files and reports them in order") {
  TempSource a("dim x;\ndim x;\n");
  TempSource b("dim y;\nunit u = base(z, 1);\n");
  const ProcessResult r = cli("check " + quote(a.path()) + " " +
                              sample("free_fall.udl") + " " + quote(b.path()));
  CHECK(r.exit_code == 1);
  const auto first = r.err.find(a.path());
  const auto second = r.err.find(b.path());
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  CHECK(first < second);
  CHECK(cli("check " + sample("free_fall.udl") + " " +
            sample("derived_units.udl"))
            .exit_code == 0);
}

TEST_CASE("usage and I/O errors exit 2") {
  CHECK(cli("check /nonexistent/file.udl").exit_code == 2);
  CHECK(cli("").exit_code == 2);
  CHECK(cli("frobnicate x").exit_code == 2);
  CHECK(cli("run --encoding sideways " + sample("free_fall.udl")).exit_code == 2);
  CHECK(cli("run --compat --encoding vector " + sample("free_fall.udl"))
            .exit_code == 2);
  CHECK(cli("bench --iterations 0 " + sample("free_fall.udl")).exit_code == 2);
  CHECK(cli("run --axes 30 " + sample("free_fall.udl")).exit_code == 2);
}

TEST_CASE("runtime errors exit 3") {
  TempSource src(
      "dim length;\nunit m = base(length, 1);\n"
      "let x : m^2 = 0*m^2 - 1*m^2;\nprint pow(x, 1, 2) in m;\n");
  const ProcessResult r = cli("run " + quote(src.path()));
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("error[DomainError]") != std::string::npos);
}

TEST_CASE("dump-units lists codes only for the packed encoding") {
  const ProcessResult r = cli("dump-units " + sample("derived_units.udl"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("J  m^2 kg^1 s^-2  1  -188\n") != std::string::npos);
  const ProcessResult v =
      cli("dump-units --encoding vector " + sample("derived_units.udl"));
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("J  m^2 kg^1 s^-2  1\n") != std::string::npos);
}

TEST_CASE("bench reports equal outputs and zero fast bookkeeping") {
  const ProcessResult r =
      cli("bench --iterations 2000 " + sample("free_fall.udl"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("iterations  2000\n") != std::string::npos);
  CHECK(r.out.find("dim_ops 22000\n") != std::string::npos);
  CHECK(r.out.find("dim_ops 0\n") != std::string::npos);
  CHECK(r.out.find("outputs     equal\n") != std::string::npos);
}

TEST_CASE("single precision flag") {
  const ProcessResult r =
      cli("run --precision single " + sample("free_fall.udl"));
  CHECK(r.exit_code == 0);
  REQUIRE(r.out.rfind("t = ", 0) == 0);
  const double t = std::stod(r.out.substr(4));
  CHECK(t == static_cast<double>(static_cast<float>(t)));
}

TEST_CASE("--version") {
  const ProcessResult r = cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.0.0") != std::string::npos);
}
