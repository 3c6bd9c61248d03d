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

// dimcheck: check, run, bench and inspect UDL programs.
//
// Exit codes: 0 ok, 1 diagnostics, 2 usage or I/O error, 3 runtime error.

#include <cstdint>
#include <cstdio>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dimcheck/dimcheck.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct Flags {
  std::string encoding = "packed";
  std::int64_t radix = 10;
  std::uint32_t axes = 7;
  bool compat = false;
  bool fast = false;
  std::string precision = "double";
  std::uint64_t iterations = 1000000;
  std::vector<std::string> files;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--encoding", f.encoding, "Dimension encoding")
      ->check(CLI::IsMember({"vector", "packed"}));
  sub->add_option("--radix", f.radix, "Radix of the packed encoding")
      ->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 31));
  sub->add_option("--axes", f.axes, "Number of base axes the encoding holds")
      ->check(CLI::Range(1u, 64u));
  sub->add_flag("--compat", f.compat,
                "Truncating packed arithmetic with silent aliasing");
  sub->add_option("--precision", f.precision,
                  "Precision of literals, units and unsuffixed lets")
      ->check(CLI::IsMember({"single", "double"}));
}

// Owns a dc_program for the scope of one command.
class Program {
 public:
  Program() = default;
  Program(const Program&) = delete;
  Program& operator=(const Program&) = delete;
  Program(Program&& other) noexcept
      : handle_(other.handle_), status_(other.status_),
        error_(std::move(other.error_)) {
    other.handle_ = nullptr;
  }
  Program& operator=(Program&& other) noexcept {
    std::swap(handle_, other.handle_);
    status_ = other.status_;
    error_ = std::move(other.error_);
    return *this;
  }
  ~Program() { dc_program_free(handle_); }

  static Program load(const std::string& path, const dc_options& opts) {
    Program p;
    p.status_ = dc_program_from_file(path.c_str(), &opts, &p.handle_);
    if (p.handle_ == nullptr) p.error_ = dc_last_error();
    return p;
  }

  dc_program* get() const { return handle_; }
  dc_status status() const { return status_; }
  const std::string& error() const { return error_; }

  void print_diagnostics() const {
    for (std::size_t i = 0; i < dc_program_diagnostic_count(handle_); ++i) {
      std::fprintf(stderr, "%s\n", dc_program_diagnostic(handle_, i));
    }
  }

 private:
  dc_program* handle_ = nullptr;
  dc_status status_ = DC_OK;
  std::string error_;
};

bool make_options(const Flags& f, dc_options& opts) {
  dc_options_init(&opts);
  opts.encoding = f.encoding == "vector" ? DC_ENCODING_VECTOR
                                         : DC_ENCODING_PACKED;
  opts.radix = f.radix;
  opts.axes = f.axes;
  opts.compat = f.compat ? 1 : 0;
  opts.precision = f.precision == "single" ? DC_PRECISION_SINGLE
                                           : DC_PRECISION_DOUBLE;
  if (f.compat && f.encoding == "vector") {
    std::fprintf(stderr, "dimcheck: --compat requires --encoding packed\n");
    return false;
  }
  return true;
}

// Loads one file and reports load-level failures. Returns nonzero exit code
// on failure.
int load_clean(const std::string& path, const dc_options& opts, Program& out) {
  out = Program::load(path, opts);
  if (out.get() == nullptr) {
    std::fprintf(stderr, "dimcheck: %s\n", out.error().c_str());
    return kExitUsage;
  }
  if (out.status() == DC_DIAGNOSTICS) {
    out.print_diagnostics();
    return kExitDiagnostics;
  }
  return kExitOk;
}

int cmd_check(const Flags& f, const dc_options& opts) {
  std::vector<std::future<Program>> jobs;
  jobs.reserve(f.files.size());
  for (const std::string& path : f.files) {
    jobs.push_back(std::async(std::launch::async, [path, opts] {
      return Program::load(path, opts);
    }));
  }
  int exit_code = kExitOk;
  for (auto& job : jobs) {
    const Program p = job.get();
    if (p.get() == nullptr) {
      std::fprintf(stderr, "dimcheck: %s\n", p.error().c_str());
      exit_code = kExitUsage;
    } else if (p.status() == DC_DIAGNOSTICS) {
      p.print_diagnostics();
      if (exit_code == kExitOk) exit_code = kExitDiagnostics;
    }
  }
  return exit_code;
}

int cmd_run(const Flags& f, const dc_options& opts) {
  Program p;
  if (const int rc = load_clean(f.files.front(), opts, p); rc != kExitOk) {
    return rc;
  }
  char* text = nullptr;
  const dc_status s = dc_program_run(
      p.get(), f.fast ? DC_EXEC_FAST : DC_EXEC_CHECKED, &text, nullptr);
  if (s != DC_OK) {
    std::fprintf(stderr, "%s\n", dc_last_error());
    return s == DC_RUNTIME_ERROR ? kExitRuntime : kExitUsage;
  }
  std::fputs(text, stdout);
  dc_string_free(text);
  return kExitOk;
}

int cmd_bench(const Flags& f, const dc_options& opts) {
  if (f.iterations == 0) {
    std::fprintf(stderr, "dimcheck: --iterations must be positive\n");
    return kExitUsage;
  }
  Program p;
  if (const int rc = load_clean(f.files.front(), opts, p); rc != kExitOk) {
    return rc;
  }
  dc_bench_report r{};
  const dc_status s = dc_program_bench(p.get(), f.iterations, &r);
  if (s != DC_OK) {
    std::fprintf(stderr, "%s\n", dc_last_error());
    return s == DC_RUNTIME_ERROR ? kExitRuntime : kExitUsage;
  }
  std::printf("iterations  %llu\n",
              static_cast<unsigned long long>(r.iterations));
  std::printf("checked     %.6f s  dim_ops %llu\n", r.checked_seconds,
              static_cast<unsigned long long>(r.checked_dim_ops));
  std::printf("fast        %.6f s  dim_ops %llu\n", r.fast_seconds,
              static_cast<unsigned long long>(r.fast_dim_ops));
  if (r.fast_seconds > 0.0) {
    std::printf("speedup     %.2fx\n", r.checked_seconds / r.fast_seconds);
  }
  std::printf("outputs     %s\n", r.outputs_equal ? "equal" : "DIFFER");
  return r.outputs_equal && r.fast_dim_ops == 0 ? kExitOk : kExitRuntime;
}

int cmd_dump_units(const Flags& f, const dc_options& opts) {
  Program p;
  if (const int rc = load_clean(f.files.front(), opts, p); rc != kExitOk) {
    return rc;
  }
  char* text = nullptr;
  if (dc_program_dump_units(p.get(), &text) != DC_OK) {
    std::fprintf(stderr, "dimcheck: %s\n", dc_last_error());
    return kExitUsage;
  }
  std::fputs(text, stdout);
  dc_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension checker and evaluator for UDL programs"};
  app.set_version_flag("--version", dc_version());
  app.require_subcommand(1);

  Flags flags;
  CLI::App* check = app.add_subcommand("check", "Check files for dimensional consistency");
  add_common(check, flags);
  check->add_option("files", flags.files, "UDL source files")->required();

  CLI::App* run = app.add_subcommand("run", "Check, then evaluate and print");
  add_common(run, flags);
  run->add_flag("--fast", flags.fast, "Evaluate on bare numbers after checking");
  run->add_option("file", flags.files, "UDL source file")->required()->expected(1);

  CLI::App* bench = app.add_subcommand("bench", "Time checked vs fast evaluation");
  add_common(bench, flags);
  bench->add_option("--iterations", flags.iterations, "Evaluations per mode");
  bench->add_option("file", flags.files, "UDL source file")->required()->expected(1);

  CLI::App* dump = app.add_subcommand("dump-units", "List units and constants");
  add_common(dump, flags);
  dump->add_option("file", flags.files, "UDL source file")->required()->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  dc_options opts;
  if (!make_options(flags, opts)) return kExitUsage;

  if (check->parsed()) return cmd_check(flags, opts);
  if (run->parsed()) return cmd_run(flags, opts);
  if (bench->parsed()) return cmd_bench(flags, opts);
  return cmd_dump_units(flags, opts);
}
