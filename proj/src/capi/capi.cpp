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

#include "dimcheck/dimcheck.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimcheck/format.hpp"
#include "dimcheck/lang/checker.hpp"
#include "dimcheck/lang/eval.hpp"

struct dc_program {
  std::string file;
  dimcheck::lang::CheckResult result;
  std::vector<std::string> formatted;
  std::vector<std::string> codes;
};

namespace {

thread_local std::string g_last_error;

dc_status fail(dc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

dc_status status_of(const dimcheck::Error& err) {
  switch (err.code()) {
    case dimcheck::ErrorCode::CapacityOverflow: return DC_CAPACITY_OVERFLOW;
    case dimcheck::ErrorCode::NonIntegerExponent:
      return DC_NON_INTEGER_EXPONENT;
    case dimcheck::ErrorCode::DomainError: return DC_RUNTIME_ERROR;
    default: return DC_INVALID_ARGUMENT;
  }
}

// Runs `body` and maps exceptions onto dc_status.
template <typename F>
dc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const dimcheck::Error& err) {
    return fail(status_of(err), err.what());
  } catch (const std::invalid_argument& err) {
    return fail(DC_INVALID_ARGUMENT, err.what());
  } catch (const std::bad_alloc&) {
    return fail(DC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& err) {
    return fail(DC_INTERNAL_ERROR, err.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

dimcheck::lang::CheckOptions to_check_options(const dc_options* opts,
                                              const char* file) {
  dc_options defaults;
  dc_options_init(&defaults);
  const dc_options& o = opts != nullptr ? *opts : defaults;
  if (o.encoding != DC_ENCODING_PACKED && o.encoding != DC_ENCODING_VECTOR) {
    throw std::invalid_argument("unknown encoding");
  }
  if (o.precision != DC_PRECISION_DOUBLE && o.precision != DC_PRECISION_SINGLE) {
    throw std::invalid_argument("unknown precision");
  }
  dimcheck::lang::CheckOptions out;
  out.cfg.axis_count = o.axes;
  out.cfg.radix = o.radix;
  out.cfg.strict = o.compat == 0;
  out.encoding = o.encoding == DC_ENCODING_VECTOR
                     ? dimcheck::Encoding::Vector
                     : dimcheck::Encoding::Packed;
  if (!out.cfg.strict && out.encoding != dimcheck::Encoding::Packed) {
    throw std::invalid_argument("compat mode requires the packed encoding");
  }
  if (out.encoding == dimcheck::Encoding::Packed) out.cfg.validate();
  out.default_prec = o.precision == DC_PRECISION_SINGLE
                         ? dimcheck::Precision::Single
                         : dimcheck::Precision::Double;
  out.file = file != nullptr ? file : "<input>";
  return out;
}

dc_status make_program(const char* name, std::string source,
                       const dc_options* opts, dc_program** out) {
  auto check_opts = to_check_options(opts, name);
  auto program = std::make_unique<dc_program>();
  program->file = check_opts.file;
  program->result = dimcheck::lang::check_source(std::move(source), check_opts);
  for (const auto& d : program->result.diagnostics) {
    program->formatted.push_back(dimcheck::lang::format(d));
    program->codes.emplace_back(dimcheck::to_string(d.code));
  }
  const bool clean = program->result.ok();
  *out = program.release();
  if (!clean) {
    return fail(DC_DIAGNOSTICS, (*out)->formatted.front());
  }
  return DC_OK;
}

dc_status require_clean(const dc_program* program) {
  if (program == nullptr) return fail(DC_INVALID_ARGUMENT, "null program");
  if (!program->result.ok()) {
    return fail(DC_DIAGNOSTICS, program->formatted.front());
  }
  return DC_OK;
}

std::string runtime_message(const dc_program* program,
                            const dimcheck::Error& err) {
  dimcheck::lang::Diagnostic d{program->file, err.pos().value_or(dimcheck::SourcePos{}),
                               err.code(), err.what()};
  return dimcheck::lang::format(d);
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "1.0.0"; }

const char* dc_last_error(void) { return g_last_error.c_str(); }

void dc_string_free(char* s) { std::free(s); }

void dc_options_init(dc_options* opts) {
  if (opts == nullptr) return;
  opts->encoding = DC_ENCODING_PACKED;
  opts->radix = 10;
  opts->axes = 7;
  opts->compat = 0;
  opts->precision = DC_PRECISION_DOUBLE;
}

dc_status dc_program_from_file(const char* path, const dc_options* opts,
                               dc_program** out) {
  if (out == nullptr || path == nullptr) {
    return fail(DC_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(DC_IO_ERROR, std::string("cannot read '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
      return fail(DC_IO_ERROR, std::string("error reading '") + path + "'");
    }
    return make_program(path, buf.str(), opts, out);
  });
}

dc_status dc_program_from_source(const char* name, const char* source,
                                 size_t length, const dc_options* opts,
                                 dc_program** out) {
  if (out == nullptr || (source == nullptr && length != 0)) {
    return fail(DC_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    return make_program(name, std::string(source != nullptr ? source : "",
                                          length),
                        opts, out);
  });
}

void dc_program_free(dc_program* program) { delete program; }

size_t dc_program_diagnostic_count(const dc_program* program) {
  return program != nullptr ? program->formatted.size() : 0;
}

const char* dc_program_diagnostic(const dc_program* program, size_t index) {
  if (program == nullptr || index >= program->formatted.size()) return nullptr;
  return program->formatted[index].c_str();
}

dc_status dc_program_diagnostic_info(const dc_program* program, size_t index,
                                     dc_diagnostic* out) {
  if (program == nullptr || out == nullptr ||
      index >= program->formatted.size()) {
    return fail(DC_INVALID_ARGUMENT, "diagnostic index out of range");
  }
  const auto& d = program->result.diagnostics[index];
  out->file = d.file.c_str();
  out->line = d.pos.line;
  out->col = d.pos.col;
  out->code = program->codes[index].c_str();
  out->message = d.message.c_str();
  return DC_OK;
}

dc_status dc_program_run(const dc_program* program, int exec_mode,
                         char** out_text, uint64_t* dim_ops) {
  if (out_text == nullptr) return fail(DC_INVALID_ARGUMENT, "null argument");
  *out_text = nullptr;
  if (const dc_status s = require_clean(program); s != DC_OK) return s;
  return guarded([&] {
    using dimcheck::lang::ExecMode;
    dimcheck::lang::EvalStats stats;
    std::vector<dimcheck::lang::OutputRecord> records;
    try {
      records = dimcheck::lang::evaluate(
          program->result.program,
          exec_mode == DC_EXEC_FAST ? ExecMode::Fast : ExecMode::Checked,
          &stats);
    } catch (const dimcheck::Error& err) {
      return fail(DC_RUNTIME_ERROR, runtime_message(program, err));
    }
    std::string text;
    for (const auto& r : records) text += dimcheck::lang::format_output(r) + "\n";
    *out_text = duplicate(text);
    if (dim_ops != nullptr) *dim_ops = stats.dim_ops;
    return DC_OK;
  });
}

dc_status dc_program_bench(const dc_program* program, uint64_t iterations,
                           dc_bench_report* out) {
  if (out == nullptr) return fail(DC_INVALID_ARGUMENT, "null argument");
  if (iterations == 0) {
    return fail(DC_INVALID_ARGUMENT, "iterations must be positive");
  }
  if (const dc_status s = require_clean(program); s != DC_OK) return s;
  return guarded([&] {
    dimcheck::lang::BenchReport r;
    try {
      r = dimcheck::lang::bench(program->result.program, iterations);
    } catch (const dimcheck::Error& err) {
      return fail(DC_RUNTIME_ERROR, runtime_message(program, err));
    }
    out->iterations = r.iterations;
    out->checked_seconds = r.checked_seconds;
    out->fast_seconds = r.fast_seconds;
    out->checked_dim_ops = r.checked_dim_ops;
    out->fast_dim_ops = r.fast_dim_ops;
    out->outputs_equal = r.outputs_equal ? 1 : 0;
    return DC_OK;
  });
}

dc_status dc_program_dump_units(const dc_program* program, char** out_text) {
  if (out_text == nullptr) return fail(DC_INVALID_ARGUMENT, "null argument");
  *out_text = nullptr;
  if (const dc_status s = require_clean(program); s != DC_OK) return s;
  return guarded([&] {
    std::string text;
    for (const auto& row : dimcheck::dump_units(program->result.program.units)) {
      text += row + "\n";
    }
    *out_text = duplicate(text);
    return DC_OK;
  });
}

dc_status dc_pack(const int32_t* exps, uint32_t axes, int64_t radix, int strict,
                  int64_t* out_code) {
  if (exps == nullptr || out_code == nullptr) {
    return fail(DC_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const dimcheck::EncodingConfig cfg{axes, radix, strict != 0};
    cfg.validate();
    const dimcheck::DimVector v(std::vector<std::int32_t>(exps, exps + axes));
    *out_code = dimcheck::pack(v, cfg).code;
    return DC_OK;
  });
}

dc_status dc_unpack(int64_t code, uint32_t axes, int64_t radix,
                    int32_t* out_exps) {
  if (out_exps == nullptr) return fail(DC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const dimcheck::EncodingConfig cfg{axes, radix, true};
    cfg.validate();
    const dimcheck::DimVector v = dimcheck::unpack({code}, cfg);
    for (uint32_t i = 0; i < axes; ++i) out_exps[i] = v[i];
    return DC_OK;
  });
}

}  // extern "C"
