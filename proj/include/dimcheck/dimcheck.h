/*
 * Copyright 2026 The dimcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libdimcheck.
 *
 * A dc_program is an opaque handle holding one parsed and checked UDL
 * source together with its diagnostics. Every function returning dc_status
 * reports DC_OK on success; on failure a human-readable message for the
 * calling thread is available from dc_last_error(). Strings returned through
 * `char**` out-parameters are heap-allocated and must be released with
 * dc_string_free(). Handles may be used from one thread at a time; distinct
 * handles are independent.
 */

#ifndef DIMCHECK_DIMCHECK_H_
#define DIMCHECK_DIMCHECK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DIMCHECK_BUILDING)
#define DC_API __declspec(dllexport)
#else
#define DC_API __declspec(dllimport)
#endif
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* The numeric values of the first four double as CLI exit codes. */
typedef enum dc_status {
  DC_OK = 0,
  DC_DIAGNOSTICS = 1,
  DC_IO_ERROR = 2,
  DC_RUNTIME_ERROR = 3,
  DC_INVALID_ARGUMENT = 4,
  DC_CAPACITY_OVERFLOW = 5,
  DC_NON_INTEGER_EXPONENT = 6,
  DC_INTERNAL_ERROR = 7
} dc_status;

typedef enum dc_encoding {
  DC_ENCODING_PACKED = 0,
  DC_ENCODING_VECTOR = 1
} dc_encoding;

typedef enum dc_precision {
  DC_PRECISION_DOUBLE = 0,
  DC_PRECISION_SINGLE = 1
} dc_precision;

typedef enum dc_exec_mode {
  DC_EXEC_CHECKED = 0,
  DC_EXEC_FAST = 1
} dc_exec_mode;

typedef struct dc_options {
  int encoding;  /* dc_encoding */
  int64_t radix; /* >= 3 */
  uint32_t axes; /* axis capacity, >= 1 */
  int compat;    /* nonzero: truncating packed arithmetic; requires packed */
  int precision; /* dc_precision for literals, units and unsuffixed lets */
} dc_options;

typedef struct dc_diagnostic {
  const char* file;
  uint32_t line;
  uint32_t col;
  const char* code; /* e.g. "DimensionMismatch" */
  const char* message;
} dc_diagnostic;

typedef struct dc_bench_report {
  uint64_t iterations;
  double checked_seconds;
  double fast_seconds;
  uint64_t checked_dim_ops;
  uint64_t fast_dim_ops;
  int outputs_equal;
} dc_bench_report;

typedef struct dc_program dc_program;

DC_API const char* dc_version(void);
DC_API const char* dc_last_error(void);
DC_API void dc_string_free(char* s);

/* Packed, radix 10, 7 axes, strict, double. */
DC_API void dc_options_init(dc_options* opts);

/* Reads, parses and checks a file. On DC_OK or DC_DIAGNOSTICS *out receives
 * a handle (inspect its diagnostics); on any other status *out is NULL. */
DC_API dc_status dc_program_from_file(const char* path, const dc_options* opts,
                                      dc_program** out);
DC_API dc_status dc_program_from_source(const char* name, const char* source,
                                        size_t length, const dc_options* opts,
                                        dc_program** out);
DC_API void dc_program_free(dc_program* program);

DC_API size_t dc_program_diagnostic_count(const dc_program* program);
/* Formatted `<file>:<line>:<col>: error[<code>]: <message>`; owned by the
 * handle. NULL when index is out of range. */
DC_API const char* dc_program_diagnostic(const dc_program* program,
                                         size_t index);
DC_API dc_status dc_program_diagnostic_info(const dc_program* program,
                                            size_t index, dc_diagnostic* out);

/* Evaluates a clean program. *out_text receives one output line per print
 * statement, each terminated by '\n'. dim_ops may be NULL. */
DC_API dc_status dc_program_run(const dc_program* program, int exec_mode,
                                char** out_text, uint64_t* dim_ops);
DC_API dc_status dc_program_bench(const dc_program* program,
                                  uint64_t iterations, dc_bench_report* out);
/* One `symbol  dim  factor[  code]` row per unit and constant. */
DC_API dc_status dc_program_dump_units(const dc_program* program,
                                       char** out_text);

/* Dimension codec. exps has `axes` entries. strict: range-checked balanced
 * digits; otherwise raw place-value arithmetic. */
DC_API dc_status dc_pack(const int32_t* exps, uint32_t axes, int64_t radix,
                         int strict, int64_t* out_code);
DC_API dc_status dc_unpack(int64_t code, uint32_t axes, int64_t radix,
                           int32_t* out_exps);

#ifdef __cplusplus
}
#endif

#endif /* DIMCHECK_DIMCHECK_H_ */
