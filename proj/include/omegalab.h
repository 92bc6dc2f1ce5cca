// Copyright 2026 The omegalab Authors
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

#ifndef OMEGALAB_H_
#define OMEGALAB_H_

/* C interface to omegalab. Every call returns an ol_status; on failure the
 * message is available from ol_last_error() on the calling thread. Strings
 * handed back through char** parameters are owned by the caller and must be
 * released with ol_string_free(). Bit strings use ASCII '0'/'1', with "^"
 * for the empty string. Computer index 0 names the universal computer of a
 * registry; 1.. name its entries. */

#include <stddef.h>
#include <stdint.h>

#if defined(OMEGALAB_BUILDING)
#define OL_API __attribute__((visibility("default")))
#else
#define OL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ol_status {
  OL_OK = 0,
  OL_INVALID_ARGUMENT = 1,
  OL_OVERFLOW = 2,
  OL_PARSE_ERROR = 3,
  OL_IO_ERROR = 4,
  OL_PREFIX_VIOLATION = 5,
  OL_NOT_CLOSED_WORLD = 6,
  OL_NO_HALTING_INPUT = 7,
  OL_KRAFT_EXCEEDED = 8,
  OL_ORACLE_BOUND_TOO_SMALL = 9,
  OL_INVALID_PREFIX = 10,
  OL_INCONSISTENT_ORACLE = 11,
  OL_OUT_OF_HORIZON = 12,
  OL_BUDGET_EXHAUSTED = 13,
  OL_NOT_FOUND = 14,
  OL_INTERNAL = 99
} ol_status;

typedef enum ol_outcome {
  OL_HALTED = 0,
  OL_HALTED_EARLY = 1,
  OL_NEEDS_INPUT = 2,
  OL_OUT_OF_BUDGET = 3,
  OL_DIVERGED = 4
} ol_outcome;

typedef struct ol_registry ol_registry;

typedef struct ol_run_result {
  ol_outcome outcome;
  char* output;
  uint64_t consumed;
  uint64_t steps;
} ol_run_result;

/* Artifacts of a reduction run. Unused fields are NULL. */
typedef struct ol_reduction_result {
  char* result;     /* domain list, bit string or "1"/"0" */
  char* transcript; /* one consultation per line */
  char* report;     /* derived constants as "key=value" lines */
} ol_reduction_result;

OL_API const char* ol_status_name(ol_status status);
OL_API const char* ol_last_error(void);
OL_API void ol_string_free(char* s);
OL_API void ol_run_result_free(ol_run_result* r);
OL_API void ol_reduction_result_free(ol_reduction_result* r);

/* Registry */
OL_API ol_status ol_registry_new(ol_registry** out);
OL_API ol_status ol_registry_load(const char* manifest_path, ol_registry** out);
OL_API void ol_registry_free(ol_registry* reg);
OL_API size_t ol_registry_size(const ol_registry* reg);
OL_API ol_status ol_registry_add_table(ol_registry* reg, const char* table_path, uint32_t* index);
OL_API ol_status ol_registry_add_program(ol_registry* reg, const char* program_bits, uint32_t* index);
/* Lines "<index> <kind> <gamma-length> <description>". */
OL_API ol_status ol_registry_list(const ol_registry* reg, char** out);

/* Virtual machine */
OL_API ol_status ol_vm_run(const char* program_bits, const char* input, uint64_t budget,
                           ol_run_result* out);
OL_API ol_status ol_vm_parse(const char* program_bits, char** listing);
OL_API ol_status ol_vm_assemble(const char* source, char** program_bits);
OL_API ol_status ol_computer_run(const ol_registry* reg, uint32_t computer, const char* input,
                                 uint64_t budget, ol_run_result* out);

/* Enumeration */
OL_API ol_status ol_explore(const ol_registry* reg, uint32_t computer, uint64_t budget,
                            uint64_t depth, char** snapshot);
OL_API ol_status ol_omega(const ol_registry* reg, uint32_t computer, uint64_t budget,
                          uint64_t depth, char** value, int* exact);
OL_API ol_status ol_running_time(const ol_registry* reg, uint32_t computer, uint64_t n,
                                 uint64_t budget, uint64_t* steps, int* exact);
OL_API ol_status ol_domain_from_time(const ol_registry* reg, uint32_t computer, uint64_t n,
                                     uint64_t time_bound, char** domain);

/* Kraft-Chaitin. shift < 0 selects the smallest admissible shift. */
OL_API ol_status ol_kc_alloc(const char* length_function, const char* base_dir, uint64_t count,
                             int64_t shift, char** log, uint64_t* used_shift);
OL_API ol_status ol_kc_sum(const char* length_function, const char* base_dir, uint64_t count,
                           char** value);

/* Reductions. A NULL prefix or oracle path asks the library to derive the
 * missing oracle from the closed-world registry itself. */
OL_API ol_status ol_reduce_halting(const ol_registry* reg, uint32_t computer, uint64_t n,
                                 const char* prefix, uint64_t budget_cap,
                                 ol_reduction_result* out);
OL_API ol_status ol_reduce_indexed(const ol_registry* reg, uint32_t target, uint64_t n,
                                 const char* prefix, uint64_t budget_cap,
                                 ol_reduction_result* out);
OL_API ol_status ol_reduce_bounded_loss(const ol_registry* reg, uint32_t target, uint64_t n,
                                 const char* length_function, uint64_t d1, const char* prefix,
                                 uint64_t budget_cap, ol_reduction_result* out);
OL_API ol_status ol_reduce_weaksim(const ol_registry* reg, uint32_t computer, const char* input,
                                   const char* oracle_path, uint64_t oracle_bound,
                                   uint64_t budget_cap, ol_reduction_result* out);
OL_API ol_status ol_reduce_occ(const ol_registry* reg, uint32_t computer, uint64_t n,
                               const char* oracle_path, uint64_t oracle_bound,
                               uint64_t budget_cap, ol_reduction_result* out);
/* alpha: "p/q", a decimal, "n/2^k", or "omega" for the Omega of reg's
 * universal computer (reg may be NULL otherwise). */
OL_API ol_status ol_reduce_ire(const ol_registry* reg, const char* alpha,
                               const char* length_function, uint64_t horizon, int64_t shift,
                               uint64_t n, const char* oracle_path, uint64_t budget_cap,
                               ol_reduction_result* out);
/* numerals: comma-separated values of the numeral table, NULL for default. */
OL_API ol_status ol_reduce_iire(const ol_registry* reg, const char* alpha, const char* numerals,
                                const char* length_function, uint64_t n,
                                const char* oracle_path, uint64_t budget_cap,
                                ol_reduction_result* out);

#ifdef __cplusplus
}
#endif

#endif /* OMEGALAB_H_ */
