/*
 * Copyright 2026 The msws Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libmsws.
 *
 * Generators are opaque handles created by msws_*_create and released with
 * the matching msws_*_destroy. Fallible calls return an msws_status; on
 * failure msws_last_error() describes the most recent error on the calling
 * thread. Handles carry no locks: use one per thread.
 *
 * Byte streams are little-endian per 32-bit output word.
 */

#ifndef MSWS_MSWS_H_
#define MSWS_MSWS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MSWS_BUILDING_LIBRARY)
#    define MSWS_API __declspec(dllexport)
#  else
#    define MSWS_API __declspec(dllimport)
#  endif
#else
#  define MSWS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msws_status {
  MSWS_OK = 0,
  MSWS_E_INVALID_ARGUMENT = 1,
  MSWS_E_OUT_OF_RANGE = 2,
  MSWS_E_PARSE = 3,
  MSWS_E_IO = 4,
  MSWS_E_INFEASIBLE = 5,
  MSWS_E_NO_MEMORY = 6,
  MSWS_E_INTERNAL = 7
} msws_status;

MSWS_API const char* msws_status_name(msws_status status);

/* Message for the last failed call on this thread; "" if none. */
MSWS_API const char* msws_last_error(void);

/* ---- generator ---------------------------------------------------------- */

typedef struct msws_gen msws_gen;

/* Stream n: x = w = s = msws_init_rand_digits(n). */
MSWS_API msws_status msws_gen_create_stream(uint64_t n, msws_gen** out);

/* Explicit state; s must be odd. */
MSWS_API msws_status msws_gen_create_state(uint64_t x, uint64_t w, uint64_t s,
                                           msws_gen** out);

MSWS_API msws_status msws_gen_clone(const msws_gen* gen, msws_gen** out);

MSWS_API void msws_gen_destroy(msws_gen* gen);

MSWS_API void msws_gen_get_state(const msws_gen* gen, uint64_t* x,
                                 uint64_t* w, uint64_t* s);

MSWS_API uint32_t msws_gen_next32(msws_gen* gen);

/* Two 32-bit outputs, the first in the high half. */
MSWS_API uint64_t msws_gen_next64(msws_gen* gen);

/* ceil(n / 4) outputs, little-endian, truncated to n bytes. */
MSWS_API void msws_gen_fill_bytes(msws_gen* gen, uint8_t* buf, size_t n);

/* Paired 64-bit generator over two explicit states with distinct s. */
typedef struct msws_pair msws_pair;

MSWS_API msws_status msws_pair_create(uint64_t x1, uint64_t w1, uint64_t s1,
                                      uint64_t x2, uint64_t w2, uint64_t s2,
                                      msws_pair** out);

MSWS_API void msws_pair_destroy(msws_pair* pair);

MSWS_API uint64_t msws_pair_next64(msws_pair* pair);

MSWS_API uint64_t msws_square_rotate(uint64_t x);

/* v / 2^32, exact, in [0, 1). */
MSWS_API double msws_to_unit32(uint32_t v);

/* (v >> 11) / 2^53, exact, in [0, 1). */
MSWS_API double msws_to_unit53(uint64_t v);

/* ---- seed constants ----------------------------------------------------- */

MSWS_API void msws_count_constants(uint64_t* upper, uint64_t* lower,
                                   uint64_t* total);

/* 1 if v is a recommended Weyl increment, 0 otherwise. *reason (optional)
 * receives a static description of the first defect found, or "ok". */
MSWS_API int msws_check_constant(uint64_t v, const char** reason);

MSWS_API msws_status msws_decode_constant(uint64_t rank, uint64_t* out);

MSWS_API msws_status msws_encode_constant(uint64_t constant, uint64_t* rank);

MSWS_API uint64_t msws_scramble_index(uint64_t n);

MSWS_API msws_status msws_init_rand_digits(uint64_t n, uint64_t* out);

/* Writes the constants of streams [from, to) in C initializer form. */
MSWS_API msws_status msws_seed_file_write(const char* path, uint64_t from,
                                          uint64_t to);

/* Reads up to `capacity` constants; *count receives the number in the file.
 * Pass out = NULL to query the count only. */
MSWS_API msws_status msws_seed_file_read(const char* path, uint64_t* out,
                                         size_t capacity, size_t* count);

/* ---- self test ---------------------------------------------------------- */

#define MSWS_SELFTEST_CORRUPT_GOLDEN 0x1u

typedef void (*msws_check_fn)(const char* name, int passed,
                              const char* detail, void* user);

/* Runs every check, reporting each through `report` (may be NULL).
 * *all_passed is 1 iff every check passed. */
MSWS_API msws_status msws_selftest(unsigned flags, msws_check_fn report,
                                   void* user, int* all_passed);

/* ---- reduced-width state recovery --------------------------------------- */

typedef struct msws_attack_report {
  unsigned k;
  size_t outputs;
  uint64_t hidden_x, hidden_w, hidden_s; /* state after the first output */
  uint64_t candidates_examined;
  size_t survivors;
  size_t distinct_futures; /* survivors differing in some future output */
  int recovered; /* true state among the survivors */
  double seconds;
} msws_attack_report;

/* log2 of the (2^k)^3 candidate count. */
MSWS_API unsigned msws_attack_cost_log2(unsigned k);

/* Draws a hidden k-bit-output state from `seed`, emits `outputs` outputs and
 * recovers it. 2k <= 24 unless force is nonzero. */
MSWS_API msws_status msws_attack_demo(unsigned k, size_t outputs,
                                      uint64_t seed, int force,
                                      msws_attack_report* report);

#ifdef __cplusplus
}
#endif

#endif /* MSWS_MSWS_H_ */
