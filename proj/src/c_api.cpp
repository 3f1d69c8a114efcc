// Copyright 2026 The msws Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msws/msws.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <new>
#include <random>
#include <string>
#include <vector>

#include "msws/attack.hpp"
#include "msws/core.hpp"
#include "msws/error.hpp"
#include "msws/seeding.hpp"
#include "msws/selftest.hpp"
#include "msws/widths.hpp"

struct msws_gen {
  msws::MswsState state;
};

struct msws_pair {
  msws::Msws64PairState state;
};

namespace {

thread_local std::string last_error;

msws_status fail(msws_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
msws_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return MSWS_OK;
  } catch (const msws::Error& e) {
    switch (e.code()) {
      case msws::Errc::kInvalidArgument:
        return fail(MSWS_E_INVALID_ARGUMENT, e.what());
      case msws::Errc::kOutOfRange:
        return fail(MSWS_E_OUT_OF_RANGE, e.what());
      case msws::Errc::kParse:
        return fail(MSWS_E_PARSE, e.what());
      case msws::Errc::kIo:
        return fail(MSWS_E_IO, e.what());
      case msws::Errc::kInfeasible:
        return fail(MSWS_E_INFEASIBLE, e.what());
    }
    return fail(MSWS_E_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MSWS_E_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(MSWS_E_INTERNAL, e.what());
  } catch (...) {
    return fail(MSWS_E_INTERNAL, "unknown error");
  }
}

msws_status null_arg(const char* name) {
  return fail(MSWS_E_INVALID_ARGUMENT,
              (std::string(name) + " must not be NULL").c_str());
}

}  // namespace

extern "C" {

const char* msws_status_name(msws_status status) {
  switch (status) {
    case MSWS_OK:
      return "ok";
    case MSWS_E_INVALID_ARGUMENT:
      return "invalid argument";
    case MSWS_E_OUT_OF_RANGE:
      return "out of range";
    case MSWS_E_PARSE:
      return "parse error";
    case MSWS_E_IO:
      return "i/o error";
    case MSWS_E_INFEASIBLE:
      return "infeasible";
    case MSWS_E_NO_MEMORY:
      return "out of memory";
    case MSWS_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* msws_last_error(void) { return last_error.c_str(); }

msws_status msws_gen_create_stream(uint64_t n, msws_gen** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = new msws_gen{msws::new_stream(msws::StreamIndex(n))};
  });
}

msws_status msws_gen_create_state(uint64_t x, uint64_t w, uint64_t s,
                                  msws_gen** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new msws_gen{msws::MswsState(x, w, s)}; });
}

msws_status msws_gen_clone(const msws_gen* gen, msws_gen** out) {
  if (gen == nullptr) return null_arg("gen");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new msws_gen{gen->state}; });
}

void msws_gen_destroy(msws_gen* gen) { delete gen; }

void msws_gen_get_state(const msws_gen* gen, uint64_t* x, uint64_t* w,
                        uint64_t* s) {
  if (x) *x = gen->state.x();
  if (w) *w = gen->state.w();
  if (s) *s = gen->state.s();
}

uint32_t msws_gen_next32(msws_gen* gen) { return msws::msws_step(gen->state); }

uint64_t msws_gen_next64(msws_gen* gen) {
  return msws::msws64_double(gen->state);
}

void msws_gen_fill_bytes(msws_gen* gen, uint8_t* buf, size_t n) {
  msws::fill_bytes(gen->state, std::span<std::uint8_t>(buf, n));
}

msws_status msws_pair_create(uint64_t x1, uint64_t w1, uint64_t s1,
                             uint64_t x2, uint64_t w2, uint64_t s2,
                             msws_pair** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = new msws_pair{msws::Msws64PairState(msws::MswsState(x1, w1, s1),
                                               msws::MswsState(x2, w2, s2))};
  });
}

void msws_pair_destroy(msws_pair* pair) { delete pair; }

uint64_t msws_pair_next64(msws_pair* pair) {
  return msws::msws64_paired(pair->state);
}

uint64_t msws_square_rotate(uint64_t x) { return msws::square_rotate(x); }

double msws_to_unit32(uint32_t v) { return msws::to_unit32(v); }

double msws_to_unit53(uint64_t v) { return msws::to_unit53(v); }

void msws_count_constants(uint64_t* upper, uint64_t* lower, uint64_t* total) {
  const msws::ConstantCounts c = msws::count_valid_constants();
  if (upper) *upper = c.upper;
  if (lower) *lower = c.lower;
  if (total) *total = c.total;
}

int msws_check_constant(uint64_t v, const char** reason) {
  const msws::ConstantDefect d = msws::diagnose_constant(v);
  // describe() returns views of string literals, so data() is terminated.
  if (reason) *reason = msws::describe(d).data();
  return d == msws::ConstantDefect::kNone ? 1 : 0;
}

msws_status msws_decode_constant(uint64_t rank, uint64_t* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = msws::decode_constant(rank).value(); });
}

msws_status msws_encode_constant(uint64_t constant, uint64_t* rank) {
  if (rank == nullptr) return null_arg("rank");
  return guarded([&] { *rank = msws::encode_constant(constant); });
}

uint64_t msws_scramble_index(uint64_t n) { return msws::scramble_index(n); }

msws_status msws_init_rand_digits(uint64_t n, uint64_t* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = msws::init_rand_digits(msws::StreamIndex(n)).value();
  });
}

msws_status msws_seed_file_write(const char* path, uint64_t from,
                                 uint64_t to) {
  if (path == nullptr) return null_arg("path");
  return guarded([&] {
    if (from > to) {
      throw msws::Error(msws::Errc::kInvalidArgument,
                        "index range start exceeds its end");
    }
    std::vector<msws::StreamIndex> indices;
    indices.reserve(to - from);
    for (uint64_t n = from; n < to; ++n) indices.emplace_back(n);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw msws::Error(msws::Errc::kIo,
                        std::string("cannot open ") + path + " for writing");
    }
    msws::emit_seed_file(indices, f);
  });
}

msws_status msws_seed_file_read(const char* path, uint64_t* out,
                                size_t capacity, size_t* count) {
  if (path == nullptr) return null_arg("path");
  if (count == nullptr) return null_arg("count");
  return guarded([&] {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      throw msws::Error(msws::Errc::kIo,
                        std::string("cannot open ") + path + " for reading");
    }
    const auto values = msws::parse_seed_file(f);
    *count = values.size();
    if (out != nullptr) {
      std::copy_n(values.begin(), std::min(capacity, values.size()), out);
    }
  });
}

msws_status msws_selftest(unsigned flags, msws_check_fn report, void* user,
                          int* all_passed) {
  return guarded([&] {
    msws::SelftestOptions options;
    options.corrupt_golden = (flags & MSWS_SELFTEST_CORRUPT_GOLDEN) != 0;
    bool ok = true;
    for (const auto& c : msws::run_selftest(options)) {
      ok = ok && c.passed;
      if (report) report(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

unsigned msws_attack_cost_log2(unsigned k) { return 3 * k; }

msws_status msws_attack_demo(unsigned k, size_t outputs, uint64_t seed,
                             int force, msws_attack_report* report) {
  if (report == nullptr) return null_arg("report");
  return guarded([&] {
    const msws::GenParams params(k);
    std::mt19937_64 rng(seed);
    const uint64_t m = params.word_mask();
    msws::GMswsState g(params, rng() & m, rng() & m, (rng() & m) | 1);

    std::vector<std::uint64_t> out(outputs);
    if (!out.empty()) out[0] = g();
    const msws::RecoveredState truth{g.x(), g.w(), g.s(), outputs};
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = g();

    msws::RecoveryOptions options;
    options.force = force != 0;
    const auto t0 = std::chrono::steady_clock::now();
    const msws::RecoveryResult r = msws::recover_state(out, params, options);
    const auto t1 = std::chrono::steady_clock::now();

    *report = msws_attack_report{};
    report->k = k;
    report->outputs = outputs;
    report->hidden_x = truth.x;
    report->hidden_w = truth.w;
    report->hidden_s = truth.s;
    report->candidates_examined = r.candidates_examined;
    report->survivors = r.candidates.size();
    report->distinct_futures =
        msws::count_distinct_futures(r.candidates, params);
    report->recovered =
        std::find(r.candidates.begin(), r.candidates.end(), truth) !=
                r.candidates.end()
            ? 1
            : 0;
    report->seconds = std::chrono::duration<double>(t1 - t0).count();
  });
}

}  // extern "C"
