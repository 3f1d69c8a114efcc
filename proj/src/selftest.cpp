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

#include "msws/selftest.hpp"

#include <algorithm>
#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <random>

#include "msws/core.hpp"
#include "msws/seeding.hpp"
#include "msws/stats.hpp"
#include "msws/widths.hpp"

namespace msws {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016" PRIx64, v);
  return buf;
}

std::string fmt_double(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Odd 2k-bit increments with roughly half their bits set.
std::uint64_t balanced_odd(std::mt19937_64& rng, const GenParams& p) {
  const unsigned bits = p.word_bits();
  for (;;) {
    const std::uint64_t s = (rng() & p.word_mask()) | 1;
    const auto ones = static_cast<unsigned>(std::popcount(s));
    if (ones * 8 >= bits * 3 && ones * 8 <= bits * 5) return s;
  }
}

CheckResult check_golden(bool corrupt) {
  auto expected = kSparseSeedGolden;
  if (corrupt) expected[5] ^= 1;
  MswsState g(0, 0, kSparseSeed);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const std::uint32_t got = g();
    if (got != expected[i]) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "output %zu: got %08" PRIx32
                    ", expected %08" PRIx32, i + 1, got, expected[i]);
      return {"golden-sparse-seed", false, buf};
    }
  }
  return {"golden-sparse-seed", true, "13 outputs match"};
}

CheckResult check_square_rotate() {
  const std::uint64_t r = square_rotate(0xE3296D171EC4A36F);
  const bool ok = r == 0xAE4E8A2131C2914A &&
                  static_cast<std::uint32_t>(r) == 0x31C2914A;
  return {"square-rotate-example", ok, hex64(r)};
}

CheckResult check_double() {
  MswsState g(0, 0, kSparseSeed);
  const std::uint64_t a = msws64_double(g);
  const std::uint64_t b = msws64_double(g);
  const bool ok = a == 0x0000000100000004 && b == 0x0000001b00000406 &&
                  g.w() == 4 * kSparseSeed;
  return {"msws64-double", ok, hex64(a) + " " + hex64(b)};
}

CheckResult check_weyl_period() {
  const GenParams p(8);
  std::mt19937_64 rng(0x5745594cULL);
  int passed = 0;
  for (int i = 0; i < 100; ++i) {
    if (weyl_full_period_check((rng() & p.word_mask()) | 1, p)) ++passed;
  }
  return {"weyl-period-16bit", passed == 100,
          std::to_string(passed) + "/100 odd increments full period"};
}

CheckResult check_xw_pairs() {
  const GenParams p(8);
  std::mt19937_64 rng(0x58574349ULL);
  int passed = 0;
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t s = balanced_odd(rng, p);
    if (x_cycle_check(GMswsState(p, s, s, s), std::uint64_t{1} << 16)) {
      ++passed;
    }
  }
  return {"xw-pairs-16bit", passed == 20,
          std::to_string(passed) + "/20 trajectories without repeated (x,w)"};
}

CheckResult check_cross_width() {
  const GenParams p(32);
  std::mt19937_64 rng(0x43524f53ULL);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t x = rng(), w = rng(), s = rng() | 1;
    MswsState a(x, w, s);
    GMswsState b(p, x, w, s);
    for (int j = 0; j < 4; ++j) {
      if (a() != b()) return {"cross-width-k32", false, "mismatch at " + hex64(x)};
    }
  }
  return {"cross-width-k32", true, "10000 random states agree"};
}

CheckResult check_counts() {
  const ConstantCounts c = count_valid_constants();
  const bool ok = c.upper == 518918400 && c.lower == 380540160 &&
                  c.total == 197469290962944000;
  return {"seed-constant-counts", ok,
          std::to_string(c.upper) + " " + std::to_string(c.lower) + " " +
              std::to_string(c.total)};
}

CheckResult check_seed_bijection() {
  if (decode_constant(0).value() != 0x0123456702345671) {
    return {"seed-bijection", false, "rank 0 decodes to " +
                                         hex64(decode_constant(0).value())};
  }
  std::mt19937_64 rng(0x53454544ULL);
  std::uniform_int_distribution<std::uint64_t> rank(0, kTotalConstants - 1);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t r = rank(rng);
    if (encode_constant(decode_constant(r)) != r) {
      return {"seed-bijection", false, "rank " + std::to_string(r)};
    }
  }
  return {"seed-bijection", true, "10000 ranks round-trip"};
}

std::vector<std::uint32_t> sample_stream(std::uint64_t n, std::size_t count) {
  MswsState g = new_stream(StreamIndex(n));
  std::vector<std::uint32_t> v(count);
  for (auto& e : v) e = g();
  return v;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(check_golden(options.corrupt_golden));
  out.push_back(check_square_rotate());
  out.push_back(check_double());
  out.push_back(check_weyl_period());
  out.push_back(check_xw_pairs());
  out.push_back(check_cross_width());
  out.push_back(check_counts());
  out.push_back(check_seed_bijection());

  const auto samples = sample_stream(0, std::size_t{1} << 22);
  const auto chi = stats::chi_square_uniformity(samples, 256);
  out.push_back({"chi-square-uniformity", stats::in_band(chi.p_value),
                 "p=" + fmt_double("%.4f", chi.p_value)});
  const auto z = stats::bit_frequency(samples);
  double worst = 0;
  for (double v : z) worst = std::max(worst, std::fabs(v));
  out.push_back({"bit-frequency", worst < 4.9,
                 "max |z|=" + fmt_double("%.3f", worst)});
  const auto serial = stats::pair_serial_test(samples);
  out.push_back({"pair-serial", stats::in_band(serial.p_value),
                 "p=" + fmt_double("%.4f", serial.p_value)});
  return out;
}

}  // namespace msws
