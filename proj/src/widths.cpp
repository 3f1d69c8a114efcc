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

#include "msws/widths.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "msws/error.hpp"

namespace msws {

GenParams::GenParams(unsigned k) : k_(k) {
  switch (k) {
    case 4:
    case 8:
    case 12:
    case 16:
    case 32:
      return;
    default:
      throw Error(Errc::kInvalidArgument,
                  "unsupported half-width k=" + std::to_string(k) +
                      " (expected 4, 8, 12, 16 or 32)");
  }
}

GMswsState::GMswsState(GenParams params, std::uint64_t x, std::uint64_t w,
                       std::uint64_t s, int) noexcept
    : params_(params),
      x_(x & params.word_mask()),
      w_(w & params.word_mask()),
      s_(s & params.word_mask()) {}

GMswsState::GMswsState(GenParams params, std::uint64_t x, std::uint64_t w,
                       std::uint64_t s)
    : GMswsState(params, x, w, s, 0) {
  const std::uint64_t m = params.word_mask();
  if ((x & ~m) != 0 || (w & ~m) != 0 || (s & ~m) != 0) {
    throw Error(Errc::kInvalidArgument,
                "state word exceeds " + std::to_string(params.word_bits()) +
                    " bits");
  }
  if ((s & 1) == 0) {
    throw Error(Errc::kInvalidArgument, "Weyl increment s must be odd");
  }
}

GMswsState GMswsState::unchecked(GenParams params, std::uint64_t x,
                                 std::uint64_t w, std::uint64_t s) noexcept {
  return GMswsState(params, x, w, s, 0);
}

namespace {

void require_exhaustive(GenParams params) {
  if (params.word_bits() > kMaxExhaustiveBits) {
    throw Error(Errc::kInfeasible,
                "exhaustive check limited to " +
                    std::to_string(kMaxExhaustiveBits) + "-bit words, got " +
                    std::to_string(params.word_bits()));
  }
}

}  // namespace

bool weyl_full_period_check(std::uint64_t s, GenParams params) {
  require_exhaustive(params);
  if ((s & 1) == 0) {
    throw Error(Errc::kInvalidArgument,
                "Weyl increment must be odd for a full period");
  }
  const std::uint64_t m = params.word_mask();
  std::vector<bool> seen(m + 1, false);
  std::uint64_t w = 0;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (seen[w]) return false;
    seen[w] = true;
    w = (w + s) & m;
  }
  return w == 0;
}

std::uint64_t weyl_period(std::uint64_t s, GenParams params) {
  const std::uint64_t m = params.word_mask();
  s &= m;
  // The sequence i * s returns to 0 after 2^(2k) / 2^v steps, 2^v being the
  // largest power of two dividing s.
  if (s == 0) return 1;
  const unsigned v = static_cast<unsigned>(__builtin_ctzll(s));
  return std::uint64_t{1} << (params.word_bits() - v);
}

bool x_cycle_check(GMswsState state, std::uint64_t steps) {
  const GenParams params = state.params();
  require_exhaustive(params);
  if (steps > params.word_mask() + 1) {
    throw Error(Errc::kInvalidArgument,
                "step count exceeds the 2^(2k) Weyl period");
  }
  const unsigned bits = params.word_bits();
  std::vector<std::uint64_t> pairs;
  pairs.reserve(steps);
  for (std::uint64_t i = 0; i < steps; ++i) {
    state();
    pairs.push_back((state.x() << bits) | state.w());
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

}  // namespace msws
