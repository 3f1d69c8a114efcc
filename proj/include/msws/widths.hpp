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

// The generator at reduced word width: a 2k-bit accumulator whose rotation by
// k exposes a k-bit output. k = 32 is the full-size generator; small k makes
// whole periods enumerable, which is how the period and no-cycle properties
// are checked exhaustively.

#ifndef MSWS_WIDTHS_HPP_
#define MSWS_WIDTHS_HPP_

#include <cstdint>

namespace msws {

class GenParams {
 public:
  // k must be one of 4, 8, 12, 16, 32; throws Error(kInvalidArgument).
  explicit GenParams(unsigned k);

  unsigned half_bits() const noexcept { return k_; }
  unsigned word_bits() const noexcept { return 2 * k_; }
  std::uint64_t word_mask() const noexcept {
    return k_ == 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * k_)) - 1;
  }
  std::uint64_t half_mask() const noexcept {
    return (std::uint64_t{1} << k_) - 1;
  }

  // Rotation of a 2k-bit word by k.
  std::uint64_t rotate(std::uint64_t v) const noexcept {
    return ((v >> k_) | (v << k_)) & word_mask();
  }

  friend bool operator==(GenParams, GenParams) = default;

 private:
  unsigned k_;
};

class GMswsState {
 public:
  // Throws Error(kInvalidArgument) if s is even or any word exceeds 2k bits.
  GMswsState(GenParams params, std::uint64_t x, std::uint64_t w,
             std::uint64_t s);

  // Skips the odd-increment check; used to exhibit what goes wrong without
  // it. Words are still masked to 2k bits.
  static GMswsState unchecked(GenParams params, std::uint64_t x,
                              std::uint64_t w, std::uint64_t s) noexcept;

  GenParams params() const noexcept { return params_; }
  std::uint64_t x() const noexcept { return x_; }
  std::uint64_t w() const noexcept { return w_; }
  std::uint64_t s() const noexcept { return s_; }

  std::uint64_t operator()() noexcept {
    const std::uint64_t m = params_.word_mask();
    w_ = (w_ + s_) & m;
    x_ = params_.rotate((x_ * x_ + w_) & m);
    return x_ & params_.half_mask();
  }

  friend bool operator==(const GMswsState&, const GMswsState&) = default;

 private:
  GMswsState(GenParams params, std::uint64_t x, std::uint64_t w,
             std::uint64_t s, int) noexcept;

  GenParams params_;
  std::uint64_t x_;
  std::uint64_t w_;
  std::uint64_t s_;
};

inline std::uint64_t gmsws_step(GMswsState& state) noexcept {
  return state();
}

// Largest word width for which the exhaustive checks are accepted.
inline constexpr unsigned kMaxExhaustiveBits = 24;

// True iff i * s mod 2^(2k), i = 0 .. 2^(2k) - 1, hits every word exactly
// once, checked against a bitmap. Throws Error(kInvalidArgument) for even s
// and Error(kInfeasible) when 2k > kMaxExhaustiveBits.
bool weyl_full_period_check(std::uint64_t s, GenParams params);

// Steps until w = i * s returns to 0. Works for any s, so it also shows the
// shortened period of an even increment.
std::uint64_t weyl_period(std::uint64_t s, GenParams params);

// True iff the (x, w) pairs after each of the first `steps` iterations are
// pairwise distinct. Throws Error(kInfeasible) when 2k > kMaxExhaustiveBits
// and Error(kInvalidArgument) when steps > 2^(2k).
bool x_cycle_check(GMswsState state, std::uint64_t steps);

}  // namespace msws

#endif  // MSWS_WIDTHS_HPP_
