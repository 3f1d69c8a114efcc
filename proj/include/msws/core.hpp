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

// Middle square Weyl sequence generator.
//
// One step of the generator is
//
//   w += s;  x = rotl(x * x + w, 32);  return low32(x);
//
// with all arithmetic modulo 2^64. Only the low half of the 128-bit square is
// ever formed; after the rotation its low 32 bits are bits 32..63 of the true
// square, i.e. digits taken from the middle of it. The Weyl increment s must be
// odd so that w runs through all 2^64 values before repeating.

#ifndef MSWS_CORE_HPP_
#define MSWS_CORE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace msws {

// rotl(x * x mod 2^64, 32). Rotating a 64-bit word by 32 is its own inverse, so
// this is identical to (sq >> 32) | (sq << 32).
constexpr std::uint64_t square_rotate(std::uint64_t x) noexcept {
  return std::rotl(x * x, 32);
}

// One independent stream: squared-and-rotated accumulator x, Weyl accumulator
// w, and odd Weyl increment s. Plain value type; copy it to fork a stream.
//
// Also models UniformRandomBitGenerator, so it can drive <random>
// distributions directly.
class MswsState {
 public:
  using result_type = std::uint32_t;

  // Throws Error(kInvalidArgument) if s is even.
  MswsState(std::uint64_t x, std::uint64_t w, std::uint64_t s);

  std::uint64_t x() const noexcept { return x_; }
  std::uint64_t w() const noexcept { return w_; }
  std::uint64_t s() const noexcept { return s_; }

  std::uint32_t operator()() noexcept {
    x_ *= x_;
    x_ += (w_ += s_);
    x_ = std::rotl(x_, 32);
    return static_cast<std::uint32_t>(x_);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  friend bool operator==(const MswsState&, const MswsState&) = default;

 private:
  friend class Msws64PairState;

  std::uint64_t x_;
  std::uint64_t w_;
  std::uint64_t s_;
};

// Advances the state one iteration and returns the 32-bit output.
inline std::uint32_t msws_step(MswsState& state) noexcept { return state(); }

// Two consecutive 32-bit outputs packed as (first << 32) | second.
inline std::uint64_t msws64_double(MswsState& state) noexcept {
  std::uint64_t t = state();
  return (t << 32) | state();
}

// Two generators stepped in lockstep. The first contributes its accumulator
// after the add but before rotation; the second contributes its rotated
// accumulator; the output is their XOR.
class Msws64PairState {
 public:
  using result_type = std::uint64_t;

  // Throws Error(kInvalidArgument) if g1.s() == g2.s().
  Msws64PairState(const MswsState& g1, const MswsState& g2);

  const MswsState& g1() const noexcept { return g1_; }
  const MswsState& g2() const noexcept { return g2_; }

  std::uint64_t operator()() noexcept {
    g1_.x_ *= g1_.x_;
    const std::uint64_t xx = g1_.x_ += (g1_.w_ += g1_.s_);
    g1_.x_ = std::rotl(g1_.x_, 32);
    g2_.x_ *= g2_.x_;
    g2_.x_ += (g2_.w_ += g2_.s_);
    g2_.x_ = std::rotl(g2_.x_, 32);
    return xx ^ g2_.x_;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  MswsState g1_;
  MswsState g2_;
};

inline std::uint64_t msws64_paired(Msws64PairState& state) noexcept {
  return state();
}

// Middle square driven by an arbitrary 64-bit source in place of the Weyl
// sequence. Exactly one draw from `source` per call.
struct MsrandResult {
  std::uint64_t accumulator;
  std::uint32_t output;
};

template <typename Source>
MsrandResult msrand_step(std::uint64_t x, Source&& source) {
  x *= x;
  x += static_cast<std::uint64_t>(source());
  x = std::rotl(x, 32);
  return {x, static_cast<std::uint32_t>(x)};
}

// v / 2^32. Exact; largest value is 1 - 2^-32.
constexpr double to_unit32(std::uint32_t v) noexcept {
  return static_cast<double>(v) * 0x1p-32;
}

// Top 53 bits of v scaled by 2^-53. Exact and strictly below 1.0, unlike
// v / 2^64 which rounds the all-ones word up to 1.0.
constexpr double to_unit53(std::uint64_t v) noexcept {
  return static_cast<double>(v >> 11) * 0x1p-53;
}

// Writes ceil(out.size() / 4) outputs as little-endian 32-bit words, the
// last one truncated to fit.
void fill_bytes(MswsState& state, std::span<std::uint8_t> out) noexcept;

std::vector<std::uint8_t> fill_bytes(MswsState& state, std::size_t n);

}  // namespace msws

#endif  // MSWS_CORE_HPP_
