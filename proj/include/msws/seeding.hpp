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

// Weyl increment constants and stream construction.
//
// A recommended constant has pairwise distinct hex digits in its upper eight
// nibbles. The lower eight nibbles are what "pick eight distinct digits, then
// OR 1 into the word" can produce: nibble 0 is odd, nibbles 1..7 are distinct,
// and nibble 0 may reappear among nibbles 1..7 only when nibble 0 - 1 does not
// (the repeat arises from an even digit d being turned into d + 1).
//
// Every such constant has a rank in [0, kTotalConstants). Ranks are ordered
// as upper_rank * kLowerCount + lower_rank; each half is enumerated most
// significant nibble first, lexicographically over the remaining digits.
// The lower half lists the repeat-free class first:
//
//   lower_rank < 8 * P(15,7):  nibble 0 = 2i+1, then a 7-permutation of the
//                              other 15 digits for nibbles 7..1.
//   otherwise:                 nibble 0 = o = 2i+1, the position (7..1) that
//                              repeats o, then a 6-permutation of the 14
//                              digits other than o and o - 1.
//
// Stream n takes the constant whose rank is scramble_index(n), so neighbouring
// streams get unrelated bit patterns.

#ifndef MSWS_SEEDING_HPP_
#define MSWS_SEEDING_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "msws/core.hpp"

namespace msws {

namespace combinatorics {

// n * (n-1) * ... * (n-k+1); 1 when k == 0, 0 when k > n.
std::uint64_t falling_factorial(unsigned n, unsigned k);

// Words of `length` nibbles over a `alphabet`-digit alphabet with all digits
// distinct.
std::uint64_t distinct_count(unsigned alphabet, unsigned length);

// Words of `length` nibbles over an even-sized alphabet obeying the lower-half
// rule (nibble 0 odd, the rest distinct, repeat of nibble 0 only without its
// predecessor).
std::uint64_t lower_rule_count(unsigned alphabet, unsigned length);

// The lower-half rule on an explicit digit list, nibbles[0] being nibble 0.
bool lower_rule_holds(std::span<const unsigned> nibbles);

bool all_distinct(std::span<const unsigned> nibbles);

}  // namespace combinatorics

struct ConstantCounts {
  std::uint64_t upper;
  std::uint64_t lower;
  std::uint64_t total;
};

// Computed from the falling factorials on each call.
ConstantCounts count_valid_constants();

inline constexpr std::uint64_t kUpperCount = 518918400;
inline constexpr std::uint64_t kLowerCount = 380540160;
inline constexpr std::uint64_t kTotalConstants = 197469290962944000;

enum class ConstantDefect {
  kNone,
  kEven,
  kRepeatedNibbles,
  // Nibble 0 repeats while nibble 0 - 1 is also present; OR-ing 1 into a
  // distinct-digit word never yields that.
  kUnreachableRepeat,
};

ConstantDefect diagnose_constant(std::uint64_t v) noexcept;

std::string_view describe(ConstantDefect defect) noexcept;

inline bool is_recommended_constant(std::uint64_t v) noexcept {
  return diagnose_constant(v) == ConstantDefect::kNone;
}

// A Weyl increment that satisfies is_recommended_constant.
class SeedConstant {
 public:
  // Throws Error(kInvalidArgument) naming the defect.
  explicit SeedConstant(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(SeedConstant, SeedConstant) = default;

 private:
  std::uint64_t value_;
};

// Index of a parallel stream, in [0, kTotalConstants).
class StreamIndex {
 public:
  // Throws Error(kOutOfRange).
  explicit StreamIndex(std::uint64_t n);

  std::uint64_t value() const noexcept { return n_; }

 private:
  std::uint64_t n_;
};

// Throws Error(kOutOfRange) if rank >= kTotalConstants.
SeedConstant decode_constant(std::uint64_t rank);

std::uint64_t encode_constant(SeedConstant c) noexcept;

// Validating overload; throws Error(kInvalidArgument).
std::uint64_t encode_constant(std::uint64_t value);

// Bijection on [0, kTotalConstants) by cycle-walking a fixed 64-bit
// permutation. Inputs at or above the range are reduced modulo it first.
std::uint64_t scramble_index(std::uint64_t n) noexcept;

SeedConstant init_rand_digits(StreamIndex n);

// x = w = s = init_rand_digits(n), so the first step already mixes.
MswsState new_stream(StreamIndex n);

// One "0x%016x," line per constant; the file can be #included inside a C
// array initializer.
void emit_seed_file(std::span<const StreamIndex> indices, std::ostream& out);

void write_seed_constants(std::span<const std::uint64_t> constants,
                          std::ostream& out);

// Accepts the emitted format; blank lines and a missing trailing comma are
// tolerated. Throws ParseError carrying the 1-based line number.
std::vector<std::uint64_t> parse_seed_file(std::istream& in);

}  // namespace msws

#endif  // MSWS_SEEDING_HPP_
