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

#include "msws/seeding.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "msws/error.hpp"

namespace msws {

namespace combinatorics {

std::uint64_t falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

std::uint64_t distinct_count(unsigned alphabet, unsigned length) {
  return falling_factorial(alphabet, length);
}

std::uint64_t lower_rule_count(unsigned alphabet, unsigned length) {
  if (length == 0) return 1;
  const std::uint64_t odd = alphabet / 2;
  // Nibble 0 absent from the rest, plus nibble 0 repeated at one of
  // length - 1 positions with its predecessor excluded.
  return odd * falling_factorial(alphabet - 1, length - 1) +
         odd * (length - 1) * falling_factorial(alphabet - 2, length - 2);
}

bool all_distinct(std::span<const unsigned> nibbles) {
  unsigned seen = 0;
  for (unsigned d : nibbles) {
    if (seen & (1u << d)) return false;
    seen |= 1u << d;
  }
  return true;
}

bool lower_rule_holds(std::span<const unsigned> nibbles) {
  if (nibbles.empty()) return true;
  const unsigned o = nibbles[0];
  if ((o & 1) == 0) return false;
  const auto rest = nibbles.subspan(1);
  if (!all_distinct(rest)) return false;
  const bool repeats = std::find(rest.begin(), rest.end(), o) != rest.end();
  const bool has_pred =
      std::find(rest.begin(), rest.end(), o - 1) != rest.end();
  return !(repeats && has_pred);
}

}  // namespace combinatorics

namespace {

using combinatorics::falling_factorial;

// Digits of a 32-bit half, most significant nibble first.
std::array<unsigned, 8> nibbles_msf(std::uint32_t half) {
  std::array<unsigned, 8> d{};
  for (int i = 0; i < 8; ++i) d[i] = (half >> (28 - 4 * i)) & 0xF;
  return d;
}

// The rank-th k-permutation of `pool` (sorted ascending), lexicographic.
std::vector<unsigned> unrank_permutation(std::vector<unsigned> pool,
                                         unsigned k, std::uint64_t rank) {
  std::vector<unsigned> out;
  out.reserve(k);
  for (unsigned j = 0; j < k; ++j) {
    const auto n = static_cast<unsigned>(pool.size());
    const std::uint64_t block = falling_factorial(n - 1, k - 1 - j);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

std::uint64_t rank_permutation(std::vector<unsigned> pool,
                               std::span<const unsigned> perm) {
  std::uint64_t rank = 0;
  const auto k = static_cast<unsigned>(perm.size());
  for (unsigned j = 0; j < k; ++j) {
    const auto n = static_cast<unsigned>(pool.size());
    const auto it = std::find(pool.begin(), pool.end(), perm[j]);
    const auto idx = static_cast<std::uint64_t>(it - pool.begin());
    rank += idx * falling_factorial(n - 1, k - 1 - j);
    pool.erase(it);
  }
  return rank;
}

std::vector<unsigned> digits_except(std::initializer_list<unsigned> drop) {
  std::vector<unsigned> pool;
  for (unsigned d = 0; d < 16; ++d) {
    if (std::find(drop.begin(), drop.end(), d) == drop.end()) {
      pool.push_back(d);
    }
  }
  return pool;
}

std::uint32_t pack_msf(std::span<const unsigned> digits) {
  std::uint32_t v = 0;
  for (unsigned d : digits) v = (v << 4) | d;
  return v;
}

const std::uint64_t kLowerPlain = 8 * falling_factorial(15, 7);
const std::uint64_t kLowerRepeatPerDigit = 7 * falling_factorial(14, 6);

std::uint32_t decode_lower(std::uint64_t rank) {
  std::array<unsigned, 8> d{};  // most significant first; d[7] is nibble 0
  if (rank < kLowerPlain) {
    const std::uint64_t per = falling_factorial(15, 7);
    const unsigned o = 2 * static_cast<unsigned>(rank / per) + 1;
    const auto perm = unrank_permutation(digits_except({o}), 7, rank % per);
    std::copy(perm.begin(), perm.end(), d.begin());
    d[7] = o;
  } else {
    rank -= kLowerPlain;
    const unsigned o =
        2 * static_cast<unsigned>(rank / kLowerRepeatPerDigit) + 1;
    rank %= kLowerRepeatPerDigit;
    const std::uint64_t per = falling_factorial(14, 6);
    const auto pos = static_cast<std::size_t>(rank / per);
    const auto perm =
        unrank_permutation(digits_except({o, o - 1}), 6, rank % per);
    for (std::size_t p = 0, j = 0; p < 7; ++p) {
      d[p] = p == pos ? o : perm[j++];
    }
    d[7] = o;
  }
  return pack_msf(d);
}

std::uint64_t encode_lower(std::uint32_t half) {
  const auto d = nibbles_msf(half);
  const unsigned o = d[7];
  const std::span<const unsigned> rest(d.data(), 7);
  const auto hit = std::find(rest.begin(), rest.end(), o);
  if (hit == rest.end()) {
    return (o / 2) * falling_factorial(15, 7) +
           rank_permutation(digits_except({o}), rest);
  }
  const auto pos = static_cast<std::uint64_t>(hit - rest.begin());
  std::vector<unsigned> others;
  for (std::size_t p = 0; p < 7; ++p) {
    if (p != pos) others.push_back(rest[p]);
  }
  return kLowerPlain + (o / 2) * kLowerRepeatPerDigit +
         pos * falling_factorial(14, 6) +
         rank_permutation(digits_except({o, o - 1}), others);
}

}  // namespace

ConstantCounts count_valid_constants() {
  const std::uint64_t upper = combinatorics::distinct_count(16, 8);
  const std::uint64_t lower = combinatorics::lower_rule_count(16, 8);
  return {upper, lower, upper * lower};
}

ConstantDefect diagnose_constant(std::uint64_t v) noexcept {
  if ((v & 1) == 0) return ConstantDefect::kEven;
  const auto upper = nibbles_msf(static_cast<std::uint32_t>(v >> 32));
  if (!combinatorics::all_distinct(upper)) {
    return ConstantDefect::kRepeatedNibbles;
  }
  const auto msf = nibbles_msf(static_cast<std::uint32_t>(v));
  std::array<unsigned, 8> lower{};  // nibble 0 first
  std::reverse_copy(msf.begin(), msf.end(), lower.begin());
  if (!combinatorics::all_distinct(std::span(lower).subspan(1))) {
    return ConstantDefect::kRepeatedNibbles;
  }
  if (!combinatorics::lower_rule_holds(lower)) {
    return ConstantDefect::kUnreachableRepeat;
  }
  return ConstantDefect::kNone;
}

std::string_view describe(ConstantDefect defect) noexcept {
  switch (defect) {
    case ConstantDefect::kNone:
      return "ok";
    case ConstantDefect::kEven:
      return "even value";
    case ConstantDefect::kRepeatedNibbles:
      return "repeated nibbles";
    case ConstantDefect::kUnreachableRepeat:
      return "nibble 0 repeated alongside its predecessor";
  }
  return "unknown";
}

SeedConstant::SeedConstant(std::uint64_t value) : value_(value) {
  const ConstantDefect defect = diagnose_constant(value);
  if (defect != ConstantDefect::kNone) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016" PRIx64, value);
    throw Error(Errc::kInvalidArgument, std::string("seed constant ") + buf +
                                            " rejected: " +
                                            std::string(describe(defect)));
  }
}

StreamIndex::StreamIndex(std::uint64_t n) : n_(n) {
  if (n >= kTotalConstants) {
    throw Error(Errc::kOutOfRange,
                "stream index " + std::to_string(n) + " exceeds " +
                    std::to_string(kTotalConstants - 1));
  }
}

SeedConstant decode_constant(std::uint64_t rank) {
  if (rank >= kTotalConstants) {
    throw Error(Errc::kOutOfRange,
                "constant rank " + std::to_string(rank) + " out of range");
  }
  const auto upper = unrank_permutation(digits_except({}), 8,
                                        rank / kLowerCount);
  const std::uint64_t hi = pack_msf(upper);
  const std::uint64_t lo = decode_lower(rank % kLowerCount);
  return SeedConstant((hi << 32) | lo);
}

std::uint64_t encode_constant(SeedConstant c) noexcept {
  const auto upper = nibbles_msf(static_cast<std::uint32_t>(c.value() >> 32));
  const std::uint64_t upper_rank = rank_permutation(digits_except({}), upper);
  return upper_rank * kLowerCount +
         encode_lower(static_cast<std::uint32_t>(c.value()));
}

std::uint64_t encode_constant(std::uint64_t value) {
  return encode_constant(SeedConstant(value));
}

std::uint64_t scramble_index(std::uint64_t n) noexcept {
  auto g = [](std::uint64_t v) {
    v = v * 0x9E3779B97F4A7C15ULL + 0x7F4A7C159E3779B9ULL;
    return v ^ (v >> 31);
  };
  std::uint64_t v = g(n % kTotalConstants);
  while (v >= kTotalConstants) v = g(v);
  return v;
}

SeedConstant init_rand_digits(StreamIndex n) {
  return decode_constant(scramble_index(n.value()));
}

MswsState new_stream(StreamIndex n) {
  const std::uint64_t s = init_rand_digits(n).value();
  return MswsState(s, s, s);
}

void write_seed_constants(std::span<const std::uint64_t> constants,
                          std::ostream& out) {
  char line[24];
  for (std::uint64_t c : constants) {
    std::snprintf(line, sizeof line, "0x%016" PRIx64 ",\n", c);
    out << line;
  }
}

void emit_seed_file(std::span<const StreamIndex> indices, std::ostream& out) {
  std::vector<std::uint64_t> constants;
  constants.reserve(indices.size());
  for (StreamIndex n : indices) constants.push_back(init_rand_digits(n).value());
  write_seed_constants(constants, out);
  if (!out) throw Error(Errc::kIo, "failed writing seed file");
}

std::vector<std::uint64_t> parse_seed_file(std::istream& in) {
  std::vector<std::uint64_t> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v(line);
    auto is_space = [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    };
    while (!v.empty() && is_space(v.front())) v.remove_prefix(1);
    while (!v.empty() && is_space(v.back())) v.remove_suffix(1);
    if (v.empty()) continue;
    if (v.back() == ',') {
      v.remove_suffix(1);
      while (!v.empty() && is_space(v.back())) v.remove_suffix(1);
    }
    if (v.size() < 3 || v[0] != '0' || (v[1] != 'x' && v[1] != 'X')) {
      throw ParseError(lineno, "expected 0x-prefixed hex constant");
    }
    v.remove_prefix(2);
    if (v.size() > 16) throw ParseError(lineno, "constant wider than 64 bits");
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(v.data(), v.data() + v.size(), value, 16);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      throw ParseError(lineno, "malformed hex digits");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace msws
