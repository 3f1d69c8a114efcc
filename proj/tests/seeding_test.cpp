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
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "gtest/gtest.h"
#include "msws/error.hpp"

namespace {

using msws::ConstantDefect;

TEST(IsRecommendedConstant, Examples) {
  // Upper half b5ad4ece repeats 'e'.
  EXPECT_FALSE(msws::is_recommended_constant(0xb5ad4eceda1ce2a9));
  EXPECT_EQ(msws::diagnose_constant(0xb5ad4eceda1ce2a9),
            ConstantDefect::kRepeatedNibbles);
  EXPECT_TRUE(msws::is_recommended_constant(0x8b5ad4cef9c2703b));
  EXPECT_TRUE(msws::is_recommended_constant(0xdbc8915fabd37257));
  EXPECT_TRUE(msws::is_recommended_constant(0x3a16e0c5540e9daf));
  EXPECT_TRUE(msws::is_recommended_constant(0xbf3ac427d39cb715));
  EXPECT_FALSE(msws::is_recommended_constant(0x0000000100000001));
}

TEST(IsRecommendedConstant, LowerHalfRule) {
  EXPECT_EQ(msws::diagnose_constant(0x0123456702345670), ConstantDefect::kEven);
  // 1 repeated at nibble 7 with 0 absent: "0 then OR 1" makes this.
  EXPECT_TRUE(msws::is_recommended_constant(0x0123456712345671));
  // 1 repeated while 0 is present: unreachable.
  EXPECT_EQ(msws::diagnose_constant(0x0123456710345671),
            ConstantDefect::kUnreachableRepeat);
  // Nibbles 1..7 repeat among themselves.
  EXPECT_EQ(msws::diagnose_constant(0x0123456722345671),
            ConstantDefect::kRepeatedNibbles);
}

TEST(SeedConstant, ConstructorValidates) {
  EXPECT_THROW(msws::SeedConstant(0x0000000100000001), msws::Error);
  EXPECT_EQ(msws::SeedConstant(0x8b5ad4cef9c2703b).value(),
            0x8b5ad4cef9c2703bULL);
}

TEST(CountValidConstants, MatchesPublishedCounts) {
  const auto c = msws::count_valid_constants();
  EXPECT_EQ(c.upper, 518918400u);
  EXPECT_EQ(c.upper, 16ULL * 15 * 14 * 13 * 12 * 11 * 10 * 9);
  EXPECT_EQ(c.lower, 380540160u);
  EXPECT_EQ(c.total, 197469290962944000u);
  EXPECT_EQ(c.upper, msws::kUpperCount);
  EXPECT_EQ(c.lower, msws::kLowerCount);
  EXPECT_EQ(c.total, msws::kTotalConstants);
}

// Reduced analog: 4 nibbles over the digits 0..7. The image of "choose four
// distinct digits, OR 1 into nibble 0" must equal the words the lower-half
// rule accepts.
TEST(LowerHalfRule, EqualsImageOfDistinctThenOrOne) {
  constexpr unsigned kAlphabet = 8, kLen = 4;
  std::set<std::array<unsigned, kLen>> image;
  std::array<unsigned, kLen> d{};
  for (d[0] = 0; d[0] < kAlphabet; ++d[0])
    for (d[1] = 0; d[1] < kAlphabet; ++d[1])
      for (d[2] = 0; d[2] < kAlphabet; ++d[2])
        for (d[3] = 0; d[3] < kAlphabet; ++d[3]) {
          if (!msws::combinatorics::all_distinct(d)) continue;
          auto e = d;
          e[0] |= 1;
          image.insert(e);
        }
  std::set<std::array<unsigned, kLen>> accepted;
  std::size_t distinct_words = 0;
  for (d[0] = 0; d[0] < kAlphabet; ++d[0])
    for (d[1] = 0; d[1] < kAlphabet; ++d[1])
      for (d[2] = 0; d[2] < kAlphabet; ++d[2])
        for (d[3] = 0; d[3] < kAlphabet; ++d[3]) {
          if (msws::combinatorics::lower_rule_holds(d)) accepted.insert(d);
          if (msws::combinatorics::all_distinct(d)) ++distinct_words;
        }
  EXPECT_EQ(image, accepted);
  EXPECT_EQ(accepted.size(),
            msws::combinatorics::lower_rule_count(kAlphabet, kLen));
  EXPECT_EQ(accepted.size(), 1200u);
  EXPECT_EQ(distinct_words,
            msws::combinatorics::distinct_count(kAlphabet, kLen));
}

TEST(DecodeConstant, RankZero) {
  EXPECT_EQ(msws::decode_constant(0).value(), 0x0123456702345671ULL);
  EXPECT_EQ(msws::encode_constant(0x0123456702345671ULL), 0u);
}

// Values frozen from an independent Python decoder written from the
// documented ordering.
TEST(DecodeConstant, OrderingVectors) {
  const std::uint64_t plain = 8 * msws::combinatorics::falling_factorial(15, 7);
  EXPECT_EQ(plain, 259459200u);
  EXPECT_EQ(msws::decode_constant(plain - 1).value(), 0x01234567edcba98fULL);
  EXPECT_EQ(msws::decode_constant(plain).value(), 0x0123456712345671ULL);
  EXPECT_EQ(msws::decode_constant(msws::kLowerCount - 1).value(),
            0x01234567dcba98ffULL);
  EXPECT_EQ(msws::decode_constant(msws::kTotalConstants - 1).value(),
            0xfedcba98dcba98ffULL);
}

TEST(DecodeConstant, OutOfRange) {
  EXPECT_THROW(msws::decode_constant(msws::kTotalConstants), msws::Error);
  try {
    msws::decode_constant(~std::uint64_t{0});
  } catch (const msws::Error& e) {
    EXPECT_EQ(e.code(), msws::Errc::kOutOfRange);
  }
}

TEST(EncodeConstant, RejectsInvalid) {
  EXPECT_THROW(msws::encode_constant(std::uint64_t{0x0000000100000001}),
               msws::Error);
}

TEST(EncodeDecode, RoundTripRandomRanks) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> rank(0,
                                                    msws::kTotalConstants - 1);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t r = rank(rng);
    const auto c = msws::decode_constant(r);
    ASSERT_TRUE(msws::is_recommended_constant(c.value()));
    ASSERT_EQ(msws::encode_constant(c), r);
  }
}

TEST(EncodeDecode, RoundTripRandomConstants) {
  std::mt19937_64 rng(2);
  int found = 0;
  while (found < 100000) {
    const std::uint64_t v = rng() | 1;
    if (!msws::is_recommended_constant(v)) continue;
    ++found;
    const std::uint64_t r = msws::encode_constant(v);
    ASSERT_LT(r, msws::kTotalConstants);
    ASSERT_EQ(msws::decode_constant(r).value(), v);
  }
}

TEST(ScrambleIndex, RegressionVector) {
  EXPECT_EQ(msws::scramble_index(0), 171364728376176418ULL);
  EXPECT_EQ(msws::scramble_index(1), 150817768888223138ULL);
}

TEST(ScrambleIndex, ReducesOversizedInputs) {
  EXPECT_EQ(msws::scramble_index(msws::kTotalConstants),
            msws::scramble_index(0));
  EXPECT_LT(msws::scramble_index(~std::uint64_t{0}), msws::kTotalConstants);
}

TEST(ScrambleIndex, InjectiveAndInRange) {
  std::vector<std::uint64_t> v(1000000);
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    v[i] = msws::scramble_index(i);
    ASSERT_LT(v[i], msws::kTotalConstants);
  }
  std::sort(v.begin(), v.end());
  EXPECT_EQ(std::adjacent_find(v.begin(), v.end()), v.end());
}

TEST(InitRandDigits, Vectors) {
  EXPECT_EQ(msws::init_rand_digits(msws::StreamIndex(0)).value(),
            0xde3b9517d371064dULL);
  EXPECT_EQ(msws::init_rand_digits(msws::StreamIndex(0)),
            msws::decode_constant(msws::scramble_index(0)));
  EXPECT_EQ(msws::init_rand_digits(msws::StreamIndex(1)).value(),
            0xc352bd98b149ec85ULL);
  EXPECT_EQ(msws::init_rand_digits(msws::StreamIndex(12345)).value(),
            0x534f98c08aefb321ULL);
}

TEST(InitRandDigits, LastIndexIsValid) {
  const msws::StreamIndex last(msws::kTotalConstants - 1);
  EXPECT_TRUE(msws::is_recommended_constant(
      msws::init_rand_digits(last).value()));
}

TEST(StreamIndex, RejectsOutOfRange) {
  EXPECT_THROW(msws::StreamIndex(msws::kTotalConstants), msws::Error);
  EXPECT_NO_THROW(msws::StreamIndex(msws::kTotalConstants - 1));
}

TEST(NewStream, StateIsConstantTriple) {
  for (std::uint64_t n : {0ULL, 1ULL, 999ULL, 123456789ULL}) {
    const auto g = msws::new_stream(msws::StreamIndex(n));
    EXPECT_EQ(g.x(), g.s());
    EXPECT_EQ(g.w(), g.s());
    EXPECT_EQ(g.s(), msws::init_rand_digits(msws::StreamIndex(n)).value());
  }
}

TEST(NewStream, FirstOutputsNonZero) {
  for (std::uint64_t n = 0; n < 1000; ++n) {
    auto g = msws::new_stream(msws::StreamIndex(n));
    ASSERT_NE(g(), 0u) << n;
  }
}

TEST(NewStream, NeighbouringStreamsShareNoWindow) {
  auto a = msws::new_stream(msws::StreamIndex(0));
  auto b = msws::new_stream(msws::StreamIndex(1));
  constexpr int kN = 100000;
  std::unordered_set<std::uint64_t> windows;
  windows.reserve(kN);
  std::uint64_t prev = a();
  for (int i = 1; i < kN; ++i) {
    const std::uint64_t cur = a();
    windows.insert((prev << 32) | cur);
    prev = cur;
  }
  prev = b();
  for (int i = 1; i < kN; ++i) {
    const std::uint64_t cur = b();
    ASSERT_FALSE(windows.contains((prev << 32) | cur)) << i;
    prev = cur;
  }
}

TEST(SeedFile, EmitFormat) {
  std::ostringstream out;
  const std::vector<msws::StreamIndex> idx{msws::StreamIndex(0)};
  msws::emit_seed_file(idx, out);
  EXPECT_EQ(out.str(), "0xde3b9517d371064d,\n");
}

TEST(SeedFile, EmptyRoundTrip) {
  std::ostringstream out;
  msws::emit_seed_file({}, out);
  EXPECT_EQ(out.str(), "");
  std::istringstream in(out.str());
  EXPECT_TRUE(msws::parse_seed_file(in).empty());
}

TEST(SeedFile, RoundTripRandomLists) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<msws::StreamIndex> idx;
    std::vector<std::uint64_t> expect;
    const int len = static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) {
      idx.emplace_back(rng() % msws::kTotalConstants);
      expect.push_back(msws::init_rand_digits(idx.back()).value());
    }
    std::stringstream io;
    msws::emit_seed_file(idx, io);
    EXPECT_EQ(msws::parse_seed_file(io), expect);
  }
}

TEST(SeedFile, ParseToleratesBlankLinesAndMissingComma) {
  std::istringstream in("\n0x8b5ad4cef9c2703b,\n\n  0xDBC8915FABD37257  \n\n");
  EXPECT_EQ(msws::parse_seed_file(in),
            (std::vector<std::uint64_t>{0x8b5ad4cef9c2703b,
                                        0xdbc8915fabd37257}));
}

TEST(SeedFile, ParseErrorsCarryLineNumber) {
  const char* bad[] = {"0x1,\n\nbogus,\n", "0x1,\n0x2,\n0xzz,\n",
                       "0x1,\n0x2,\n0x11112222333344445,\n"};
  for (const char* text : bad) {
    std::istringstream in(text);
    try {
      msws::parse_seed_file(in);
      FAIL() << text;
    } catch (const msws::ParseError& e) {
      EXPECT_EQ(e.line(), 3u) << text;
      EXPECT_EQ(e.code(), msws::Errc::kParse);
    }
  }
}

}  // namespace
