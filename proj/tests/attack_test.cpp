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

#include "msws/attack.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "msws/error.hpp"
#include "msws/widths.hpp"

namespace {

using msws::GenParams;
using msws::GMswsState;
using msws::RecoveredState;

struct Trace {
  std::vector<std::uint64_t> outputs;
  RecoveredState truth;  // state right after outputs[0]
};

Trace make_trace(GenParams p, std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  const std::uint64_t m = p.word_mask();
  GMswsState g(p, rng() & m, rng() & m, (rng() & m) | 1);
  Trace t;
  t.outputs.push_back(g());
  t.truth = {g.x(), g.w(), g.s(), n};
  while (t.outputs.size() < n) t.outputs.push_back(g());
  return t;
}

TEST(RecoverState, FindsTrueStateAtK8) {
  const GenParams p(8);
  for (std::uint64_t seed = 100; seed < 104; ++seed) {
    const Trace t = make_trace(p, seed, 8);
    const auto r = msws::recover_state(t.outputs, p);
    EXPECT_EQ(r.candidates_examined, std::uint64_t{1} << 24);
    EXPECT_NE(std::find(r.candidates.begin(), r.candidates.end(), t.truth),
              r.candidates.end())
        << seed;
  }
}

TEST(RecoverState, SixteenOutputsLeaveOneFuture) {
  const GenParams p(8);
  for (std::uint64_t seed = 200; seed < 205; ++seed) {
    const Trace t = make_trace(p, seed, 16);
    const auto r = msws::recover_state(t.outputs, p);
    ASSERT_FALSE(r.candidates.empty());
    EXPECT_EQ(msws::count_distinct_futures(r.candidates, p), 1u) << seed;
    // x and x ^ 2^15 have the same square, so survivors come in pairs.
    EXPECT_GE(r.candidates.size(), 2u);
    for (const auto& c : r.candidates) {
      const RecoveredState twin{c.x ^ 0x8000, c.w, c.s, c.verified_against};
      EXPECT_NE(std::find(r.candidates.begin(), r.candidates.end(), twin),
                r.candidates.end());
    }
  }
}

TEST(RecoverState, SurvivorsReplayEveryOutput) {
  const GenParams p(8);
  const Trace t = make_trace(p, 300, 5);
  const auto r = msws::recover_state(t.outputs, p);
  EXPECT_GT(r.candidates.size(), 1u);
  for (const auto& c : r.candidates) {
    EXPECT_TRUE(msws::replay_matches(c, p, t.outputs));
    EXPECT_EQ(c.verified_against, 5u);
  }
  EXPECT_NE(std::find(r.candidates.begin(), r.candidates.end(), t.truth),
            r.candidates.end());
}

TEST(RecoverState, CompleteAndSoundAtK4) {
  // At k = 4 the whole candidate space is small enough to filter with an
  // independent replay of every (x0, w0, odd s) triple.
  const GenParams p(4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Trace t = make_trace(p, seed, 10);
    const auto r = msws::recover_state(t.outputs, p, {.threads = 3});
    EXPECT_EQ(r.candidates_examined, 4096u);

    std::vector<RecoveredState> brute;
    for (std::uint64_t h0 = 0; h0 < 16; ++h0) {
      const std::uint64_t x0 = (h0 << 4) | t.outputs[0];
      for (std::uint64_t w = 0; w < 256; ++w) {
        for (std::uint64_t s = 1; s < 256; s += 2) {
          const RecoveredState c{x0, w, s, t.outputs.size()};
          if (msws::replay_matches(c, p, t.outputs)) brute.push_back(c);
        }
      }
    }
    auto got = r.candidates;
    auto by_key = [](const RecoveredState& a, const RecoveredState& b) {
      return std::tie(a.x, a.w, a.s) < std::tie(b.x, b.w, b.s);
    };
    std::sort(got.begin(), got.end(), by_key);
    std::sort(brute.begin(), brute.end(), by_key);
    EXPECT_EQ(got, brute) << seed;
  }
}

TEST(RecoverState, ThreadCountDoesNotChangeResult) {
  const GenParams p(8);
  const Trace t = make_trace(p, 400, 6);
  const auto a = msws::recover_state(t.outputs, p, {.threads = 1});
  const auto b = msws::recover_state(t.outputs, p, {.threads = 7});
  EXPECT_EQ(a.candidates, b.candidates);
  EXPECT_EQ(a.candidates_examined, b.candidates_examined);
}

TEST(RecoverState, NonGeneratorDataHasNoSurvivors) {
  std::mt19937_64 rng(99);
  std::vector<std::uint64_t> noise(16);
  for (auto& v : noise) v = rng() & 0xFF;
  const auto r = msws::recover_state(noise, GenParams(8));
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_EQ(r.candidates_examined, std::uint64_t{1} << 24);
}

TEST(RecoverState, Preconditions) {
  const GenParams p(8);
  EXPECT_THROW(msws::recover_state(std::vector<std::uint64_t>(4, 0), p),
               msws::Error);
  EXPECT_THROW(msws::recover_state(std::vector<std::uint64_t>{1, 2, 3, 4, 256},
                                   p),
               msws::Error);
  try {
    msws::recover_state(std::vector<std::uint64_t>(8, 0), GenParams(16));
    FAIL();
  } catch (const msws::Error& e) {
    EXPECT_EQ(e.code(), msws::Errc::kInfeasible);
  }
  EXPECT_THROW(msws::recover_state(std::vector<std::uint64_t>(8, 0),
                                   GenParams(32), {.force = true}),
               msws::Error);
}

TEST(AttackCostModel, Formula) {
  EXPECT_TRUE(msws::attack_cost_model(32) == msws::CandidateCount{1} << 96);
  EXPECT_TRUE(msws::attack_cost_model(8) == msws::CandidateCount{1} << 24);
  EXPECT_TRUE(msws::attack_cost_model(0) == 1);
  EXPECT_THROW(msws::attack_cost_model(43), msws::Error);
}

}  // namespace
