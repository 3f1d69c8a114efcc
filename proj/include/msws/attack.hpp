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

// Known-output state recovery for the reduced-width generator.
//
// Each output fixes the low k bits of a rotated accumulator, leaving k bits
// hidden. Guessing the hidden halves of three consecutive accumulators
// x0, x1, x2 determines everything else:
//
//   w1 = rotate(x1) - x0^2,  w2 = rotate(x2) - x1^2,  s = w2 - w1
//
// and the remaining outputs filter the (2^k)^3 guesses. At k = 32 the same
// enumeration would take 2^96 candidates.

#ifndef MSWS_ATTACK_HPP_
#define MSWS_ATTACK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "msws/widths.hpp"

namespace msws {

// A state consistent with every supplied output. It is positioned just after
// the first output was produced: low k bits of x equal outputs[0], and
// stepping it reproduces outputs[1], outputs[2], ...
struct RecoveredState {
  std::uint64_t x = 0;
  std::uint64_t w = 0;
  std::uint64_t s = 0;
  std::size_t verified_against = 0;

  friend bool operator==(const RecoveredState&, const RecoveredState&) =
      default;
};

struct RecoveryOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Lifts the 2k <= 24 feasibility limit (up to k = 16).
  bool force = false;
};

struct RecoveryResult {
  std::vector<RecoveredState> candidates;
  std::uint64_t candidates_examined = 0;
};

inline constexpr std::size_t kMinAttackOutputs = 5;

// Throws Error(kInvalidArgument) for fewer than kMinAttackOutputs outputs or
// an output wider than k bits, Error(kInfeasible) past the width limit.
// Candidates come back ordered by (hidden x0, hidden x1, hidden x2).
RecoveryResult recover_state(std::span<const std::uint64_t> outputs,
                             GenParams params, RecoveryOptions options = {});

// Candidates whose accumulators have equal squares mod 2^(2k) (x and
// x ^ 2^(2k-1) always do) are indistinguishable from any output. Returns the
// number of distinct (x^2, w, s) classes, i.e. of distinct futures.
std::size_t count_distinct_futures(std::span<const RecoveredState> candidates,
                                   GenParams params);

// True iff `candidate` reproduces every element of `outputs`.
bool replay_matches(const RecoveredState& candidate, GenParams params,
                    std::span<const std::uint64_t> outputs);

__extension__ typedef unsigned __int128 CandidateCount;

// (2^k)^3. Throws Error(kOutOfRange) for k > 42.
CandidateCount attack_cost_model(unsigned k);

}  // namespace msws

#endif  // MSWS_ATTACK_HPP_
