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
#include <functional>
#include <string>
#include <thread>
#include <tuple>

#include "msws/error.hpp"

namespace msws {

namespace {

struct Shard {
  std::vector<RecoveredState> found;
  std::uint64_t examined = 0;
};

void search_shard(std::span<const std::uint64_t> out, GenParams p,
                  std::uint64_t h0_begin, std::uint64_t h0_end, Shard& shard) {
  const unsigned k = p.half_bits();
  const std::uint64_t m = p.word_mask();
  const std::uint64_t halves = std::uint64_t{1} << k;
  for (std::uint64_t h0 = h0_begin; h0 < h0_end; ++h0) {
    const std::uint64_t x0 = (h0 << k) | out[0];
    const std::uint64_t x0sq = (x0 * x0) & m;
    for (std::uint64_t h1 = 0; h1 < halves; ++h1) {
      const std::uint64_t x1 = (h1 << k) | out[1];
      const std::uint64_t w1 = (p.rotate(x1) - x0sq) & m;
      const std::uint64_t x1sq = (x1 * x1) & m;
      for (std::uint64_t h2 = 0; h2 < halves; ++h2) {
        ++shard.examined;
        const std::uint64_t x2 = (h2 << k) | out[2];
        const std::uint64_t w2 = (p.rotate(x2) - x1sq) & m;
        const std::uint64_t s = (w2 - w1) & m;
        if ((s & 1) == 0) continue;
        std::uint64_t x = x2;
        std::uint64_t w = w2;
        std::size_t i = 3;
        for (; i < out.size(); ++i) {
          w = (w + s) & m;
          x = p.rotate((x * x + w) & m);
          if ((x & p.half_mask()) != out[i]) break;
        }
        if (i == out.size()) {
          shard.found.push_back({x0, (w1 - s) & m, s, out.size()});
        }
      }
    }
  }
}

}  // namespace

RecoveryResult recover_state(std::span<const std::uint64_t> outputs,
                             GenParams params, RecoveryOptions options) {
  if (outputs.size() < kMinAttackOutputs) {
    throw Error(Errc::kInvalidArgument,
                "state recovery needs at least " +
                    std::to_string(kMinAttackOutputs) + " outputs");
  }
  for (std::uint64_t o : outputs) {
    if (o > params.half_mask()) {
      throw Error(Errc::kInvalidArgument, "output wider than k bits");
    }
  }
  const unsigned limit = options.force ? 32 : kMaxExhaustiveBits;
  if (params.word_bits() > limit) {
    throw Error(Errc::kInfeasible,
                "recovery at k=" + std::to_string(params.half_bits()) +
                    " would examine 2^" +
                    std::to_string(3 * params.half_bits()) + " candidates");
  }

  const std::uint64_t halves = std::uint64_t{1} << params.half_bits();
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, halves));

  std::vector<Shard> shards(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = halves * t / threads;
      const std::uint64_t end = halves * (t + 1) / threads;
      workers.emplace_back(search_shard, outputs, params, begin, end,
                           std::ref(shards[t]));
    }
  }

  RecoveryResult result;
  for (Shard& shard : shards) {
    result.candidates_examined += shard.examined;
    result.candidates.insert(result.candidates.end(), shard.found.begin(),
                             shard.found.end());
  }
  return result;
}

std::size_t count_distinct_futures(std::span<const RecoveredState> candidates,
                                   GenParams params) {
  const std::uint64_t m = params.word_mask();
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> keys;
  keys.reserve(candidates.size());
  for (const RecoveredState& c : candidates) {
    keys.emplace_back((c.x * c.x) & m, c.w, c.s);
  }
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(
      std::unique(keys.begin(), keys.end()) - keys.begin());
}

bool replay_matches(const RecoveredState& candidate, GenParams params,
                    std::span<const std::uint64_t> outputs) {
  if (outputs.empty()) return true;
  GMswsState g = GMswsState::unchecked(params, candidate.x, candidate.w,
                                       candidate.s);
  if ((g.x() & params.half_mask()) != outputs[0]) return false;
  for (std::size_t i = 1; i < outputs.size(); ++i) {
    if (g() != outputs[i]) return false;
  }
  return true;
}

CandidateCount attack_cost_model(unsigned k) {
  if (3 * k >= 128) {
    throw Error(Errc::kOutOfRange,
                "cost 2^" + std::to_string(3 * k) + " does not fit 128 bits");
  }
  return CandidateCount{1} << (3 * k);
}

}  // namespace msws
