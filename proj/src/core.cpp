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

#include "msws/core.hpp"

#include "msws/error.hpp"

namespace msws {

MswsState::MswsState(std::uint64_t x, std::uint64_t w, std::uint64_t s)
    : x_(x), w_(w), s_(s) {
  if ((s & 1) == 0) {
    throw Error(Errc::kInvalidArgument, "Weyl increment s must be odd");
  }
}

Msws64PairState::Msws64PairState(const MswsState& g1, const MswsState& g2)
    : g1_(g1), g2_(g2) {
  if (g1.s() == g2.s()) {
    throw Error(Errc::kInvalidArgument,
                "paired generator needs two distinct Weyl increments");
  }
}

void fill_bytes(MswsState& state, std::span<std::uint8_t> out) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    const std::uint32_t v = state();
    out[i] = static_cast<std::uint8_t>(v);
    out[i + 1] = static_cast<std::uint8_t>(v >> 8);
    out[i + 2] = static_cast<std::uint8_t>(v >> 16);
    out[i + 3] = static_cast<std::uint8_t>(v >> 24);
  }
  if (i < out.size()) {
    std::uint32_t v = state();
    for (; i < out.size(); ++i, v >>= 8) {
      out[i] = static_cast<std::uint8_t>(v);
    }
  }
}

std::vector<std::uint8_t> fill_bytes(MswsState& state, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  fill_bytes(state, std::span<std::uint8_t>(out));
  return out;
}

}  // namespace msws
