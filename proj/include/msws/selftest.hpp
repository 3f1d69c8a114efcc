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

#ifndef MSWS_SELFTEST_HPP_
#define MSWS_SELFTEST_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace msws {

// First outputs from x = 0, w = 0, s = 0x0000000100000001. A sparse increment
// like this one needs several iterations before the square takes over.
inline constexpr std::uint64_t kSparseSeed = 0x0000000100000001;
inline constexpr std::array<std::uint32_t, 13> kSparseSeedGolden = {
    0x00000001, 0x00000004, 0x0000001b, 0x00000406, 0x00170a61,
    0xf765b52a, 0x68d57352, 0x0aafc03f, 0xf461cd1e, 0xfbe33cc0,
    0x808d47e0, 0x230dc324, 0x93202f86,
};

struct SelftestOptions {
  // Negative control: flips one bit of the expected golden table so the
  // "golden-sparse-seed" check must fail.
  bool corrupt_golden = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Golden vectors, reduced-width period and cycle checks, seeding round trips
// and the statistics screen, all from fixed seeds.
std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

}  // namespace msws

#endif  // MSWS_SELFTEST_HPP_
