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

// Small in-process randomness screen: one-dimensional chi-square on the
// output value, per-bit frequency z-scores, and a two-dimensional serial
// test on successive high bytes. These catch gross defects quickly; anything
// finer is left to external batteries fed from `msws gen`.

#ifndef MSWS_STATS_HPP_
#define MSWS_STATS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace msws::stats {

struct ChiSquareReport {
  double statistic = 0.0;
  std::uint64_t degrees_of_freedom = 0;
  double p_value = 1.0;  // upper tail
  std::vector<std::uint64_t> bins;
};

// Conventional two-sided acceptance band for screening p-values.
inline constexpr double kPLow = 0.001;
inline constexpr double kPHigh = 0.999;

inline bool in_band(double p) { return p >= kPLow && p <= kPHigh; }

// P[X >= statistic] for X ~ chi-square(dof), via the Wilson-Hilferty
// cube-root normal approximation.
double chi_square_upper_tail(double statistic, std::uint64_t dof);

// Chi-square of observed counts against a flat expectation.
ChiSquareReport chi_square_from_bins(std::vector<std::uint64_t> bins);

// bin_count must be a power of two no larger than 2^32 and the sample count
// at least 10 * bin_count; otherwise throws Error(kInvalidArgument).
ChiSquareReport chi_square_uniformity(std::span<const std::uint32_t> samples,
                                      std::uint64_t bin_count);

// z = (ones - N/2) / sqrt(N/4) per bit position, index 0 = least significant.
// Needs at least 10^4 samples.
std::array<double, 32> bit_frequency(std::span<const std::uint32_t> samples);

// Chi-square over the 256 x 256 grid of (high byte of sample 2i, high byte of
// sample 2i+1). Needs an even count of at least 10 * 2^16 samples.
ChiSquareReport pair_serial_test(std::span<const std::uint32_t> samples);

}  // namespace msws::stats

#endif  // MSWS_STATS_HPP_
