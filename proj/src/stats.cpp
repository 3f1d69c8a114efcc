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

#include "msws/stats.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "msws/error.hpp"

namespace msws::stats {

double chi_square_upper_tail(double statistic, std::uint64_t dof) {
  if (dof == 0) return 1.0;
  if (statistic <= 0.0) return 1.0;
  const double k = static_cast<double>(dof);
  const double v = 2.0 / (9.0 * k);
  const double z = (std::cbrt(statistic / k) - (1.0 - v)) / std::sqrt(v);
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

ChiSquareReport chi_square_from_bins(std::vector<std::uint64_t> bins) {
  ChiSquareReport r;
  std::uint64_t n = 0;
  for (std::uint64_t b : bins) n += b;
  const double expected =
      static_cast<double>(n) / static_cast<double>(bins.size());
  double stat = 0.0;
  for (std::uint64_t b : bins) {
    const double d = static_cast<double>(b) - expected;
    stat += d * d / expected;
  }
  r.statistic = stat;
  r.degrees_of_freedom = bins.size() - 1;
  r.p_value = chi_square_upper_tail(stat, r.degrees_of_freedom);
  r.bins = std::move(bins);
  return r;
}

ChiSquareReport chi_square_uniformity(std::span<const std::uint32_t> samples,
                                      std::uint64_t bin_count) {
  if (bin_count < 2 || !std::has_single_bit(bin_count) ||
      bin_count > (std::uint64_t{1} << 32)) {
    throw Error(Errc::kInvalidArgument,
                "bin count must be a power of two in [2, 2^32]");
  }
  if (samples.size() < 10 * bin_count) {
    throw Error(Errc::kInvalidArgument,
                "need at least " + std::to_string(10 * bin_count) +
                    " samples for " + std::to_string(bin_count) + " bins");
  }
  const unsigned shift = 32 - static_cast<unsigned>(std::countr_zero(bin_count));
  std::vector<std::uint64_t> bins(bin_count, 0);
  for (std::uint32_t v : samples) {
    ++bins[v >> shift];
  }
  return chi_square_from_bins(std::move(bins));
}

std::array<double, 32> bit_frequency(std::span<const std::uint32_t> samples) {
  if (samples.size() < 10000) {
    throw Error(Errc::kInvalidArgument,
                "bit frequency needs at least 10000 samples");
  }
  std::array<std::uint64_t, 32> ones{};
  for (std::uint32_t v : samples) {
    for (unsigned b = 0; b < 32; ++b) ones[b] += (v >> b) & 1;
  }
  const double n = static_cast<double>(samples.size());
  const double sd = std::sqrt(n / 4.0);
  std::array<double, 32> z{};
  for (unsigned b = 0; b < 32; ++b) {
    z[b] = (static_cast<double>(ones[b]) - n / 2.0) / sd;
  }
  return z;
}

ChiSquareReport pair_serial_test(std::span<const std::uint32_t> samples) {
  constexpr std::size_t kCells = 256 * 256;
  if (samples.size() % 2 != 0 || samples.size() < 10 * kCells) {
    throw Error(Errc::kInvalidArgument,
                "serial test needs an even count of at least 655360 samples");
  }
  std::vector<std::uint64_t> bins(kCells, 0);
  for (std::size_t i = 0; i < samples.size(); i += 2) {
    ++bins[((samples[i] >> 24) << 8) | (samples[i + 1] >> 24)];
  }
  return chi_square_from_bins(std::move(bins));
}

}  // namespace msws::stats
