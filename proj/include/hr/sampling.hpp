// Copyright 2026 The hurwitz-radon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HR_SAMPLING_HPP
#define HR_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hr/matrix.hpp"
#include "hr/rng.hpp"

namespace hr {

/// Row-major double copy of a square matrix stack, for the floating
/// sampling paths.
struct DoubleMats {
  int dim = 0;
  std::vector<std::vector<double>> mats;
  static DoubleMats from(const std::vector<RationalMatrix>& ms);
};

/// Point on the unit sphere of R^n from normalized Gaussian draws; fully
/// determined by (seed, index).
std::vector<double> sphere_point(int n, uint64_t seed, uint64_t index);

double min_singular_value(const DoubleMats& m, const std::vector<double>& t);

/// Scan of min-singular-value over seeded sphere samples
/// [begin, begin+count). Tracks the global minimum (ties broken toward the
/// lower index) and collects up to max_candidates indices whose sigma falls
/// below threshold, in index order.
struct SigmaScanResult {
  double min_sigma = 0;
  uint64_t argmin_index = 0;
  long samples = 0;
  std::vector<uint64_t> candidates;
};

SigmaScanResult scan_min_sigma_serial(const DoubleMats& m, uint64_t seed,
                                      uint64_t begin, long count,
                                      double threshold, int max_candidates);

/// OpenMP version. Per-sample streams make the work order-independent; the
/// merge reproduces the serial result bit for bit.
SigmaScanResult scan_min_sigma_parallel(const DoubleMats& m, uint64_t seed,
                                        uint64_t begin, long count,
                                        double threshold, int max_candidates);

/// Dispatches to the parallel kernel for large scans.
SigmaScanResult scan_min_sigma(const DoubleMats& m, uint64_t seed,
                               uint64_t begin, long count, double threshold,
                               int max_candidates);

/// Greedy local descent of min-sigma around t, seeded; returns the best
/// point found.
std::vector<double> refine_min_sigma(const DoubleMats& m,
                                     std::vector<double> t, uint64_t seed,
                                     int iterations);

/// Rational approximations of a direction vector: continued-fraction
/// convergents per entry at several denominator bounds, plus rounded and
/// sparsified variants. Deduplicated, scaled to integer vectors.
std::vector<std::vector<Rational>> rationalize_direction(
    const std::vector<double>& t);

}  // namespace hr

#endif  // HR_SAMPLING_HPP
