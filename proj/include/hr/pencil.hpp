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

#ifndef HR_PENCIL_HPP
#define HR_PENCIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hr/matrix.hpp"
#include "hr/polynomial.hpp"

namespace hr {

enum class PencilStatus { ProvenNonsingular, Refuted, SampledClean };
enum class PencilMethod {
  CliffordCertificate,
  ExactN1,
  ExactN2Sturm,
  Sampling,
};

std::string to_string(PencilStatus s);
std::string to_string(PencilMethod m);

/// Outcome of the "every nonzero combination invertible" question.
/// A refutation carries either an exact rational combination with zero
/// determinant, or (n = 2 with an irrational crossing) an interval on
/// which the squarefree pencil determinant provably changes sign.
struct PencilVerdict {
  PencilStatus status = PencilStatus::SampledClean;
  PencilMethod method = PencilMethod::Sampling;
  std::optional<std::vector<Rational>> counterexample;
  std::optional<std::pair<Rational, Rational>> root_interval;
  long samples = 0;
  std::optional<double> min_sigma_observed;
};

/// det(a + s*b) as an exact polynomial in s (interpolated).
Polynomial pencil_det_poly(const RationalMatrix& a, const RationalMatrix& b);

/// +1 or -1 when the family satisfies T_i T_j + T_j T_i = 2 eps delta_ij I
/// exactly; either sign forces every nonzero real combination invertible.
std::optional<int> clifford_certificate_epsilon(
    const std::vector<RationalMatrix>& mats);

/// Decides or probes span nonsingularity. Exact for families with a
/// Clifford certificate and for n <= 2 (Sturm); n >= 3 without a
/// certificate falls back to seeded sphere sampling, where any floating
/// near-kernel must be confirmed by an exact zero determinant before the
/// verdict may say refuted.
PencilVerdict check_span(const std::vector<RationalMatrix>& mats,
                         long sampling_budget = 20000, uint64_t seed = 0);

/// Searches for an exact rational combination with zero determinant:
/// deterministic sparse candidates, exact n <= 2 root recovery, then
/// seeded sampling with floating refinement and rationalization.
std::optional<std::vector<Rational>> refute_search(
    const std::vector<RationalMatrix>& mats, uint64_t seed = 0,
    long budget = 20000);

}  // namespace hr

#endif  // HR_PENCIL_HPP
