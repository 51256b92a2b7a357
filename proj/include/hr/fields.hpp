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

#ifndef HR_FIELDS_HPP
#define HR_FIELDS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hr/gaussian_rational.hpp"
#include "hr/matrix.hpp"
#include "hr/pencil.hpp"

namespace hr {

/// Linear group action on R^dim \ {0}, presented by the images of chosen
/// algebra elements. The fundamental vector field of generator i at x is
/// the exact product generators[i] * x.
struct LinearAction {
  int dim = 0;
  std::vector<RationalMatrix> generators;
};

/// X_i(x) = A_i x, exact. x must be nonzero (the origin is not a point of
/// the punctured space). Index is 0-based.
std::vector<Rational> fundamental_field_at(const LinearAction& action, int i,
                                           const std::vector<Rational>& x);

struct FieldSampleReport {
  std::vector<std::vector<Rational>> points;
  std::vector<int> ranks;
  bool independent_everywhere_sampled = true;
};

/// Exact ranks of [A_1 x | ... | A_n x] at seeded sample points: all
/// standard basis vectors first, then random integer points, then any
/// caller-supplied adversarial points.
FieldSampleReport sample_pointwise_independence(
    const LinearAction& action, int points, uint64_t seed,
    const std::vector<std::vector<Rational>>& extra_points = {});

/// Serial and OpenMP rank kernels behind the sampler; both produce the
/// same report for the same input.
std::vector<int> scan_ranks_serial(const LinearAction& action,
                                   const std::vector<std::vector<Rational>>& pts);
std::vector<int> scan_ranks_parallel(
    const LinearAction& action, const std::vector<std::vector<Rational>>& pts);

/// The covariant derivative of the fundamental field of generator i under
/// the standard flat connection: a constant endomorphism whose matrix in
/// the coordinate frame is the generator itself.
RationalMatrix flat_connection_operator(const LinearAction& action, int i);

struct RhoMinusEstimate {
  int value = 0;
  std::vector<int> witness_indices;
  bool lower_bound_only = false;
  std::optional<long> table_value;
};

/// Largest subset of the generators satisfying A_i A_j + A_j A_i =
/// 2 delta_ij I exactly (clique search with a work cap). Optionally
/// cross-checked against a closed-form table value.
RhoMinusEstimate estimate_rho_minus(const LinearAction& action,
                                    std::optional<long> table_crosscheck = {});

struct RhoGEstimate {
  int value = 0;
  std::vector<int> witness_indices;
  PencilVerdict verdict;  // certificate for the best subset found
  bool lower_bound_only = false;
};

/// Largest k with a k-subset of the generators whose span check is proven
/// or sampled clean; the epistemic status of the certificate is kept.
RhoGEstimate estimate_rho_g(const LinearAction& action, long budget = 20000,
                            uint64_t seed = 0);

struct SkewCheckReport {
  bool all_skew = true;
  std::vector<int> failing;  // indices of generators violating the identity
};

/// Verifies A_i^T M + M A_i = 0 for every generator: simultaneously the
/// infinitesimal isometry condition for the constant metric M and the
/// metric-skewness of the connection operators. M must be symmetric
/// positive definite.
SkewCheckReport killing_skew_check(const LinearAction& action,
                                   const RationalMatrix& metric);

struct CliffordStructureWitness {
  int rank_n = 0;
  RationalMatrix metric;
  std::vector<RationalMatrix> frame_images;
};

struct CliffordStructureResult {
  std::optional<CliffordStructureWitness> witness;
  std::vector<int> best_partial;  // generator indices of the best family
};

/// Searches the generators for n matrices that are metric-skew and satisfy
/// T_i T_j + T_j T_i = -2 delta_ij I exactly; such a frame realizes a rank
/// n Clifford structure on the trivial bundle. On failure the best partial
/// family is reported.
CliffordStructureResult assemble_clifford_structure(
    const LinearAction& action, const RationalMatrix& metric, int n);

/// Realification of a complex action: each generator A + iB becomes the
/// real 2N x 2N block matrix [[A, -B], [B, A]].
LinearAction realify(
    const std::vector<std::pair<RationalMatrix, RationalMatrix>>& generators);

/// Span estimate computed on the complex side with exact Gaussian-rational
/// arithmetic (complex determinants; real-root analysis of the complex
/// pencil for pairs). Subsets beyond the exact reach are checked on their
/// realification.
RhoGEstimate estimate_rho_g_complex(
    const std::vector<std::pair<RationalMatrix, RationalMatrix>>& generators,
    long budget = 20000, uint64_t seed = 0);

}  // namespace hr

#endif  // HR_FIELDS_HPP
