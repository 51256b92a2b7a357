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

#include "hr/pencil.hpp"

#include <algorithm>

#include "hr/sampling.hpp"

namespace hr {

std::string to_string(PencilStatus s) {
  switch (s) {
    case PencilStatus::ProvenNonsingular: return "proven_nonsingular";
    case PencilStatus::Refuted: return "refuted";
    case PencilStatus::SampledClean: return "sampled_clean";
  }
  return "?";
}

std::string to_string(PencilMethod m) {
  switch (m) {
    case PencilMethod::CliffordCertificate: return "clifford_certificate";
    case PencilMethod::ExactN1: return "exact_n1";
    case PencilMethod::ExactN2Sturm: return "exact_n2_sturm";
    case PencilMethod::Sampling: return "sampling";
  }
  return "?";
}

Polynomial pencil_det_poly(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("pencil needs two square matrices of one size");
  const int n = a.rows();
  std::vector<std::pair<Rational, Rational>> nodes;
  nodes.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Rational s(k);
    nodes.emplace_back(s, det(a + s * b));
  }
  return lagrange_interpolate(nodes);
}

std::optional<int> clifford_certificate_epsilon(
    const std::vector<RationalMatrix>& mats) {
  if (mats.empty()) return std::nullopt;
  const int dim = mats.front().rows();
  const RationalMatrix id = RationalMatrix::identity(dim);
  const RationalMatrix sq = mats.front() * mats.front();
  int eps;
  if (sq == id)
    eps = 1;
  else if (sq == -id)
    eps = -1;
  else
    return std::nullopt;
  const RationalMatrix diag = Rational(2 * eps) * id;
  const RationalMatrix zero(dim, dim);
  for (size_t i = 0; i < mats.size(); ++i)
    for (size_t j = i; j < mats.size(); ++j) {
      const RationalMatrix anti = mats[i] * mats[j] + mats[j] * mats[i];
      if (anti != (i == j ? diag : zero)) return std::nullopt;
    }
  return eps;
}

namespace {

void require_square_stack(const std::vector<RationalMatrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("empty matrix list");
  const int dim = mats.front().rows();
  for (const auto& m : mats)
    if (!m.is_square() || m.rows() != dim)
      throw std::invalid_argument("matrices must be square of one size");
}

std::optional<std::vector<Rational>> exact_zero_at(
    const std::vector<RationalMatrix>& mats, const std::vector<Rational>& t) {
  const int dim = mats.front().rows();
  RationalMatrix acc(dim, dim);
  bool nonzero = false;
  for (size_t i = 0; i < mats.size(); ++i) {
    if (t[i] == 0) continue;
    nonzero = true;
    acc = acc + t[i] * mats[i];
  }
  if (!nonzero) return std::nullopt;
  if (det(acc) != 0) return std::nullopt;
  return t;
}

// Deterministic exact probes: axis directions and, for small problems,
// every {-1,0,1} pattern.
std::optional<std::vector<Rational>> sparse_candidates(
    const std::vector<RationalMatrix>& mats) {
  const int n = static_cast<int>(mats.size());
  std::vector<Rational> t(n);
  for (int i = 0; i < n; ++i) {
    std::fill(t.begin(), t.end(), Rational(0));
    t[i] = 1;
    if (auto hit = exact_zero_at(mats, t)) return hit;
  }
  const int dim = mats.front().rows();
  long patterns = 1;
  for (int i = 0; i < n && patterns <= 2187; ++i) patterns *= 3;
  if (patterns <= 2187 && dim <= 12) {
    for (long code = 1; code < patterns; ++code) {
      long c = code;
      for (int i = 0; i < n; ++i) {
        t[i] = Rational((c % 3) - 1);
        c /= 3;
      }
      if (auto hit = exact_zero_at(mats, t)) return hit;
    }
  } else {
    // Pairwise +/- probes only.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (const long sgn2 : {1L, -1L}) {
          std::fill(t.begin(), t.end(), Rational(0));
          t[i] = 1;
          t[j] = sgn2;
          if (auto hit = exact_zero_at(mats, t)) return hit;
        }
  }
  return std::nullopt;
}

// Exact n = 2 analysis via the pencil determinant polynomial.
struct PairAnalysis {
  bool refuted = false;
  std::optional<std::vector<Rational>> counterexample;
  std::optional<std::pair<Rational, Rational>> interval;
};

PairAnalysis analyze_pair(const RationalMatrix& a, const RationalMatrix& b) {
  PairAnalysis out;
  if (det(a) == 0) {
    out.refuted = true;
    out.counterexample = std::vector<Rational>{1, 0};
    return out;
  }
  if (det(b) == 0) {
    out.refuted = true;
    out.counterexample = std::vector<Rational>{0, 1};
    return out;
  }
  const Polynomial p = pencil_det_poly(a, b);
  const auto root = isolate_real_root(p);
  if (!root) return out;
  out.refuted = true;
  if (root->exact_root) {
    out.counterexample = std::vector<Rational>{1, *root->exact_root};
  } else {
    out.interval = root->interval;
  }
  return out;
}

std::optional<std::vector<Rational>> confirm_candidates(
    const std::vector<RationalMatrix>& mats, const std::vector<double>& t) {
  for (const auto& cand : rationalize_direction(t))
    if (auto hit = exact_zero_at(mats, cand)) return hit;
  return std::nullopt;
}

struct SampleStats {
  long samples = 0;
  std::optional<double> min_sigma;
};

std::optional<std::vector<Rational>> sample_refute(
    const std::vector<RationalMatrix>& mats, uint64_t seed, long budget,
    SampleStats& stats) {
  const int n = static_cast<int>(mats.size());
  const DoubleMats dm = DoubleMats::from(mats);
  const double threshold = 1e-7;
  const long chunk = 2048;
  long done = 0;
  while (done < budget) {
    const long count = std::min(chunk, budget - done);
    const auto scan = scan_min_sigma(dm, seed, done, count, threshold, 8);
    stats.samples += scan.samples;
    if (!stats.min_sigma || scan.min_sigma < *stats.min_sigma)
      stats.min_sigma = scan.min_sigma;
    for (const uint64_t idx : scan.candidates) {
      const auto t0 = sphere_point(n, seed, idx);
      if (auto hit = confirm_candidates(mats, t0)) return hit;
      const auto refined = refine_min_sigma(dm, t0, mix_seed(seed, idx), 200);
      if (auto hit = confirm_candidates(mats, refined)) return hit;
    }
    // Also refine the chunk minimum even when it missed the threshold;
    // planted kernels often sit in a shallow basin.
    const auto tmin = sphere_point(n, seed, scan.argmin_index);
    const auto refined =
        refine_min_sigma(dm, tmin, mix_seed(seed, scan.argmin_index), 200);
    if (auto hit = confirm_candidates(mats, refined)) return hit;
    done += count;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> refute_search(
    const std::vector<RationalMatrix>& mats, uint64_t seed, long budget) {
  require_square_stack(mats);
  const int n = static_cast<int>(mats.size());

  if (auto hit = sparse_candidates(mats)) return hit;
  if (n == 1) return std::nullopt;  // covered by the axis probe
  if (n == 2) {
    const auto pair = analyze_pair(mats[0], mats[1]);
    // Only exact rational roots can be reported here.
    return pair.counterexample;
  }

  SampleStats stats;
  return sample_refute(mats, seed, budget, stats);
}

PencilVerdict check_span(const std::vector<RationalMatrix>& mats,
                         long sampling_budget, uint64_t seed) {
  require_square_stack(mats);
  const int n = static_cast<int>(mats.size());
  PencilVerdict v;

  if (const auto eps = clifford_certificate_epsilon(mats)) {
    (void)eps;
    v.status = PencilStatus::ProvenNonsingular;
    v.method = PencilMethod::CliffordCertificate;
    return v;
  }

  if (n == 1) {
    v.method = PencilMethod::ExactN1;
    if (det(mats[0]) == 0) {
      v.status = PencilStatus::Refuted;
      v.counterexample = std::vector<Rational>{1};
    } else {
      v.status = PencilStatus::ProvenNonsingular;
    }
    return v;
  }

  if (n == 2) {
    v.method = PencilMethod::ExactN2Sturm;
    const auto pair = analyze_pair(mats[0], mats[1]);
    if (!pair.refuted) {
      v.status = PencilStatus::ProvenNonsingular;
    } else {
      v.status = PencilStatus::Refuted;
      v.counterexample = pair.counterexample;
      v.root_interval = pair.interval;
    }
    return v;
  }

  v.method = PencilMethod::Sampling;
  if (auto hit = sparse_candidates(mats)) {
    v.status = PencilStatus::Refuted;
    v.counterexample = std::move(hit);
    return v;
  }
  SampleStats stats;
  if (auto hit = sample_refute(mats, seed, sampling_budget, stats)) {
    v.status = PencilStatus::Refuted;
    v.counterexample = std::move(hit);
    v.samples = stats.samples;
    return v;
  }
  v.status = PencilStatus::SampledClean;
  v.samples = stats.samples;
  v.min_sigma_observed = stats.min_sigma;
  return v;
}

}  // namespace hr
