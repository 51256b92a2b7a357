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

#include "hr/fields.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>

#include "hr/polynomial.hpp"
#include "hr/rng.hpp"

namespace hr {

namespace {

void require_action(const LinearAction& action) {
  for (const auto& g : action.generators)
    if (!g.is_square() || g.rows() != action.dim)
      throw std::invalid_argument("generator size does not match the action");
}

}  // namespace

std::vector<Rational> fundamental_field_at(const LinearAction& action, int i,
                                           const std::vector<Rational>& x) {
  require_action(action);
  if (i < 0 || i >= static_cast<int>(action.generators.size()))
    throw std::invalid_argument("generator index out of range");
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; }))
    throw std::invalid_argument("the origin is not a point of the space");
  return mat_vec(action.generators[i], x);
}

namespace {

int rank_at_point(const LinearAction& action,
                  const std::vector<Rational>& x) {
  const int n = static_cast<int>(action.generators.size());
  RationalMatrix columns(action.dim, n);
  for (int k = 0; k < n; ++k) {
    const auto col = mat_vec(action.generators[k], x);
    for (int r = 0; r < action.dim; ++r) columns.at(r, k) = col[r];
  }
  return rank(columns);
}

}  // namespace

std::vector<int> scan_ranks_serial(
    const LinearAction& action, const std::vector<std::vector<Rational>>& pts) {
  std::vector<int> ranks(pts.size());
  for (size_t p = 0; p < pts.size(); ++p)
    ranks[p] = rank_at_point(action, pts[p]);
  return ranks;
}

std::vector<int> scan_ranks_parallel(
    const LinearAction& action, const std::vector<std::vector<Rational>>& pts) {
  std::vector<int> ranks(pts.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long p = 0; p < static_cast<long>(pts.size()); ++p)
    ranks[p] = rank_at_point(action, pts[p]);
  return ranks;
}

FieldSampleReport sample_pointwise_independence(
    const LinearAction& action, int points, uint64_t seed,
    const std::vector<std::vector<Rational>>& extra_points) {
  require_action(action);
  const int n = static_cast<int>(action.generators.size());
  if (n > action.dim)
    throw std::invalid_argument("more generators than tangent dimensions");

  FieldSampleReport report;
  for (int i = 0; i < action.dim; ++i) {
    std::vector<Rational> e(action.dim);
    e[i] = 1;
    report.points.push_back(std::move(e));
  }
  for (int p = action.dim; p < points; ++p) {
    SplitMix64 g(mix_seed(seed, static_cast<uint64_t>(p)));
    std::vector<Rational> x(action.dim);
    bool nonzero = false;
    for (auto& v : x) {
      v = Rational(g.next_in(-9, 9));
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) x[0] = 1;
    report.points.push_back(std::move(x));
  }
  for (const auto& x : extra_points) {
    if (static_cast<int>(x.size()) != action.dim)
      throw std::invalid_argument("extra point has wrong dimension");
    if (std::all_of(x.begin(), x.end(),
                    [](const Rational& v) { return v == 0; }))
      throw std::invalid_argument("the origin is not a point of the space");
    report.points.push_back(x);
  }

  report.ranks = report.points.size() >= 32
                     ? scan_ranks_parallel(action, report.points)
                     : scan_ranks_serial(action, report.points);
  report.independent_everywhere_sampled =
      std::all_of(report.ranks.begin(), report.ranks.end(),
                  [n](int r) { return r == n; });
  return report;
}

RationalMatrix flat_connection_operator(const LinearAction& action, int i) {
  require_action(action);
  if (i < 0 || i >= static_cast<int>(action.generators.size()))
    throw std::invalid_argument("generator index out of range");
  // The field's coefficient functions are linear, so differentiating them
  // reproduces the generator matrix itself.
  return action.generators[i];
}

namespace {

// Branch-and-bound maximum clique with a node budget. Returns indices into
// `nodes`; sets `capped` when the search ran out of budget.
std::vector<int> max_clique(const std::vector<std::vector<bool>>& adj,
                            long node_budget, bool& capped, int target = -1) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> best, current;
  long visited = 0;
  capped = false;

  std::function<void(std::vector<int>&)> expand =
      [&](std::vector<int>& allowed) {
        if (capped) return;
        if (++visited > node_budget) {
          capped = true;
          return;
        }
        if (current.size() > best.size()) best = current;
        if (target > 0 && static_cast<int>(best.size()) >= target) return;
        if (current.size() + allowed.size() <= best.size()) return;
        for (size_t idx = 0; idx < allowed.size(); ++idx) {
          if (current.size() + (allowed.size() - idx) <= best.size()) return;
          const int v = allowed[idx];
          current.push_back(v);
          std::vector<int> next;
          for (size_t j = idx + 1; j < allowed.size(); ++j)
            if (adj[v][allowed[j]]) next.push_back(allowed[j]);
          expand(next);
          current.pop_back();
          if (capped) return;
          if (target > 0 && static_cast<int>(best.size()) >= target) return;
        }
      };

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  expand(all);
  return best;
}

}  // namespace

RhoMinusEstimate estimate_rho_minus(const LinearAction& action,
                                    std::optional<long> table_crosscheck) {
  require_action(action);
  RhoMinusEstimate est;
  est.table_value = table_crosscheck;
  const RationalMatrix id = RationalMatrix::identity(action.dim);

  std::vector<int> nodes;
  for (size_t i = 0; i < action.generators.size(); ++i)
    if (action.generators[i] * action.generators[i] == id)
      nodes.push_back(static_cast<int>(i));
  if (nodes.empty()) return est;

  const int m = static_cast<int>(nodes.size());
  const RationalMatrix zero(action.dim, action.dim);
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& ga = action.generators[nodes[a]];
      const auto& gb = action.generators[nodes[b]];
      adj[a][b] = adj[b][a] = (ga * gb + gb * ga == zero);
    }

  bool capped = false;
  const auto clique = max_clique(adj, 200000, capped);
  est.value = static_cast<int>(clique.size());
  for (int c : clique) est.witness_indices.push_back(nodes[c]);
  std::sort(est.witness_indices.begin(), est.witness_indices.end());
  est.lower_bound_only = capped;
  return est;
}

namespace {

struct SubsetVerdict {
  bool pass = false;
  PencilVerdict verdict;
};

SubsetVerdict judge_subset(const std::vector<RationalMatrix>& mats,
                           long budget, uint64_t seed) {
  SubsetVerdict out;
  out.verdict = check_span(mats, budget, seed);
  out.pass = out.verdict.status != PencilStatus::Refuted;
  return out;
}

}  // namespace

RhoGEstimate estimate_rho_g(const LinearAction& action, long budget,
                            uint64_t seed) {
  require_action(action);
  RhoGEstimate est;
  const int n_gens = static_cast<int>(action.generators.size());
  if (n_gens == 0) return est;

  // Singles, exact.
  std::vector<int> singles;
  for (int i = 0; i < n_gens; ++i)
    if (det(action.generators[i]) != 0) singles.push_back(i);
  if (singles.empty()) return est;
  est.value = 1;
  est.witness_indices = {singles.front()};
  est.verdict = check_span({action.generators[singles.front()]}, budget, seed);

  // Pairs, exact; the pair table also prunes larger subsets.
  const int m = static_cast<int>(singles.size());
  std::vector<std::vector<bool>> pair_ok(m, std::vector<bool>(m, false));
  std::vector<std::vector<int>> level;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto v = judge_subset({action.generators[singles[a]],
                                   action.generators[singles[b]]},
                                  budget, seed);
      pair_ok[a][b] = pair_ok[b][a] = v.pass;
      if (v.pass && est.value < 2) {
        est.value = 2;
        est.witness_indices = {singles[a], singles[b]};
        est.verdict = v.verdict;
      }
      if (v.pass) level.push_back({a, b});
    }

  const int k_max = std::min(action.dim, m);
  long sampled_checks = 0;
  const long sampled_cap = 64;
  const size_t level_cap = 512;
  for (int k = 3; k <= k_max && !level.empty(); ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& subset : level) {
      for (int c = subset.back() + 1; c < m; ++c) {
        const bool compatible =
            std::all_of(subset.begin(), subset.end(),
                        [&](int a) { return pair_ok[a][c]; });
        if (!compatible) continue;
        std::vector<int> cand = subset;
        cand.push_back(c);
        std::vector<RationalMatrix> mats;
        mats.reserve(cand.size());
        for (int idx : cand) mats.push_back(action.generators[singles[idx]]);
        const bool exact = clifford_certificate_epsilon(mats).has_value();
        if (!exact) {
          if (sampled_checks >= sampled_cap) {
            est.lower_bound_only = true;
            continue;
          }
          ++sampled_checks;
        }
        const auto v = judge_subset(mats, budget, seed);
        if (!v.pass) continue;
        if (k > est.value) {
          est.value = k;
          est.witness_indices.clear();
          for (int idx : cand) est.witness_indices.push_back(singles[idx]);
          est.verdict = v.verdict;
        }
        next.push_back(std::move(cand));
        if (next.size() >= level_cap) {
          est.lower_bound_only = true;
          break;
        }
      }
      if (next.size() >= level_cap) break;
    }
    level = std::move(next);
  }
  return est;
}

SkewCheckReport killing_skew_check(const LinearAction& action,
                                   const RationalMatrix& metric) {
  require_action(action);
  if (!is_positive_definite(metric))
    throw std::invalid_argument("metric must be symmetric positive definite");
  if (metric.rows() != action.dim)
    throw std::invalid_argument("metric size does not match the action");
  SkewCheckReport report;
  const RationalMatrix zero(action.dim, action.dim);
  for (size_t i = 0; i < action.generators.size(); ++i) {
    const auto& g = action.generators[i];
    if (!(g.transpose() * metric + metric * g == zero)) {
      report.all_skew = false;
      report.failing.push_back(static_cast<int>(i));
    }
  }
  return report;
}

CliffordStructureResult assemble_clifford_structure(
    const LinearAction& action, const RationalMatrix& metric, int n) {
  require_action(action);
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (!is_positive_definite(metric))
    throw std::invalid_argument("metric must be symmetric positive definite");
  if (metric.rows() != action.dim)
    throw std::invalid_argument("metric size does not match the action");

  const RationalMatrix id = RationalMatrix::identity(action.dim);
  const RationalMatrix zero(action.dim, action.dim);
  std::vector<int> nodes;
  for (size_t i = 0; i < action.generators.size(); ++i) {
    const auto& g = action.generators[i];
    const bool square_minus = (g * g == -id);
    const bool metric_skew = (g.transpose() * metric + metric * g == zero);
    if (square_minus && metric_skew) nodes.push_back(static_cast<int>(i));
  }

  CliffordStructureResult result;
  if (nodes.empty()) return result;
  const int m = static_cast<int>(nodes.size());
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& ga = action.generators[nodes[a]];
      const auto& gb = action.generators[nodes[b]];
      adj[a][b] = adj[b][a] = (ga * gb + gb * ga == zero);
    }
  bool capped = false;
  const auto clique = max_clique(adj, 200000, capped, n);
  for (int c : clique) result.best_partial.push_back(nodes[c]);
  std::sort(result.best_partial.begin(), result.best_partial.end());
  if (static_cast<int>(clique.size()) >= n) {
    CliffordStructureWitness w;
    w.rank_n = n;
    w.metric = metric;
    for (int i = 0; i < n; ++i)
      w.frame_images.push_back(action.generators[result.best_partial[i]]);
    result.witness = std::move(w);
  }
  return result;
}

LinearAction realify(
    const std::vector<std::pair<RationalMatrix, RationalMatrix>>& generators) {
  LinearAction out;
  if (generators.empty())
    throw std::invalid_argument("empty complex generator list");
  out.dim = 2 * generators.front().first.rows();
  for (const auto& [re, im] : generators) {
    if (re.rows() != generators.front().first.rows() || !re.is_square())
      throw std::invalid_argument("complex generators must share one size");
    out.generators.push_back(realify_matrix(re, im));
  }
  return out;
}

namespace {

// det(M1 + s * M2) over the Gaussian rationals, via interpolation of the
// real and imaginary value sequences.
std::pair<Polynomial, Polynomial> complex_pencil_parts(const ComplexMatrix& a,
                                                       const ComplexMatrix& b) {
  const int n = a.rows();
  std::vector<std::pair<Rational, Rational>> re_nodes, im_nodes;
  for (int k = 0; k <= n; ++k) {
    const GaussianRational s{Rational(k), Rational(0)};
    const GaussianRational d = cdet(a + s * b);
    re_nodes.emplace_back(Rational(k), d.re);
    im_nodes.emplace_back(Rational(k), d.im);
  }
  return {lagrange_interpolate(re_nodes), lagrange_interpolate(im_nodes)};
}

// Exact span decision for a complex pair under real coefficients: the
// combination t1 M1 + t2 M2 is singular iff the real and imaginary parts
// of the pencil determinant vanish together.
SubsetVerdict judge_complex_pair(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  SubsetVerdict out;
  out.verdict.method = PencilMethod::ExactN2Sturm;
  if (cdet(a).is_zero()) {
    out.verdict.status = PencilStatus::Refuted;
    out.verdict.counterexample = std::vector<Rational>{1, 0};
    return out;
  }
  if (cdet(b).is_zero()) {
    out.verdict.status = PencilStatus::Refuted;
    out.verdict.counterexample = std::vector<Rational>{0, 1};
    return out;
  }
  const auto [re, im] = complex_pencil_parts(a, b);
  Polynomial common;
  if (im.is_zero())
    common = re;
  else if (re.is_zero())
    common = im;
  else
    common = gcd(re, im);
  if (common.degree() < 1 || count_real_roots(common) == 0) {
    out.verdict.status = PencilStatus::ProvenNonsingular;
    out.pass = true;
    return out;
  }
  out.verdict.status = PencilStatus::Refuted;
  const auto root = isolate_real_root(common);
  if (root && root->exact_root)
    out.verdict.counterexample = std::vector<Rational>{1, *root->exact_root};
  else if (root)
    out.verdict.root_interval = root->interval;
  return out;
}

std::optional<int> complex_clifford_epsilon(
    const std::vector<ComplexMatrix>& mats) {
  if (mats.empty()) return std::nullopt;
  const int dim = mats.front().rows();
  const ComplexMatrix id = ComplexMatrix::identity(dim);
  const GaussianRational minus1{Rational(-1), Rational(0)};
  const ComplexMatrix sq = mats.front() * mats.front();
  int eps;
  if (sq == id)
    eps = 1;
  else if (sq == minus1 * id)
    eps = -1;
  else
    return std::nullopt;
  const ComplexMatrix zero(dim, dim);
  const ComplexMatrix diag =
      GaussianRational{Rational(2 * eps), Rational(0)} * id;
  for (size_t i = 0; i < mats.size(); ++i)
    for (size_t j = i; j < mats.size(); ++j) {
      const ComplexMatrix anti = mats[i] * mats[j] + mats[j] * mats[i];
      if (!(anti == (i == j ? diag : zero))) return std::nullopt;
    }
  return eps;
}

}  // namespace

RhoGEstimate estimate_rho_g_complex(
    const std::vector<std::pair<RationalMatrix, RationalMatrix>>& generators,
    long budget, uint64_t seed) {
  if (generators.empty())
    throw std::invalid_argument("empty complex generator list");
  std::vector<ComplexMatrix> cmats;
  for (const auto& [re, im] : generators)
    cmats.push_back(ComplexMatrix::from_parts(re, im));
  const int dim = cmats.front().rows();
  const int n_gens = static_cast<int>(cmats.size());

  RhoGEstimate est;
  std::vector<int> singles;
  for (int i = 0; i < n_gens; ++i)
    if (!cdet(cmats[i]).is_zero()) singles.push_back(i);
  if (singles.empty()) return est;
  est.value = 1;
  est.witness_indices = {singles.front()};
  est.verdict.status = PencilStatus::ProvenNonsingular;
  est.verdict.method = PencilMethod::ExactN1;

  const int m = static_cast<int>(singles.size());
  std::vector<std::vector<bool>> pair_ok(m, std::vector<bool>(m, false));
  std::vector<std::vector<int>> level;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto v = judge_complex_pair(cmats[singles[a]], cmats[singles[b]]);
      pair_ok[a][b] = pair_ok[b][a] = v.pass;
      if (v.pass && est.value < 2) {
        est.value = 2;
        est.witness_indices = {singles[a], singles[b]};
        est.verdict = v.verdict;
      }
      if (v.pass) level.push_back({a, b});
    }

  const int k_max = std::min(2 * dim, m);
  long sampled_checks = 0;
  const long sampled_cap = 64;
  const size_t level_cap = 512;
  for (int k = 3; k <= k_max && !level.empty(); ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& subset : level) {
      for (int c = subset.back() + 1; c < m; ++c) {
        const bool compatible =
            std::all_of(subset.begin(), subset.end(),
                        [&](int a) { return pair_ok[a][c]; });
        if (!compatible) continue;
        std::vector<int> cand = subset;
        cand.push_back(c);
        std::vector<ComplexMatrix> sub;
        for (int idx : cand) sub.push_back(cmats[singles[idx]]);
        SubsetVerdict v;
        if (complex_clifford_epsilon(sub)) {
          v.pass = true;
          v.verdict.status = PencilStatus::ProvenNonsingular;
          v.verdict.method = PencilMethod::CliffordCertificate;
        } else {
          if (sampled_checks >= sampled_cap) {
            est.lower_bound_only = true;
            continue;
          }
          ++sampled_checks;
          // Fall back to the realified family for the sampling path.
          std::vector<RationalMatrix> real_mats;
          for (int idx : cand)
            real_mats.push_back(realify_matrix(generators[singles[idx]].first,
                                               generators[singles[idx]].second));
          v = judge_subset(real_mats, budget, seed);
        }
        if (!v.pass) continue;
        if (k > est.value) {
          est.value = k;
          est.witness_indices.clear();
          for (int idx : cand) est.witness_indices.push_back(singles[idx]);
          est.verdict = v.verdict;
        }
        next.push_back(std::move(cand));
        if (next.size() >= level_cap) {
          est.lower_bound_only = true;
          break;
        }
      }
      if (next.size() >= level_cap) break;
    }
    level = std::move(next);
  }
  return est;
}

}  // namespace hr
