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

#include "hr/sampling.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

namespace hr {

DoubleMats DoubleMats::from(const std::vector<RationalMatrix>& ms) {
  DoubleMats d;
  if (ms.empty()) return d;
  d.dim = ms.front().rows();
  for (const auto& m : ms) d.mats.push_back(m.to_doubles());
  return d;
}

std::vector<double> sphere_point(int n, uint64_t seed, uint64_t index) {
  SplitMix64 g(mix_seed(seed, index));
  std::vector<double> t(n);
  double norm2 = 0;
  for (int i = 0; i < n; ++i) {
    t[i] = g.next_gaussian();
    norm2 += t[i] * t[i];
  }
  if (norm2 < 1e-300) {
    std::fill(t.begin(), t.end(), 0.0);
    t[0] = 1.0;
    return t;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : t) v *= inv;
  return t;
}

double min_singular_value(const DoubleMats& m, const std::vector<double>& t) {
  const int n = m.dim;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (size_t k = 0; k < m.mats.size(); ++k) {
    const auto& flat = m.mats[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) += t[k] * flat[i * n + j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues()(n - 1);
}

SigmaScanResult scan_min_sigma_serial(const DoubleMats& m, uint64_t seed,
                                      uint64_t begin, long count,
                                      double threshold, int max_candidates) {
  SigmaScanResult r;
  r.min_sigma = std::numeric_limits<double>::infinity();
  r.samples = count;
  const int n = static_cast<int>(m.mats.size());
  for (long k = 0; k < count; ++k) {
    const uint64_t idx = begin + static_cast<uint64_t>(k);
    const double sigma = min_singular_value(m, sphere_point(n, seed, idx));
    if (sigma < r.min_sigma) {
      r.min_sigma = sigma;
      r.argmin_index = idx;
    }
    if (sigma < threshold &&
        static_cast<int>(r.candidates.size()) < max_candidates)
      r.candidates.push_back(idx);
  }
  return r;
}

SigmaScanResult scan_min_sigma_parallel(const DoubleMats& m, uint64_t seed,
                                        uint64_t begin, long count,
                                        double threshold, int max_candidates) {
  SigmaScanResult r;
  r.min_sigma = std::numeric_limits<double>::infinity();
  r.samples = count;
  const int n = static_cast<int>(m.mats.size());

  std::vector<SigmaScanResult> locals;
#pragma omp parallel
  {
#pragma omp single
    locals.resize(omp_get_num_threads(), r);
    SigmaScanResult& local = locals[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long k = 0; k < count; ++k) {
      const uint64_t idx = begin + static_cast<uint64_t>(k);
      const double sigma = min_singular_value(m, sphere_point(n, seed, idx));
      if (sigma < local.min_sigma ||
          (sigma == local.min_sigma && idx < local.argmin_index)) {
        local.min_sigma = sigma;
        local.argmin_index = idx;
      }
      if (sigma < threshold) local.candidates.push_back(idx);
    }
  }

  for (const auto& local : locals) {
    if (local.min_sigma < r.min_sigma ||
        (local.min_sigma == r.min_sigma && local.argmin_index < r.argmin_index))
    {
      r.min_sigma = local.min_sigma;
      r.argmin_index = local.argmin_index;
    }
    r.candidates.insert(r.candidates.end(), local.candidates.begin(),
                        local.candidates.end());
  }
  std::sort(r.candidates.begin(), r.candidates.end());
  if (static_cast<int>(r.candidates.size()) > max_candidates)
    r.candidates.resize(max_candidates);
  return r;
}

SigmaScanResult scan_min_sigma(const DoubleMats& m, uint64_t seed,
                               uint64_t begin, long count, double threshold,
                               int max_candidates) {
  if (count >= 512)
    return scan_min_sigma_parallel(m, seed, begin, count, threshold,
                                   max_candidates);
  return scan_min_sigma_serial(m, seed, begin, count, threshold,
                               max_candidates);
}

std::vector<double> refine_min_sigma(const DoubleMats& m,
                                     std::vector<double> t, uint64_t seed,
                                     int iterations) {
  SplitMix64 g(mix_seed(seed, 0x5eedULL));
  double best = min_singular_value(m, t);
  double radius = 0.25;
  std::vector<double> cand(t.size());
  for (int it = 0; it < iterations; ++it) {
    double norm2 = 0;
    for (size_t i = 0; i < t.size(); ++i) {
      cand[i] = t[i] + radius * g.next_gaussian();
      norm2 += cand[i] * cand[i];
    }
    if (norm2 < 1e-300) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : cand) v *= inv;
    const double sigma = min_singular_value(m, cand);
    if (sigma < best) {
      best = sigma;
      t = cand;
    } else {
      radius *= 0.93;
      if (radius < 1e-12) break;
    }
  }
  return t;
}

namespace {

// Best rational approximation of x (|x| <= 1) with denominator <= bound,
// by continued-fraction convergents.
Rational approximate(double x, long bound) {
  if (!std::isfinite(x)) return 0;
  const bool neg = x < 0;
  x = std::fabs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int step = 0; step < 64; ++step) {
    const double fl = std::floor(frac);
    if (fl > 1e15) break;  // remainder is numerically zero
    const long a = static_cast<long>(fl);
    if (q1 > 0 && a > (bound - q0) / q1) break;  // next q would pass bound
    const long p2 = a * p1 + p0;
    const long q2 = a * q1 + q0;
    if (q2 > bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return 0;
  Rational r = rat(p1, q1);
  return neg ? Rational(-r) : r;
}

std::vector<Rational> clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> z(v.size());
  Integer g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    z[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  std::vector<Rational> out(v.size());
  if (g == 0) return out;
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat(z[i], g);
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> rationalize_direction(
    const std::vector<double>& t) {
  std::vector<std::vector<Rational>> out;
  std::set<std::vector<std::string>> seen;
  const auto push = [&](std::vector<Rational> v) {
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) return;
    v = clear_denominators(v);
    std::vector<std::string> key;
    key.reserve(v.size());
    for (const auto& x : v) key.push_back(rat_str(x));
    if (seen.insert(key).second) out.push_back(std::move(v));
  };

  const double scale = *std::max_element(
      t.begin(), t.end(), [](double a, double b) {
        return std::fabs(a) < std::fabs(b);
      });
  const double amax = std::fabs(scale);
  if (amax == 0) return out;

  for (const long bound : {1L, 4L, 16L, 128L, 1024L, 32768L, 1000000L}) {
    std::vector<Rational> v(t.size());
    for (size_t i = 0; i < t.size(); ++i)
      v[i] = approximate(t[i] / amax, bound);
    push(v);
    // Sparsified variant: drop entries that look like noise.
    std::vector<Rational> sparse = v;
    bool changed = false;
    for (size_t i = 0; i < t.size(); ++i)
      if (std::fabs(t[i] / amax) < 1e-6 && sparse[i] != 0) {
        sparse[i] = 0;
        changed = true;
      }
    if (changed) push(sparse);
  }
  return out;
}

}  // namespace hr
