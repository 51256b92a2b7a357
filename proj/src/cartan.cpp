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

#include "hr/cartan.hpp"

#include <charconv>

#include "hr/clifford.hpp"
#include "hr/gaussian_rational.hpp"
#include "hr/pencil.hpp"
#include "hr/rng.hpp"

namespace hr {

namespace {

RationalMatrix unit(int n, int r, int c) {
  RationalMatrix m(n, n);
  m.at(r, c) = 1;
  return m;
}

RationalMatrix split_form(int n) {
  RationalMatrix f(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    f.at(i, i) = 1;
    f.at(n + i, n + i) = -1;
  }
  return f;
}

}  // namespace

CartanPair make_pair(PairKind kind, long size) {
  if (size < 1) throw std::invalid_argument("pair size must be positive");
  const int n = static_cast<int>(size);
  switch (kind) {
    case PairKind::SoNN:
      return {kind, size, 2 * n, split_form(n)};
    case PairKind::GlR:
      return {kind, size, n, std::nullopt};
    case PairKind::ON:
      return {kind, size, n, RationalMatrix::identity(n)};
    case PairKind::SlR:
      return {kind, size, n, std::nullopt};
    case PairKind::GlC:
      return {kind, size, 2 * n, std::nullopt};
  }
  throw std::logic_error("unreachable pair kind");
}

CartanPair make_pair(const std::string& name) {
  const auto open = name.find('(');
  const auto close = name.rfind(')');
  if (open == std::string::npos || close != name.size() - 1 ||
      close <= open + 1)
    throw std::invalid_argument("malformed pair name: '" + name + "'");
  const std::string head = name.substr(0, open);
  const std::string args = name.substr(open + 1, close - open - 1);
  const auto comma = args.find(',');
  const auto parse_size = [&](std::string_view s) {
    long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1)
      throw std::invalid_argument("bad size in pair name: '" + name + "'");
    return v;
  };
  if (head == "o" && comma == std::string::npos)
    return make_pair(PairKind::ON, parse_size(args));
  if (comma == std::string::npos)
    throw std::invalid_argument("malformed pair name: '" + name + "'");
  const std::string lhs = args.substr(0, comma);
  const std::string rhs = args.substr(comma + 1);
  if (head == "so" && lhs == rhs)
    return make_pair(PairKind::SoNN, parse_size(lhs));
  if (head == "gl" && rhs == "R")
    return make_pair(PairKind::GlR, parse_size(lhs));
  if (head == "gl" && rhs == "C")
    return make_pair(PairKind::GlC, parse_size(lhs));
  if (head == "sl" && rhs == "R")
    return make_pair(PairKind::SlR, parse_size(lhs));
  throw std::invalid_argument("unsupported pair for the matrix catalog: '" +
                              name + "'");
}

std::string pair_label(const CartanPair& pair) {
  const std::string n = std::to_string(pair.param);
  switch (pair.kind) {
    case PairKind::SoNN: return "so(" + n + "," + n + ")";
    case PairKind::GlR: return "gl(" + n + ",R)";
    case PairKind::ON: return "o(" + n + ")";
    case PairKind::SlR: return "sl(" + n + ",R)";
    case PairKind::GlC: return "gl(" + n + ",C)";
  }
  return "?";
}

bool p_membership(const CartanPair& pair, const RationalMatrix& a) {
  if (!a.is_square() || a.rows() != pair.rep_dim)
    throw std::invalid_argument("matrix size does not match the pair");
  const int n = static_cast<int>(pair.param);
  switch (pair.kind) {
    case PairKind::SoNN: {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (a.at(i, j) != 0) return false;                  // top-left
          if (a.at(n + i, n + j) != 0) return false;          // bottom-right
          if (a.at(n + i, j) != a.at(j, n + i)) return false; // B^T coupling
        }
      return true;
    }
    case PairKind::GlR:
      return is_symmetric(a);
    case PairKind::ON:
      return is_skew_symmetric(a);
    case PairKind::SlR:
      return is_symmetric(a) && a.trace() == 0;
    case PairKind::GlC: {
      // [[P, -Q], [Q, P]] with P symmetric, Q skew.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (a.at(i, j) != a.at(n + i, n + j)) return false;
          if (a.at(i, n + j) != -a.at(n + i, j)) return false;
        }
      RationalMatrix p(n, n), q(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          p.at(i, j) = a.at(i, j);
          q.at(i, j) = a.at(n + i, j);
        }
      return is_symmetric(p) && is_skew_symmetric(q);
    }
  }
  throw std::logic_error("unreachable pair kind");
}

std::vector<RationalMatrix> p_basis(const CartanPair& pair) {
  const int n = static_cast<int>(pair.param);
  std::vector<RationalMatrix> basis;
  switch (pair.kind) {
    case PairKind::SoNN: {
      const RationalMatrix zero(n, n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const RationalMatrix b = unit(n, k, l);
          basis.push_back(block2x2(zero, b, b.transpose(), zero));
        }
      break;
    }
    case PairKind::GlR:
      for (int k = 0; k < n; ++k) basis.push_back(unit(n, k, k));
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          basis.push_back(unit(n, k, l) + unit(n, l, k));
      break;
    case PairKind::ON:
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          basis.push_back(unit(n, k, l) - unit(n, l, k));
      break;
    case PairKind::SlR:
      for (int k = 0; k + 1 < n; ++k)
        basis.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          basis.push_back(unit(n, k, l) + unit(n, l, k));
      break;
    case PairKind::GlC: {
      const RationalMatrix zero(n, n);
      for (int k = 0; k < n; ++k)
        basis.push_back(realify_matrix(unit(n, k, k), zero));
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          basis.push_back(
              realify_matrix(unit(n, k, l) + unit(n, l, k), zero));
          basis.push_back(
              realify_matrix(zero, unit(n, k, l) - unit(n, l, k)));
        }
      break;
    }
  }
  return basis;
}

std::optional<long> rho1_table_bound(const CartanPair& pair) {
  switch (pair.kind) {
    case PairKind::SoNN:
      return table_value({PairFamily::SoNN, pair.param}).rho1;
    case PairKind::GlR:
      return table_value({PairFamily::GlR, pair.param}).rho1;
    case PairKind::SlR:
      if (pair.param == 1) return table_value({PairFamily::Sl1, 1}).rho1;
      if (pair.param % 2 == 0)
        return table_value({PairFamily::Sl2NR, pair.param / 2}).rho1;
      return table_value({PairFamily::SlOdd, (pair.param - 1) / 2}).rho1;
    case PairKind::GlC:
      return table_value({PairFamily::GlC, pair.param}).rho1;
    case PairKind::ON:
      return std::nullopt;  // not a split-pair table row
  }
  return std::nullopt;
}

std::optional<long> rho2_table_bound(const CartanPair& pair) {
  switch (pair.kind) {
    case PairKind::SlR:
      if (pair.param == 1) return table_value({PairFamily::Sl1, 1}).rho2;
      if (pair.param % 2 == 0)
        return table_value({PairFamily::Sl2NR, pair.param / 2}).rho2;
      return table_value({PairFamily::SlOdd, (pair.param - 1) / 2}).rho2;
    case PairKind::ON:
      // Classical count of independent tangent fields on the sphere.
      return rho(static_cast<unsigned long>(pair.param)) - 1;
    default:
      return rho1_table_bound(pair);
  }
}

namespace {

// Pads a family living on dimension d to dimension size (d must divide
// size) by block-diagonal repetition; all exact relations survive.
RationalMatrix pad_to(const RationalMatrix& m, int size) {
  const int d = m.rows();
  if (size % d != 0) throw std::logic_error("family dimension does not divide");
  if (size == d) return m;
  return kron(RationalMatrix::identity(size / d), m);
}

void verify_rho1_family(const WitnessFamily& fam) {
  const int dim = fam.pair.rep_dim;
  const RationalMatrix id = RationalMatrix::identity(dim);
  for (const auto& a : fam.mats)
    if (!p_membership(fam.pair, a))
      throw std::logic_error("witness left the symmetric slot");
  for (size_t i = 0; i < fam.mats.size(); ++i)
    for (size_t j = 0; j < fam.mats.size(); ++j) {
      const RationalMatrix anti =
          fam.mats[i] * fam.mats[j] + fam.mats[j] * fam.mats[i];
      if (anti != (i == j ? Rational(2) * id : RationalMatrix(dim, dim)))
        throw std::logic_error("witness relation failed");
    }
}

}  // namespace

WitnessFamily build_rho1_witness(const CartanPair& pair, int n) {
  if (n < 1) throw std::invalid_argument("witness size must be >= 1");
  const auto bound = rho1_table_bound(pair);
  if (!bound)
    throw std::invalid_argument("no witness synthesis for " +
                                pair_label(pair));
  if (n > *bound)
    throw TableBoundError("requested " + std::to_string(n) + " witnesses for " +
                          pair_label(pair) + ", table bound is " +
                          std::to_string(*bound));

  WitnessFamily fam{pair, n, {}, WitnessClaim::CliffordRho1};
  const int size = static_cast<int>(pair.param);
  switch (pair.kind) {
    case PairKind::SoNN: {
      std::vector<RationalMatrix> bs;
      bs.push_back(RationalMatrix::identity(size));
      if (n >= 2) {
        const auto skew = build_epsilon_family(n - 1, -1);
        for (const auto& j : skew.matrices) bs.push_back(pad_to(j, size));
      }
      const RationalMatrix zero(size, size);
      for (const auto& b : bs)
        fam.mats.push_back(block2x2(zero, b, b.transpose(), zero));
      break;
    }
    case PairKind::GlR: {
      if (n == 1) {
        fam.mats.push_back(RationalMatrix::identity(size));
        break;
      }
      const auto sym = build_epsilon_family(n, 1);
      for (const auto& t : sym.matrices) fam.mats.push_back(pad_to(t, size));
      break;
    }
    case PairKind::SlR: {
      if (n == 1) {
        // diag(+1, -1) repeated: symmetric, traceless, squares to I.
        const RationalMatrix z =
            RationalMatrix::from_rows({{1, 0}, {0, -1}});
        fam.mats.push_back(pad_to(z, size));
        break;
      }
      const auto sym = build_epsilon_family(n, 1);
      for (const auto& t : sym.matrices) fam.mats.push_back(pad_to(t, size));
      break;
    }
    default:
      throw std::invalid_argument("no witness synthesis for " +
                                  pair_label(pair));
  }
  verify_rho1_family(fam);
  return fam;
}

ImpossibilityReport odd_sl_impossibility(long m, uint64_t seed,
                                         long candidates) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("odd size >= 3 required");
  ImpossibilityReport report;
  report.size = m;
  report.seed = seed;
  report.argument =
      "any symmetric A with A^2 = I is diagonalizable with eigenvalues +1 "
      "and -1 of multiplicities p + q = " +
      std::to_string(m) +
      "; trace 0 forces p = q, impossible for an odd total";

  const int n = static_cast<int>(m);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (long c = 0; c < candidates; ++c) {
    SplitMix64 g(mix_seed(seed, static_cast<uint64_t>(c)));
    RationalMatrix a(n, n);
    bool traceless_pool = (c % 2 == 0);
    if (traceless_pool) {
      // Random symmetric with the last diagonal entry balancing the trace.
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const Rational v = rat(g.next_in(-4, 4), g.next_in(1, 2));
          a.at(i, j) = v;
          a.at(j, i) = v;
        }
      Rational partial = 0;
      for (int i = 0; i + 1 < n; ++i) partial += a.at(i, i);
      a.at(n - 1, n - 1) = -partial;
    } else {
      // Random +/-1 diagonal: an involution, but never traceless in odd
      // size.
      for (int i = 0; i < n; ++i) a.at(i, i) = g.next() % 2 == 0 ? 1 : -1;
    }
    const bool violates = !(a * a == id) || a.trace() != 0;
    ++report.candidates_tested;
    if (violates) ++report.violations;
  }
  report.impossible = report.violations == report.candidates_tested;
  return report;
}

WitnessFamily build_rho2_witness_odd_sl(long m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("odd size >= 3 required");
  const int n = static_cast<int>(m);
  std::vector<Rational> diag(n, Rational(1));
  diag[n - 1] = Rational(-(m - 1));
  WitnessFamily fam{make_pair(PairKind::SlR, m),
                    1,
                    {RationalMatrix::diagonal(diag)},
                    WitnessClaim::NonsingularRho2};
  return fam;
}

WitnessCheckResult check_witness(const WitnessFamily& fam,
                                 long sampling_budget, uint64_t seed) {
  WitnessCheckResult r;
  for (size_t i = 0; i < fam.mats.size(); ++i) {
    if (!p_membership(fam.pair, fam.mats[i])) {
      r.ok = false;
      r.i = static_cast<int>(i) + 1;
      r.failure = "member " + std::to_string(i + 1) +
                  " is outside the subspace of " + pair_label(fam.pair);
      return r;
    }
  }
  if (fam.claim == WitnessClaim::CliffordRho1) {
    r.method = "exact";
    const int dim = fam.pair.rep_dim;
    const RationalMatrix id = RationalMatrix::identity(dim);
    const RationalMatrix zero(dim, dim);
    for (size_t i = 0; i < fam.mats.size(); ++i)
      for (size_t j = i; j < fam.mats.size(); ++j) {
        const RationalMatrix anti =
            fam.mats[i] * fam.mats[j] + fam.mats[j] * fam.mats[i];
        if (anti != (i == j ? Rational(2) * id : zero)) {
          r.ok = false;
          r.i = static_cast<int>(i) + 1;
          r.j = static_cast<int>(j) + 1;
          r.failure = "anticommutator identity fails at pair (" +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ")";
          return r;
        }
      }
    return r;
  }
  const PencilVerdict v = check_span(fam.mats, sampling_budget, seed);
  r.method = to_string(v.method);
  if (v.status == PencilStatus::Refuted) {
    r.ok = false;
    r.failure = "span is singular";
    if (v.counterexample) r.counterexample = *v.counterexample;
  }
  return r;
}

std::vector<RationalMatrix> catalog_generators(const CartanPair& pair) {
  std::vector<RationalMatrix> gens = p_basis(pair);
  switch (pair.kind) {
    case PairKind::SoNN:
    case PairKind::GlR: {
      const auto bound = rho1_table_bound(pair);
      if (bound && *bound >= 1) {
        const auto fam = build_rho1_witness(pair, static_cast<int>(*bound));
        gens.insert(gens.end(), fam.mats.begin(), fam.mats.end());
      }
      break;
    }
    case PairKind::SlR: {
      if (pair.param >= 3 && pair.param % 2 == 1) {
        gens.push_back(build_rho2_witness_odd_sl(pair.param).mats.front());
      } else if (pair.param % 2 == 0) {
        const auto bound = rho1_table_bound(pair);
        if (bound && *bound >= 1) {
          const auto fam = build_rho1_witness(pair, static_cast<int>(*bound));
          gens.insert(gens.end(), fam.mats.begin(), fam.mats.end());
        }
      }
      break;
    }
    case PairKind::ON: {
      const long k = rho(static_cast<unsigned long>(pair.param)) - 1;
      if (k >= 1) {
        const auto skew = build_epsilon_family(static_cast<int>(k), -1);
        const int size = static_cast<int>(pair.param);
        for (const auto& j : skew.matrices)
          gens.push_back(kron(RationalMatrix::identity(size / j.rows()), j));
      }
      break;
    }
    case PairKind::GlC: {
      const long m = 2 * ord2(static_cast<unsigned long>(pair.param)) + 1;
      const auto fam = complex_hermitian_family(static_cast<int>(m));
      const int d = fam.front().first.rows();
      const int pad = static_cast<int>(pair.param) / d;
      for (const auto& [re, im] : fam) {
        const RationalMatrix id = RationalMatrix::identity(pad);
        gens.push_back(realify_matrix(kron(id, re), kron(id, im)));
      }
      break;
    }
  }
  return gens;
}

}  // namespace hr
