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

#include "hr/hurwitz.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace hr {

HurwitzDecomposition decompose(unsigned long n) {
  if (n < 1) throw std::invalid_argument("decompose requires n >= 1");
  long v = 0;
  unsigned long odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++v;
  }
  return HurwitzDecomposition{.a = v / 4, .b = v % 4, .c = (long)(odd / 2),
                              .n = n};
}

long rho(unsigned long n) {
  const auto d = decompose(n);
  return 8 * d.a + (1L << d.b);
}

long ord2(unsigned long n) {
  if (n < 1) throw std::invalid_argument("ord2 requires n >= 1");
  long v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

long rho_extended(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("rho_extended requires q > 0");
  if (!rat_is_integer(q)) return 0;
  if (!q.get_num().fits_ulong_p())
    throw std::invalid_argument("rho_extended argument too large");
  return rho(q.get_num().get_ui());
}

TableValue table_value(const ClassicalPair& pair) {
  const long n = pair.n;
  if (n < 1) throw std::invalid_argument("pair size must be positive");
  const auto both = [](long v) { return TableValue{v, v}; };
  switch (pair.family) {
    case PairFamily::SoNN:
      return both(rho(n));
    case PairFamily::GlR:
      return both(rho_extended(rat(n, 2)) + 1);
    case PairFamily::SpR:
      return both(rho_extended(rat(n, 2)) + 2);
    case PairFamily::SpC:
      return both(rho_extended(rat(n, 2)) + 3);
    case PairFamily::SpNN:
      return both(rho_extended(rat(n, 2)) + 4);
    case PairFamily::GlH:
      return both(rho_extended(rat(n, 4)) + 5);
    case PairFamily::SoStar:
      return both(rho_extended(rat(n, 8)) + 6);
    case PairFamily::SoC:
      return both(rho_extended(rat(n, 16)) + 7);
    case PairFamily::GlC:
      return both(2 * ord2(n) + 1);
    case PairFamily::SuNN:
      return both(2 * ord2(n) + 2);
    case PairFamily::Sl2NR:
      return both(rho(n) + 1);
    case PairFamily::Sl2NC:
      return both(2 * ord2(n) + 3);
    case PairFamily::Sl2NH:
      return both(rho_extended(rat(n, 2)) + 5);
    case PairFamily::Sl1:
      return both(0);
    case PairFamily::SuPQ:
      if (pair.p == pair.q)
        throw std::invalid_argument("su(p,q;D) requires p != q");
      if (pair.p < 1 || pair.q < 1)
        throw std::invalid_argument("su(p,q;D) sizes must be positive");
      return both(0);
    case PairFamily::SlOdd:
      return TableValue{0, 1};
  }
  throw std::logic_error("unreachable pair family");
}

namespace {

const std::map<std::string, PairFamily>& family_table() {
  static const std::map<std::string, PairFamily> table = {
      {"so(N,N)", PairFamily::SoNN},     {"gl(N,R)", PairFamily::GlR},
      {"sp(N,R)", PairFamily::SpR},      {"sp(N,C)", PairFamily::SpC},
      {"sp(N,N)", PairFamily::SpNN},     {"gl(N,H)", PairFamily::GlH},
      {"so*(2N)", PairFamily::SoStar},   {"so(N,C)", PairFamily::SoC},
      {"gl(N,C)", PairFamily::GlC},      {"su(N,N)", PairFamily::SuNN},
      {"sl(2N,R)", PairFamily::Sl2NR},   {"sl(2N,C)", PairFamily::Sl2NC},
      {"sl(2N,H)", PairFamily::Sl2NH},   {"sl(1,D)", PairFamily::Sl1},
      {"su(p,q;D)", PairFamily::SuPQ},   {"sl(2N+1,R)", PairFamily::SlOdd},
      {"sl(2N+1,C)", PairFamily::SlOdd}, {"sl(2N+1,H)", PairFamily::SlOdd},
      {"sl(2N+1,D)", PairFamily::SlOdd}, {"sl(1,R)", PairFamily::Sl1},
      {"sl(1,C)", PairFamily::Sl1},      {"sl(1,H)", PairFamily::Sl1},
      {"su(p,q;R)", PairFamily::SuPQ},   {"su(p,q;C)", PairFamily::SuPQ},
      {"su(p,q;H)", PairFamily::SuPQ},
  };
  return table;
}

long parse_long(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad size in pair name");
  return v;
}

DivisionAlgebra parse_algebra(std::string_view s) {
  if (s == "R") return DivisionAlgebra::R;
  if (s == "C") return DivisionAlgebra::C;
  if (s == "H") return DivisionAlgebra::H;
  throw std::invalid_argument("unknown division algebra");
}

std::string algebra_name(DivisionAlgebra d) {
  switch (d) {
    case DivisionAlgebra::R: return "R";
    case DivisionAlgebra::C: return "C";
    case DivisionAlgebra::H: return "H";
  }
  return "?";
}

}  // namespace

PairFamily parse_family(const std::string& name) {
  const auto it = family_table().find(name);
  if (it == family_table().end())
    throw std::invalid_argument("unknown pair family: '" + name + "'");
  return it->second;
}

std::string family_name(PairFamily family) {
  switch (family) {
    case PairFamily::SoNN: return "so(N,N)";
    case PairFamily::GlR: return "gl(N,R)";
    case PairFamily::SpR: return "sp(N,R)";
    case PairFamily::SpC: return "sp(N,C)";
    case PairFamily::SpNN: return "sp(N,N)";
    case PairFamily::GlH: return "gl(N,H)";
    case PairFamily::SoStar: return "so*(2N)";
    case PairFamily::SoC: return "so(N,C)";
    case PairFamily::GlC: return "gl(N,C)";
    case PairFamily::SuNN: return "su(N,N)";
    case PairFamily::Sl2NR: return "sl(2N,R)";
    case PairFamily::Sl2NC: return "sl(2N,C)";
    case PairFamily::Sl2NH: return "sl(2N,H)";
    case PairFamily::Sl1: return "sl(1,D)";
    case PairFamily::SuPQ: return "su(p,q;D)";
    case PairFamily::SlOdd: return "sl(2N+1,D)";
  }
  return "?";
}

ClassicalPair parse_classical_pair(const std::string& name) {
  const auto open = name.find('(');
  const auto close = name.rfind(')');
  if (open == std::string::npos || close == std::string::npos ||
      close != name.size() - 1 || close <= open + 1)
    throw std::invalid_argument("malformed pair name: '" + name + "'");
  const std::string head = name.substr(0, open);
  const std::string args = name.substr(open + 1, close - open - 1);

  if (head == "su" && args.find(';') != std::string::npos) {
    const auto semi = args.find(';');
    const auto comma = args.find(',');
    if (comma == std::string::npos || comma > semi)
      throw std::invalid_argument("malformed su(p,q;D) name");
    ClassicalPair pair{.family = PairFamily::SuPQ};
    pair.p = parse_long(std::string_view(args).substr(0, comma));
    pair.q =
        parse_long(std::string_view(args).substr(comma + 1, semi - comma - 1));
    pair.algebra = parse_algebra(std::string_view(args).substr(semi + 1));
    pair.n = pair.p + pair.q;
    if (pair.p == pair.q)
      throw std::invalid_argument("su(p,q;D) requires p != q");
    return pair;
  }

  const auto comma = args.find(',');
  if (head == "so*") {
    const long m = parse_long(args);
    if (m < 2 || m % 2 != 0)
      throw std::invalid_argument("so*(2N) requires an even size");
    return ClassicalPair{.family = PairFamily::SoStar, .n = m / 2};
  }
  if (comma == std::string::npos)
    throw std::invalid_argument("malformed pair name: '" + name + "'");
  const std::string lhs = args.substr(0, comma);
  const std::string rhs = args.substr(comma + 1);

  if (head == "so" || head == "su" || head == "sp") {
    // Split-signature forms so(N,N), su(N,N), sp(N,N).
    if (rhs == lhs && rhs != "R" && rhs != "C" && rhs != "H") {
      const long m = parse_long(lhs);
      if (head == "so") return {.family = PairFamily::SoNN, .n = m};
      if (head == "su") return {.family = PairFamily::SuNN, .n = m};
      return {.family = PairFamily::SpNN, .n = m};
    }
  }
  const long m = parse_long(lhs);
  const DivisionAlgebra d = parse_algebra(rhs);
  if (head == "gl") {
    if (d == DivisionAlgebra::R) return {.family = PairFamily::GlR, .n = m};
    if (d == DivisionAlgebra::C) return {.family = PairFamily::GlC, .n = m};
    return {.family = PairFamily::GlH, .n = m};
  }
  if (head == "sp") {
    if (d == DivisionAlgebra::R) return {.family = PairFamily::SpR, .n = m};
    if (d == DivisionAlgebra::C) return {.family = PairFamily::SpC, .n = m};
    throw std::invalid_argument("sp over H is written sp(N,N)");
  }
  if (head == "so") {
    if (d == DivisionAlgebra::C) return {.family = PairFamily::SoC, .n = m};
    throw std::invalid_argument("so(N,R) is not a catalogued table pair");
  }
  if (head == "sl") {
    if (m == 1)
      return {.family = PairFamily::Sl1, .n = 1, .algebra = d};
    if (m % 2 == 0) {
      if (d == DivisionAlgebra::R)
        return {.family = PairFamily::Sl2NR, .n = m / 2};
      if (d == DivisionAlgebra::C)
        return {.family = PairFamily::Sl2NC, .n = m / 2};
      return {.family = PairFamily::Sl2NH, .n = m / 2};
    }
    return {.family = PairFamily::SlOdd, .n = (m - 1) / 2, .algebra = d};
  }
  throw std::invalid_argument("unknown pair name: '" + name + "'");
}

std::string pair_name(const ClassicalPair& pair) {
  const auto num = [](long v) { return std::to_string(v); };
  switch (pair.family) {
    case PairFamily::SoNN: return "so(" + num(pair.n) + "," + num(pair.n) + ")";
    case PairFamily::GlR: return "gl(" + num(pair.n) + ",R)";
    case PairFamily::SpR: return "sp(" + num(pair.n) + ",R)";
    case PairFamily::SpC: return "sp(" + num(pair.n) + ",C)";
    case PairFamily::SpNN: return "sp(" + num(pair.n) + "," + num(pair.n) + ")";
    case PairFamily::GlH: return "gl(" + num(pair.n) + ",H)";
    case PairFamily::SoStar: return "so*(" + num(2 * pair.n) + ")";
    case PairFamily::SoC: return "so(" + num(pair.n) + ",C)";
    case PairFamily::GlC: return "gl(" + num(pair.n) + ",C)";
    case PairFamily::SuNN: return "su(" + num(pair.n) + "," + num(pair.n) + ")";
    case PairFamily::Sl2NR: return "sl(" + num(2 * pair.n) + ",R)";
    case PairFamily::Sl2NC: return "sl(" + num(2 * pair.n) + ",C)";
    case PairFamily::Sl2NH: return "sl(" + num(2 * pair.n) + ",H)";
    case PairFamily::Sl1: return "sl(1," + algebra_name(pair.algebra) + ")";
    case PairFamily::SuPQ:
      return "su(" + num(pair.p) + "," + num(pair.q) + ";" +
             algebra_name(pair.algebra) + ")";
    case PairFamily::SlOdd:
      return "sl(" + num(2 * pair.n + 1) + "," + algebra_name(pair.algebra) +
             ")";
  }
  return "?";
}

}  // namespace hr
