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

#include "hr/json_io.hpp"

#include <fstream>

namespace hr {

Json matrix_to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(rat_str(m.at(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols, entries");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() ||
      static_cast<long>(entries.size()) != static_cast<long>(rows) * cols)
    throw std::invalid_argument("matrix JSON entry count mismatch");
  RationalMatrix m(rows, cols);
  long k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = rat_parse(entries.at(k++).get<std::string>());
  return m;
}

Json vector_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

std::vector<Rational> vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector JSON must be array");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rat_parse(x.get<std::string>()));
  return v;
}

Json action_to_json(const LinearAction& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators) gens.push_back(matrix_to_json(g));
  return Json{{"dim", a.dim}, {"generators", gens}};
}

LinearAction action_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
    throw std::invalid_argument("action JSON needs dim and generators");
  LinearAction a;
  a.dim = j.at("dim").get<int>();
  for (const auto& g : j.at("generators"))
    a.generators.push_back(matrix_from_json(g));
  for (const auto& g : a.generators)
    if (!g.is_square() || g.rows() != a.dim)
      throw std::invalid_argument("generator size does not match dim");
  return a;
}

std::vector<std::pair<RationalMatrix, RationalMatrix>>
complex_generators_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw std::invalid_argument("complex action JSON needs generators");
  std::vector<std::pair<RationalMatrix, RationalMatrix>> out;
  for (const auto& g : j.at("generators")) {
    if (!g.contains("re") || !g.contains("im"))
      throw std::invalid_argument("complex generator needs re and im");
    out.emplace_back(matrix_from_json(g.at("re")),
                     matrix_from_json(g.at("im")));
  }
  return out;
}

namespace {

std::string claim_name(WitnessClaim c) {
  return c == WitnessClaim::CliffordRho1 ? "clifford_rho1"
                                         : "nonsingular_rho2";
}

WitnessClaim claim_from(const std::string& s) {
  if (s == "clifford_rho1") return WitnessClaim::CliffordRho1;
  if (s == "nonsingular_rho2") return WitnessClaim::NonsingularRho2;
  throw std::invalid_argument("unknown witness claim: '" + s + "'");
}

}  // namespace

Json witness_to_json(const WitnessFamily& fam) {
  Json mats = Json::array();
  for (const auto& m : fam.mats) mats.push_back(matrix_to_json(m));
  return Json{{"pair", pair_label(fam.pair)},
              {"n", fam.n},
              {"claim", claim_name(fam.claim)},
              {"matrices", mats}};
}

WitnessFamily witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pair") || !j.contains("claim") ||
      !j.contains("matrices"))
    throw std::invalid_argument("witness JSON needs pair, claim, matrices");
  WitnessFamily fam;
  fam.pair = make_pair(j.at("pair").get<std::string>());
  fam.claim = claim_from(j.at("claim").get<std::string>());
  for (const auto& m : j.at("matrices"))
    fam.mats.push_back(matrix_from_json(m));
  fam.n = j.contains("n") ? j.at("n").get<int>()
                          : static_cast<int>(fam.mats.size());
  return fam;
}

Json verdict_to_json(const PencilVerdict& v) {
  Json out{{"status", to_string(v.status)},
           {"method", to_string(v.method)},
           {"samples", v.samples}};
  out["counterexample"] =
      v.counterexample ? vector_to_json(*v.counterexample) : Json(nullptr);
  out["root_interval"] =
      v.root_interval
          ? Json{{"lo", rat_str(v.root_interval->first)},
                 {"hi", rat_str(v.root_interval->second)}}
          : Json(nullptr);
  out["min_sigma_observed"] =
      v.min_sigma_observed ? Json(*v.min_sigma_observed) : Json(nullptr);
  return out;
}

std::vector<RationalMatrix> matrices_from_json(const Json& j) {
  std::vector<RationalMatrix> mats;
  if (j.is_array()) {
    for (const auto& m : j) mats.push_back(matrix_from_json(m));
    return mats;
  }
  if (j.is_object() && j.contains("matrices")) {
    for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
    return mats;
  }
  if (j.is_object() && j.contains("generators")) {
    for (const auto& m : j.at("generators"))
      mats.push_back(matrix_from_json(m));
    return mats;
  }
  throw std::invalid_argument("expected a matrix list JSON");
}

std::string json_digest(const Json& j) {
  const std::string dump = j.dump();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace hr
