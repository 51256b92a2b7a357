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

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "hr/cartan.hpp"
#include "hr/clifford.hpp"
#include "hr/fields.hpp"
#include "hr/hurwitz.hpp"
#include "hr/json_io.hpp"
#include "hr/pencil.hpp"

namespace {

using hr::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;

struct CommandOutcome {
  Json payload;
  std::optional<std::string> certificate;
  std::optional<Json> artifact;  // written to --emit when present
  int exit_code = kExitOk;
};

struct GlobalOpts {
  uint64_t seed = 0;
  bool seed_set = false;
  long budget = 20000;
  std::string emit;
  std::string format = "json";
};

// Envelope fields are merged with the payload at the top level; the digest
// covers the canonicalized argv plus the canonical parse of file inputs.
void print_result(const std::string& command, const GlobalOpts& opts,
                  const Json& inputs, const CommandOutcome& out) {
  Json envelope = out.payload;
  envelope["command"] = command;
  envelope["inputs_digest"] = hr::json_digest(inputs);
  envelope["seed"] = opts.seed_set ? Json(opts.seed) : Json(nullptr);
  envelope["certificate"] =
      out.certificate ? Json(*out.certificate) : Json(nullptr);
  if (!opts.emit.empty())
    hr::write_json_file(opts.emit,
                        out.artifact ? *out.artifact : envelope);
  std::cout << envelope.dump(2) << "\n";
}

Json args_json(const std::vector<std::string>& argv) {
  Json j = Json::array();
  for (const auto& a : argv) j.push_back(a);
  return j;
}

hr::LinearAction catalog_action(const std::string& pair_name) {
  const auto pair = hr::make_pair(pair_name);
  hr::LinearAction action;
  action.dim = pair.rep_dim;
  action.generators = hr::catalog_generators(pair);
  return action;
}

Json estimate_to_json(const hr::RhoGEstimate& est) {
  Json j{{"value", est.value},
         {"witness_indices", est.witness_indices},
         {"lower_bound_only", est.lower_bound_only},
         {"verdict", hr::verdict_to_json(est.verdict)}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz-Radon numbers, matrix witnesses, and span checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "seed for randomized paths")
      ->each([&](const std::string&) { opts.seed_set = true; });
  app.add_option("--budget", opts.budget, "sampling budget");
  app.add_option("--emit", opts.emit, "also write the result to a file");
  app.add_option("--format", opts.format, "output format (json)")
      ->check(CLI::IsMember({"json"}));

  // rho
  unsigned long rho_n = 1;
  auto* cmd_rho = app.add_subcommand("rho", "Hurwitz-Radon number of N");
  cmd_rho->add_option("N", rho_n, "positive integer")->required();

  // table
  std::string table_pair;
  std::vector<long> table_sizes;
  auto* cmd_table =
      app.add_subcommand("table", "closed-form pair values");
  cmd_table->add_option("pair", table_pair, "pair family or concrete pair")
      ->required();
  cmd_table->add_option("sizes", table_sizes, "size parameters");

  // clifford-family
  int fam_n = 1;
  std::string fam_eps = "+1";
  bool fam_verify = false;
  auto* cmd_fam = app.add_subcommand(
      "clifford-family", "anticommuting matrix family with squares eps*I");
  cmd_fam->add_option("--n", fam_n, "family size")->required();
  cmd_fam->add_option("--epsilon", fam_eps, "+1 or -1")->required();
  cmd_fam->add_flag("--verify", fam_verify, "include a verification report");

  // witness
  std::string wit_pair;
  int wit_n = 1;
  bool wit_rho2 = false;
  auto* cmd_wit =
      app.add_subcommand("witness", "matrix witnesses inside a classical pair");
  cmd_wit->add_option("--pair", wit_pair, "pair, e.g. so(8,8)")->required();
  cmd_wit->add_option("--n", wit_n, "family size");
  cmd_wit->add_flag("--rho2", wit_rho2,
                    "invertible single witness for odd sl sizes");

  // check-witness
  std::string chk_file;
  auto* cmd_chk =
      app.add_subcommand("check-witness", "re-verify a witness file exactly");
  cmd_chk->add_option("file", chk_file, "witness JSON file")->required();

  // pencil
  std::string pencil_file;
  auto* cmd_pencil = app.add_subcommand(
      "pencil", "decide or probe span nonsingularity of a matrix list");
  cmd_pencil->add_option("file", pencil_file, "matrix list JSON file")
      ->required();

  // fields
  std::string fields_file;
  int fields_points = 200;
  auto* cmd_fields = app.add_subcommand(
      "fields", "pointwise independence of fundamental vector fields");
  cmd_fields->add_option("--action", fields_file, "action JSON file")
      ->required();
  cmd_fields->add_option("--points", fields_points, "sample point count");

  // rho-estimate
  std::string est_pair;
  std::string est_mode = "g";
  auto* cmd_est = app.add_subcommand(
      "rho-estimate", "search-based estimates over catalog generators");
  cmd_est->add_option("--pair", est_pair, "pair, e.g. so(8,8) or o(4)")
      ->required();
  cmd_est->add_option("--mode", est_mode, "g, minus, or plus")
      ->check(CLI::IsMember({"g", "minus", "plus"}));

  // clifford-structure
  std::string cs_pair;
  int cs_n = 0;
  std::string cs_metric_file;
  auto* cmd_cs = app.add_subcommand(
      "clifford-structure",
      "skew anticommuting frame realizing a trivial-bundle Clifford structure");
  cmd_cs->add_option("--pair", cs_pair, "pair, e.g. o(4)")->required();
  cmd_cs->add_option("--n", cs_n, "requested rank (default: table value)");
  cmd_cs->add_option("--metric", cs_metric_file, "constant metric JSON file");

  // realify
  std::string re_file;
  auto* cmd_re = app.add_subcommand(
      "realify", "real 2Nx2N form of a complex action");
  cmd_re->add_option("--action", re_file, "complex action JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  std::vector<std::string> raw_args(argv + 1, argv + argc);
  Json inputs{{"argv", args_json(raw_args)}, {"files", Json::object()}};

  try {
    CommandOutcome out;
    std::string command;

    if (cmd_rho->parsed()) {
      command = "rho";
      const auto d = hr::decompose(rho_n);
      out.payload = Json{{"n", d.n}, {"a", d.a}, {"b", d.b}, {"c", d.c},
                         {"rho", hr::rho(rho_n)}};
    } else if (cmd_table->parsed()) {
      command = "table";
      Json values = Json::array();
      if (table_sizes.empty()) {
        const auto pair = hr::parse_classical_pair(table_pair);
        const auto v = hr::table_value(pair);
        values.push_back(Json{{"pair", hr::pair_name(pair)},
                              {"n", pair.n},
                              {"rho1", v.rho1},
                              {"rho2", v.rho2}});
      } else {
        const auto family = hr::parse_family(table_pair);
        if (family == hr::PairFamily::SuPQ) {
          if (table_sizes.size() % 2 != 0)
            throw std::invalid_argument("su(p,q;D) needs sizes in p q pairs");
          for (size_t i = 0; i < table_sizes.size(); i += 2) {
            hr::ClassicalPair pair{family, table_sizes[i] + table_sizes[i + 1]};
            pair.p = table_sizes[i];
            pair.q = table_sizes[i + 1];
            const auto v = hr::table_value(pair);
            values.push_back(Json{{"pair", hr::pair_name(pair)},
                                  {"p", pair.p},
                                  {"q", pair.q},
                                  {"rho1", v.rho1},
                                  {"rho2", v.rho2}});
          }
        } else {
          for (const long n : table_sizes) {
            const hr::ClassicalPair pair{family, n};
            const auto v = hr::table_value(pair);
            values.push_back(Json{{"pair", hr::pair_name(pair)},
                                  {"n", n},
                                  {"rho1", v.rho1},
                                  {"rho2", v.rho2}});
          }
        }
      }
      out.payload = Json{{"family", table_pair}, {"values", values}};
      if (values.size() == 1) {
        out.payload["rho1"] = values[0]["rho1"];
        out.payload["rho2"] = values[0]["rho2"];
      }
    } else if (cmd_fam->parsed()) {
      command = "clifford-family";
      int eps = 0;
      if (fam_eps == "+1" || fam_eps == "1") eps = 1;
      else if (fam_eps == "-1") eps = -1;
      else throw std::invalid_argument("epsilon must be +1 or -1");
      const auto fam = hr::build_epsilon_family(fam_n, eps);
      Json mats = Json::array();
      for (const auto& m : fam.matrices) mats.push_back(hr::matrix_to_json(m));
      out.payload = Json{{"epsilon", fam.epsilon},
                         {"n", fam.n},
                         {"dim", fam.dim},
                         {"matrices", mats}};
      if (fam_verify) {
        const auto check = hr::verify_epsilon_family(fam);
        out.payload["verification"] =
            Json{{"ok", check.ok}, {"message", check.message}};
      }
      out.certificate = "exact";
      out.artifact = out.payload;
    } else if (cmd_wit->parsed()) {
      command = "witness";
      try {
        hr::WitnessFamily fam;
        const auto pair = hr::make_pair(wit_pair);
        if (wit_rho2) {
          fam = hr::build_rho2_witness_odd_sl(pair.param);
        } else {
          fam = hr::build_rho1_witness(pair, wit_n);
        }
        const auto check = hr::check_witness(fam, opts.budget, opts.seed);
        out.payload = hr::witness_to_json(fam);
        out.payload["verified"] = check.ok;
        out.payload["method"] = check.method;
        out.certificate = check.method;
        out.artifact = hr::witness_to_json(fam);
        if (!check.ok) out.exit_code = kExitRefuted;
      } catch (const hr::TableBoundError& e) {
        out.payload = Json{{"refused", true}, {"reason", e.what()}};
        out.exit_code = kExitRefuted;
      }
    } else if (cmd_chk->parsed()) {
      command = "check-witness";
      const Json file = hr::load_json_file(chk_file);
      inputs["files"][chk_file] = file;
      const auto fam = hr::witness_from_json(file);
      const auto check = hr::check_witness(fam, opts.budget, opts.seed);
      out.payload = Json{{"pair", hr::pair_label(fam.pair)},
                         {"n", fam.n},
                         {"ok", check.ok},
                         {"method", check.method}};
      out.certificate = check.method;
      if (!check.ok) {
        out.payload["failure"] = check.failure;
        if (check.i > 0) out.payload["i"] = check.i;
        if (check.j > 0) out.payload["j"] = check.j;
        if (!check.counterexample.empty())
          out.payload["counterexample"] =
              hr::vector_to_json(check.counterexample);
        out.exit_code = kExitRefuted;
      }
    } else if (cmd_pencil->parsed()) {
      command = "pencil";
      const Json file = hr::load_json_file(pencil_file);
      inputs["files"][pencil_file] = file;
      const auto mats = hr::matrices_from_json(file);
      const auto verdict = hr::check_span(mats, opts.budget, opts.seed);
      out.payload = hr::verdict_to_json(verdict);
      out.certificate = hr::to_string(verdict.method);
      if (verdict.status == hr::PencilStatus::Refuted)
        out.exit_code = kExitRefuted;
    } else if (cmd_fields->parsed()) {
      command = "fields";
      const Json file = hr::load_json_file(fields_file);
      inputs["files"][fields_file] = file;
      const auto action = hr::action_from_json(file);
      const auto report =
          hr::sample_pointwise_independence(action, fields_points, opts.seed);
      Json points = Json::array();
      for (const auto& x : report.points)
        points.push_back(hr::vector_to_json(x));
      out.payload = Json{
          {"points", points},
          {"ranks", report.ranks},
          {"independent_everywhere_sampled",
           report.independent_everywhere_sampled}};
      out.certificate = "exact_rank_sampling";
    } else if (cmd_est->parsed()) {
      command = "rho-estimate";
      const auto pair = hr::make_pair(est_pair);
      const auto action = catalog_action(est_pair);
      if (est_mode == "minus") {
        const auto est =
            hr::estimate_rho_minus(action, hr::rho1_table_bound(pair));
        out.payload = Json{{"pair", hr::pair_label(pair)},
                           {"mode", "minus"},
                           {"value", est.value},
                           {"witness_indices", est.witness_indices},
                           {"lower_bound_only", est.lower_bound_only}};
        out.payload["table_value"] =
            est.table_value ? Json(*est.table_value) : Json(nullptr);
        out.payload["matches_table"] =
            est.table_value ? Json(est.value == *est.table_value)
                            : Json(nullptr);
        out.certificate = "exact";
      } else if (est_mode == "g") {
        const auto est = hr::estimate_rho_g(action, opts.budget, opts.seed);
        out.payload = estimate_to_json(est);
        out.payload["pair"] = hr::pair_label(pair);
        out.payload["mode"] = "g";
        const auto bound = hr::rho2_table_bound(pair);
        out.payload["table_value"] = bound ? Json(*bound) : Json(nullptr);
        out.certificate = hr::to_string(est.verdict.method);
      } else {
        // Largest metric-skew family with squares -I under the identity
        // metric.
        const auto metric = hr::RationalMatrix::identity(action.dim);
        const auto result = hr::assemble_clifford_structure(
            action, metric, action.dim + 1);
        out.payload = Json{{"pair", hr::pair_label(pair)},
                           {"mode", "plus"},
                           {"value", result.best_partial.size()},
                           {"witness_indices", result.best_partial}};
        out.certificate = "exact";
      }
    } else if (cmd_cs->parsed()) {
      command = "clifford-structure";
      const auto pair = hr::make_pair(cs_pair);
      const auto action = catalog_action(cs_pair);
      hr::RationalMatrix metric = hr::RationalMatrix::identity(action.dim);
      if (!cs_metric_file.empty()) {
        const Json file = hr::load_json_file(cs_metric_file);
        inputs["files"][cs_metric_file] = file;
        metric = hr::matrix_from_json(file);
      }
      int want = cs_n;
      if (want <= 0) {
        const auto bound = hr::rho2_table_bound(pair);
        want = bound && *bound > 0 ? static_cast<int>(*bound) : 1;
      }
      const auto result =
          hr::assemble_clifford_structure(action, metric, want);
      if (result.witness) {
        Json frame = Json::array();
        for (const auto& m : result.witness->frame_images)
          frame.push_back(hr::matrix_to_json(m));
        out.payload = Json{{"pair", hr::pair_label(pair)},
                           {"rank", result.witness->rank_n},
                           {"metric", hr::matrix_to_json(metric)},
                           {"frame_images", frame},
                           {"found", true}};
        out.certificate = "exact";
        out.artifact = out.payload;
      } else {
        out.payload = Json{{"pair", hr::pair_label(pair)},
                           {"requested_rank", want},
                           {"found", false},
                           {"best_partial_indices", result.best_partial}};
        out.exit_code = kExitRefuted;
      }
    } else if (cmd_re->parsed()) {
      command = "realify";
      const Json file = hr::load_json_file(re_file);
      inputs["files"][re_file] = file;
      const auto gens = hr::complex_generators_from_json(file);
      const auto action = hr::realify(gens);
      out.payload = hr::action_to_json(action);
      out.artifact = out.payload;
    }

    print_result(command, opts, inputs, out);
    return out.exit_code;
  } catch (const std::exception& e) {
    Json err{{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return kExitUsage;
  }
}
