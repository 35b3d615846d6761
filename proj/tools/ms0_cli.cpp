// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ms0/alcove.hpp"
#include "ms0/amalgam.hpp"
#include "ms0/evaluate.hpp"
#include "ms0/field.hpp"
#include "ms0/formula.hpp"
#include "ms0/gain_graph.hpp"
#include "ms0/json_io.hpp"
#include "ms0/matroid.hpp"
#include "ms0/registry.hpp"
#include "ms0/verify.hpp"

namespace {

using ms0::Json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ms0::InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string hash_hex(const std::string& data) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(ms0::fnv1a64(data)));
  return buf;
}

struct Report {
  Json j;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  Report(const std::string& command, std::uint64_t seed) {
    j["command"] = command;
    j["inputs"] = Json::object();
    j["verdicts"] = Json::object();
    j["counters"] = Json::object();
    j["seed"] = seed;
  }
  void input_file(const std::string& name, const std::string& path) {
    j["inputs"][name] = hash_hex(read_file(path));
  }
  void emit(const std::string& out_path, const std::string& summary) {
    j["wall_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (out_path.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      ms0::write_json_file(out_path, j);
    }
    std::cerr << summary << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid / MS0 logic workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed/--budget/--out may follow the subcommand

  std::uint64_t seed = 0;
  unsigned long long budget = 1ull << 30;
  std::string out_path;
  app.add_option("--seed", seed, "random seed for seeded sweeps");
  app.add_option("--budget", budget, "subset-sweep budget (oracle calls)");
  app.add_option("--out", out_path, "write the JSON report here");

  // check -------------------------------------------------------------------
  auto* cmd_check = app.add_subcommand("check", "parse and validate a formula");
  std::string check_file;
  bool strict_rule3 = false;
  cmd_check->add_option("formula", check_file, "formula file")->required();
  cmd_check->add_flag("--strict-rule3", strict_rule3,
                      "reject conjunction relabelling instead of repairing");

  // eval --------------------------------------------------------------------
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a sentence");
  std::string eval_matroid, eval_formula;
  cmd_eval->add_option("matroid", eval_matroid, "matroid JSON file")
      ->required();
  cmd_eval->add_option("formula", eval_formula, "formula file")->required();

  // gen ---------------------------------------------------------------------
  auto* cmd_gen = app.add_subcommand("gen", "generate matroids and graphs");
  std::string gen_kind;
  int gen_r = 0, gen_n = 0, gen_q = 2, gen_s = 3, gen_t = 3, gen_p = 17,
      gen_alpha = 3;
  std::string gen_m1, gen_m2;
  cmd_gen->add_option("kind", gen_kind,
                      "uniform|pg2|gamma|delta|glue|amalgam")
      ->required();
  cmd_gen->add_option("--r", gen_r, "uniform rank");
  cmd_gen->add_option("--n", gen_n, "uniform size");
  cmd_gen->add_option("--q", gen_q, "projective plane order (prime)");
  cmd_gen->add_option("--s", gen_s, "hoop parameter");
  cmd_gen->add_option("--t", gen_t, "loop parameter");
  cmd_gen->add_option("--p", gen_p, "field characteristic (prime)");
  cmd_gen->add_option("--alpha", gen_alpha, "field element for the gains");
  cmd_gen->add_option("--m1", gen_m1, "left matroid file (amalgam)");
  cmd_gen->add_option("--m2", gen_m2, "right matroid file (amalgam)");

  // verify ------------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run a named check");
  std::string verify_name;
  ms0::CheckParams params;
  std::string orders = "1..200";
  cmd_verify->add_option("name", verify_name, "check name")->required();
  cmd_verify->add_option("--s", params.s, "hoop parameter");
  cmd_verify->add_option("--t", params.t, "loop parameter");
  cmd_verify->add_option("--p", params.p, "field characteristic");
  cmd_verify->add_option("--alpha", params.alpha, "gain element");
  cmd_verify->add_option("--k", params.k, "variable budget");
  cmd_verify->add_option("--count", params.count, "sample count override");
  cmd_verify->add_option("--max-edges", params.max_edges,
                         "edge bound for exhaustive graph sweeps");
  cmd_verify->add_option("--orders", orders, "modulus range lo..hi");

  // partition ---------------------------------------------------------------
  auto* cmd_partition =
      app.add_subcommand("partition", "group matroids by tree identity");
  std::vector<std::string> partition_files;
  int part_k = 1, part_variant = 1;
  cmd_partition->add_option("files", partition_files, "matroid JSON files")
      ->required();
  cmd_partition->add_option("--k", part_k, "variable budget");
  cmd_partition->add_option("--variant", part_variant, "registry variant");

  // tree --------------------------------------------------------------------
  auto* cmd_tree = app.add_subcommand("tree", "dump a depth-k tree");
  std::string tree_file;
  int tree_k = 1, tree_variant = 1;
  cmd_tree->add_option("matroid", tree_file, "matroid JSON file")->required();
  cmd_tree->add_option("--k", tree_k, "variable budget");
  cmd_tree->add_option("--variant", tree_variant, "registry variant");

  // represent ---------------------------------------------------------------
  auto* cmd_represent =
      app.add_subcommand("represent", "emit D(G, sigma) as matrix JSON");
  std::string rep_file;
  cmd_represent->add_option("graph", rep_file, "gain-graph JSON file")
      ->required();

  CLI11_PARSE(app, argc, argv);
  ms0::Budget b{budget};

  try {
    if (*cmd_check) {
      Report report("check", seed);
      report.input_file("formula", check_file);
      ms0::ParseOptions opts;
      opts.strict_rule3 = strict_rule3;
      ms0::FormulaPtr f = ms0::parse_formula(read_file(check_file), opts);
      report.j["verdicts"]["valid"] = true;
      report.j["verdicts"]["vars"] = std::vector<std::string>(
          f->vars().begin(), f->vars().end());
      report.j["verdicts"]["free_vars"] = std::vector<std::string>(
          f->free_vars().begin(), f->free_vars().end());
      report.j["verdicts"]["k"] = f->vars().size();
      report.j["verdicts"]["prenex"] = ms0::to_prenex(f)->to_string();
      report.emit(out_path,
                  "valid formula with " + std::to_string(f->vars().size()) +
                      " variable(s)");
      return kExitOk;
    }
    if (*cmd_eval) {
      Report report("eval", seed);
      report.input_file("matroid", eval_matroid);
      report.input_file("formula", eval_formula);
      // an explicit family is evaluated as-is, so the axiom sentences can
      // reject corrupted families instead of the loader rejecting them
      ms0::SetSystem sys =
          ms0::structure_from_json(ms0::load_json_file(eval_matroid));
      ms0::FormulaPtr f = ms0::parse_formula(read_file(eval_formula));
      if (!f->is_sentence()) {
        throw ms0::InputError("eval needs a sentence (no free variables)");
      }
      unsigned long long estimate =
          ms0::evaluation_estimate(*f, sys.size());
      report.j["counters"]["estimated_assignments"] = estimate;
      bool value = ms0::evaluate(sys, f, {}, b);
      report.j["verdicts"]["value"] = value;
      report.emit(out_path, std::string("sentence is ") +
                                (value ? "TRUE" : "FALSE"));
      return kExitOk;
    }
    if (*cmd_gen) {
      Report report("gen", seed);
      if (out_path.empty()) {
        throw ms0::InputError("gen requires --out");
      }
      Json artifact;
      if (gen_kind == "uniform") {
        artifact = ms0::matroid_to_json(ms0::gen_uniform(gen_r, gen_n));
      } else if (gen_kind == "pg2") {
        artifact = ms0::matroid_to_json(ms0::gen_pg2(gen_q));
      } else if (gen_kind == "gamma" || gen_kind == "delta" ||
                 gen_kind == "glue") {
        ms0::PrimeField f(gen_p);
        ms0::GainGroup group =
            ms0::GainGroup::field_units(gen_p, ms0::find_generator(f));
        int exp = -1;
        int acc = 1;
        for (int e = 0; e < group.order; ++e) {
          if (acc == ((gen_alpha % gen_p) + gen_p) % gen_p) {
            exp = e;
            break;
          }
          acc = ms0::PrimeField(gen_p).mul(acc, group.generator);
        }
        if (exp < 0) throw ms0::InputError("alpha is not a non-zero residue");
        if (gen_kind == "gamma") {
          artifact =
              ms0::gain_graph_to_json(ms0::build_gamma(gen_s, group, exp));
        } else if (gen_kind == "delta") {
          artifact =
              ms0::gain_graph_to_json(ms0::build_delta(gen_t, group, exp));
        } else {
          ms0::GainGraph gamma = ms0::build_gamma(gen_s, group, exp);
          ms0::GainGraph delta = ms0::build_delta(gen_t, group, exp);
          artifact =
              ms0::gain_graph_to_json(ms0::glue_hoop_loop(gamma, delta));
        }
      } else if (gen_kind == "amalgam") {
        if (gen_m1.empty() || gen_m2.empty()) {
          throw ms0::InputError("amalgam needs --m1 and --m2");
        }
        report.input_file("m1", gen_m1);
        report.input_file("m2", gen_m2);
        ms0::AmalgamSpec spec{
            ms0::matroid_from_json(ms0::load_json_file(gen_m1)),
            ms0::matroid_from_json(ms0::load_json_file(gen_m2))};
        artifact = ms0::matroid_to_json(ms0::amalgam_matroid(spec));
      } else {
        throw ms0::InputError("unknown gen kind: " + gen_kind);
      }
      ms0::write_json_file(out_path, artifact);
      report.j["verdicts"]["written"] = out_path;
      std::cout << report.j.dump(2) << "\n";
      std::cerr << "wrote " << out_path << "\n";
      return kExitOk;
    }
    if (*cmd_verify) {
      Report report("verify", seed);
      params.seed = seed;
      params.budget = budget;
      auto dots = orders.find("..");
      if (dots != std::string::npos) {
        params.order_lo = std::stoi(orders.substr(0, dots));
        params.order_hi = std::stoi(orders.substr(dots + 2));
      }
      ms0::CheckResult r = ms0::run_named_check(verify_name, params);
      report.j["verdicts"]["pass"] = r.pass;
      report.j["verdicts"]["check"] = r.name;
      report.j["counters"] = r.details;
      report.j["check_wall_ms"] = r.wall_ms;
      report.emit(out_path, r.name + (r.pass ? ": PASS" : ": FAIL"));
      return r.pass ? kExitOk : kExitPropertyFailed;
    }
    if (*cmd_partition) {
      Report report("partition", seed);
      ms0::TreeArena arena;
      ms0::PartitionResult part;
      std::vector<ms0::Matroid> matroids;
      std::vector<std::shared_ptr<ms0::GainGraph>> graphs;
      if (part_variant == 1) {
        std::vector<const ms0::Matroid*> family;
        for (std::size_t i = 0; i < partition_files.size(); ++i) {
          report.input_file("file" + std::to_string(i), partition_files[i]);
          matroids.push_back(
              ms0::matroid_from_json(ms0::load_json_file(partition_files[i])));
        }
        for (const auto& m : matroids) family.push_back(&m);
        part = ms0::partition_v1(arena, family, part_k, b);
      } else if (part_variant == 2) {
        std::vector<ms0::V2Context> contexts;
        for (std::size_t i = 0; i < partition_files.size(); ++i) {
          report.input_file("file" + std::to_string(i), partition_files[i]);
          graphs.push_back(ms0::gain_graph_from_json(
              ms0::load_json_file(partition_files[i])));
          contexts.emplace_back(graphs.back());
        }
        std::vector<const ms0::V2Context*> family;
        for (const auto& c : contexts) family.push_back(&c);
        part = ms0::partition_v2(arena, family, part_k, b);
      } else {
        throw ms0::InputError("variant must be 1 or 2");
      }
      ms0::BoundsResult bounds = ms0::bounds(part_k);
      report.j["counters"]["trees_in_arena"] = arena.size();
      report.j["verdicts"]["blocks"] = part.block_count;
      report.j["verdicts"]["block_of"] = part.block_of;
      report.j["verdicts"]["bound"] =
          part_variant == 1 ? bounds.f1.str() : bounds.f2.str();
      report.emit(out_path,
                  std::to_string(part.block_count) + " block(s); bound " +
                      (part_variant == 1 ? bounds.f1.str()
                                         : bounds.f2.str()));
      return kExitOk;
    }
    if (*cmd_tree) {
      Report report("tree", seed);
      report.input_file("matroid", tree_file);
      ms0::TreeArena arena;
      std::string dump;
      if (tree_variant == 1) {
        ms0::Matroid m =
            ms0::matroid_from_json(ms0::load_json_file(tree_file));
        dump = arena.dump_json(ms0::tree_of_v1(arena, m, {}, tree_k, b));
      } else if (tree_variant == 2) {
        auto g = ms0::gain_graph_from_json(ms0::load_json_file(tree_file));
        ms0::V2Context ctx(g);
        dump = arena.dump_json(ms0::tree_of_v2(arena, ctx, {}, tree_k, b));
      } else {
        throw ms0::InputError("variant must be 1 or 2");
      }
      report.j["verdicts"]["tree"] = Json::parse(dump);
      report.j["counters"]["trees_in_arena"] = arena.size();
      report.emit(out_path, "tree computed");
      return kExitOk;
    }
    if (*cmd_represent) {
      Report report("represent", seed);
      report.input_file("graph", rep_file);
      auto g = ms0::gain_graph_from_json(ms0::load_json_file(rep_file));
      ms0::FFMatrix d = ms0::incidence_matrix(*g);
      ms0::Matroid m = ms0::column_matroid(d);
      report.j["counters"]["rows"] = d.rows;
      report.j["counters"]["cols"] = d.cols;
      report.j["verdicts"]["matroid"] = ms0::matroid_to_json(m);
      report.emit(out_path, "representation emitted");
      return kExitOk;
    }
  } catch (const ms0::BudgetError& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ms0::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
