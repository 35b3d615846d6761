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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace ms0;

namespace {

// pybind11 holders must be non-const; formulas are immutable shared nodes,
// so a small value wrapper is exposed instead.
struct PyFormula {
  FormulaPtr ptr;
};

Mask mask_of(const Matroid& m, const std::vector<std::string>& labels) {
  return m.ground().mask_of(labels);
}

Matroid matroid_from_json_str(const std::string& text) {
  return matroid_from_json(Json::parse(text));
}

std::shared_ptr<GainGraph> graph_from_json_str(const std::string& text) {
  return gain_graph_from_json(Json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite matroids, MS0 model checking, gain graphs and amalgams";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<BudgetError>(m, "BudgetError");

  py::class_<Matroid>(m, "Matroid")
      .def_property_readonly(
          "elements",
          [](const Matroid& mat) { return mat.ground().labels(); })
      .def("is_independent",
           [](const Matroid& mat, const std::vector<std::string>& labels) {
             return mat.is_independent(labels);
           })
      .def("rank",
           [](const Matroid& mat, const std::vector<std::string>& labels) {
             return mat.rank(mask_of(mat, labels));
           })
      .def("rank", [](const Matroid& mat) { return mat.rank(); })
      .def("closure",
           [](const Matroid& mat, const std::vector<std::string>& labels) {
             return mat.ground().unmask(mat.closure(mask_of(mat, labels)));
           })
      .def("circuits",
           [](const Matroid& mat) {
             std::vector<std::vector<std::string>> out;
             for (Mask c : mat.circuits()) {
               out.push_back(mat.ground().unmask(c));
             }
             return out;
           })
      .def("is_simple", &Matroid::is_simple)
      .def("delete_elements",
           [](const Matroid& mat, const std::vector<std::string>& labels) {
             return delete_elements(mat, mask_of(mat, labels));
           })
      .def("contract",
           [](const Matroid& mat, const std::vector<std::string>& labels) {
             return contract_elements(mat, mask_of(mat, labels));
           })
      .def("has_minor",
           [](const Matroid& mat, const Matroid& n) {
             return has_minor(mat, n);
           })
      .def("direct_sum",
           [](const Matroid& mat, const Matroid& other) {
             return direct_sum(mat, other);
           })
      .def("relabel_with_suffix",
           [](const Matroid& mat, const std::string& suffix) {
             return relabel_with_suffix(mat, suffix);
           })
      .def("to_json",
           [](const Matroid& mat) { return matroid_to_json(mat).dump(); });

  m.def("uniform", &gen_uniform, py::arg("r"), py::arg("n"));
  m.def("pg2", &gen_pg2, py::arg("q"));
  m.def("matroid_from_json", &matroid_from_json_str);
  m.def("is_matroid",
        [](int n, const std::vector<std::vector<std::string>>& family) {
          std::vector<std::string> labels;
          for (int i = 0; i < n; ++i) {
            labels.push_back("e" + std::to_string(i + 1));
          }
          GroundSet g(labels);
          std::vector<Mask> sets;
          for (const auto& s : family) sets.push_back(g.mask_of(s));
          return is_matroid(n, sets);
        });

  py::class_<GainGraph, std::shared_ptr<GainGraph>>(m, "GainGraph")
      .def_property_readonly("vertices", &GainGraph::vertices)
      .def_property_readonly(
          "edges",
          [](const GainGraph& g) {
            std::vector<std::string> out;
            for (const auto& e : g.edges()) out.push_back(e.id);
            return out;
          })
      .def("frame_is_independent",
           [](const GainGraph& g, const std::vector<std::string>& edges) {
             Mask x = 0;
             for (const auto& id : edges) x |= bit(g.edge_index(id));
             return frame_is_independent(g, x);
           })
      .def("cycle_gain",
           [](const GainGraph& g, const std::string& start,
              const std::vector<std::string>& edges) {
             return cycle_gain(g, Walk{start, edges});
           })
      .def("is_balanced",
           [](const GainGraph& g, const std::string& start,
              const std::vector<std::string>& edges) {
             return is_balanced(g, Walk{start, edges});
           })
      .def("frame_matroid",
           [](std::shared_ptr<GainGraph> g) { return frame_matroid(g); })
      .def("incidence_matrix_json",
           [](const GainGraph& g) {
             return matroid_to_json(column_matroid(incidence_matrix(g)))
                 .dump();
           })
      .def("to_json",
           [](const GainGraph& g) { return gain_graph_to_json(g).dump(); });

  m.def("gamma",
        [](int s, int p, int alpha) {
          PrimeField f(p);
          GainGroup group = GainGroup::field_units(p, find_generator(f));
          int exp = -1, acc = 1;
          for (int e = 0; e < group.order; ++e) {
            if (acc == ((alpha % p) + p) % p) {
              exp = e;
              break;
            }
            acc = f.mul(acc, group.generator);
          }
          if (exp < 0) throw InputError("alpha is not a non-zero residue");
          return std::make_shared<GainGraph>(build_gamma(s, group, exp));
        },
        py::arg("s"), py::arg("p"), py::arg("alpha"));
  m.def("delta",
        [](int t, int p, int alpha) {
          PrimeField f(p);
          GainGroup group = GainGroup::field_units(p, find_generator(f));
          int exp = -1, acc = 1;
          for (int e = 0; e < group.order; ++e) {
            if (acc == ((alpha % p) + p) % p) {
              exp = e;
              break;
            }
            acc = f.mul(acc, group.generator);
          }
          if (exp < 0) throw InputError("alpha is not a non-zero residue");
          return std::make_shared<GainGraph>(build_delta(t, group, exp));
        },
        py::arg("t"), py::arg("p"), py::arg("alpha"));
  m.def("glue",
        [](std::shared_ptr<GainGraph> g, std::shared_ptr<GainGraph> d) {
          return std::make_shared<GainGraph>(glue_hoop_loop(*g, *d));
        });
  m.def("gain_graph_from_json", &graph_from_json_str);

  m.def("amalgam",
        [](const Matroid& m1, const Matroid& m2) {
          return amalgam_matroid(AmalgamSpec{m1, m2});
        });

  py::class_<PyFormula>(m, "Formula")
      .def_property_readonly(
          "vars",
          [](const PyFormula& f) {
            return std::vector<std::string>(f.ptr->vars().begin(),
                                            f.ptr->vars().end());
          })
      .def_property_readonly(
          "free_vars",
          [](const PyFormula& f) {
            return std::vector<std::string>(f.ptr->free_vars().begin(),
                                            f.ptr->free_vars().end());
          })
      .def("is_sentence",
           [](const PyFormula& f) { return f.ptr->is_sentence(); })
      .def("__str__",
           [](const PyFormula& f) { return f.ptr->to_string(); });
  m.def("parse", [](const std::string& text) {
    return PyFormula{parse_formula(text)};
  });
  m.def("to_prenex",
        [](const PyFormula& f) { return PyFormula{to_prenex(f.ptr)}; });
  m.def("evaluate",
        [](const Matroid& mat, const PyFormula& f,
           const std::map<std::string, std::vector<std::string>>& assign) {
          Assignment a;
          for (const auto& [name, labels] : assign) {
            a.push_back({name, mat.ground().mask_of(labels)});
          }
          return evaluate(mat, f.ptr, a);
        },
        py::arg("matroid"), py::arg("formula"),
        py::arg("assignment") = std::map<std::string,
                                         std::vector<std::string>>{});
  m.def("axiom_sentences", []() {
    AxiomSentences ax = axiom_sentences();
    return std::make_tuple(PyFormula{ax.i1}, PyFormula{ax.i2},
                           PyFormula{ax.i3});
  });
  m.def("minor_sentence",
        [](const Matroid& n) { return PyFormula{minor_sentence(n)}; });

  m.def("alcove_solve",
        [](int s, int t, int order) {
          GainConstraintSystem sys = alcove_constraints(s, t);
          AlcoveResult r = alcove_solve(sys, order);
          py::dict witness;
          if (r.sat) {
            for (int i = 0; i < sys.var_count(); ++i) {
              witness[py::str(sys.var_names[i])] = r.witness[i];
            }
          }
          return std::make_tuple(r.sat, witness);
        },
        py::arg("s"), py::arg("t"), py::arg("order"),
        "order 0 means over the integers");

  m.def("bounds", [](int k) {
    BoundsResult b = bounds(k);
    py::dict out;
    py::list g1, g2;
    for (const auto& v : b.g1) g1.append(v.str());
    for (const auto& v : b.g2) g2.append(v.str());
    out["g1"] = g1;
    out["g2"] = g2;
    out["f1"] = b.f1.str();
    out["f2"] = b.f2.str();
    return out;
  });

  m.def("tree_dump",
        [](const Matroid& mat, int k) {
          TreeArena arena;
          return arena.dump_json(tree_of_v1(arena, mat, {}, k));
        });
  m.def("compatible_sentence",
        [](const Matroid& a, const Matroid& b, const std::string& sentence,
           int k) {
          TreeArena arena;
          PrenexFormula psi = normalize_prenex(parse_formula(sentence));
          if (psi.k > k) throw InputError("sentence uses more variables");
          TreeId ta = tree_of_v1(arena, a, {}, psi.k);
          TreeId tb = tree_of_v1(arena, b, {}, psi.k);
          return compatible(arena, ta, tb, psi);
        });
  m.def("partition",
        [](const std::vector<Matroid>& family, int k) {
          TreeArena arena;
          std::vector<const Matroid*> ptrs;
          for (const auto& mat : family) ptrs.push_back(&mat);
          PartitionResult part = partition_v1(arena, ptrs, k);
          return std::make_tuple(part.block_count, part.block_of);
        });

  m.def("run_check", [](const std::string& name, std::uint64_t seed) {
    CheckParams params;
    params.seed = seed;
    CheckResult r = run_named_check(name, params);
    return std::make_tuple(r.pass, r.details.dump());
  });
}
