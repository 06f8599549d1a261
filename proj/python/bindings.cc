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

// Python bindings. Sets cross the boundary as sorted lists of ints and eta
// values as ints or float('inf').

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/campaigns.h"
#include "rainbow/complex.h"
#include "rainbow/homology.h"
#include "rainbow/instance_io.h"
#include "rainbow/matroid.h"
#include "rainbow/rainbow.h"
#include "rainbow/recursion.h"
#include "rainbow/reductions.h"

namespace py = pybind11;
using namespace rainbow;

namespace {

using IntList = std::vector<int>;

ElementSet to_set(const IntList& v) { return ElementSet::from_vector(v); }

std::vector<ElementSet> to_sets(const std::vector<IntList>& v) {
  std::vector<ElementSet> out;
  for (const IntList& s : v) out.push_back(to_set(s));
  return out;
}

std::vector<IntList> to_lists(const std::vector<ElementSet>& v) {
  std::vector<IntList> out;
  for (ElementSet s : v) out.push_back(s.to_vector());
  return out;
}

py::object to_py(EtaValue e) {
  if (e.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(e.value());
}

SimplicialComplex complex_of(int ground_size, const std::vector<IntList>& facets) {
  return SimplicialComplex(ElementSet::range(ground_size), to_sets(facets));
}

}  // namespace

PYBIND11_MODULE(_rainbowsets, mod) {
  mod.doc() = "Rainbow sets in the intersection of two matroids";

  py::register_exception<Error>(mod, "RainbowError", PyExc_ValueError);

  py::class_<Matroid>(mod, "Matroid")
      .def_property_readonly("ground",
                             [](const Matroid& m) { return m.ground().to_vector(); })
      .def("rank", [](const Matroid& m, const IntList& s) { return m.rank(to_set(s)); })
      .def("full_rank", [](const Matroid& m) { return m.rank(); })
      .def("is_independent",
           [](const Matroid& m, const IntList& s) { return m.is_independent(to_set(s)); })
      .def("describe", [](const Matroid& m) { return describe_matroid(m); })
      .def("__repr__",
           [](const Matroid& m) { return "<Matroid " + describe_matroid(m) + ">"; });

  mod.def("uniform_matroid", &uniform_matroid, py::arg("n"), py::arg("k"));
  mod.def("free_matroid", &free_matroid, py::arg("n"));
  mod.def(
      "partition_matroid",
      [](int ground_size, const std::vector<IntList>& blocks) {
        return partition_matroid(ground_size, to_sets(blocks));
      },
      py::arg("ground_size"), py::arg("blocks"));
  mod.def(
      "graphic_matroid",
      [](int vertices, const std::vector<std::pair<int, int>>& edges) {
        std::vector<GraphEdge> g;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          g.push_back({edges[i].first, edges[i].second, static_cast<Element>(i)});
        }
        return graphic_matroid(vertices, g);
      },
      py::arg("vertices"), py::arg("edges"));
  mod.def("linear_matroid", &linear_matroid, py::arg("prime"), py::arg("columns"));
  mod.def(
      "from_circuits",
      [](int ground_size, const std::vector<IntList>& c) {
        return from_circuits(ground_size, to_sets(c));
      },
      py::arg("ground_size"), py::arg("circuits"));
  mod.def("parse_matroid", &parse_matroid, py::arg("spec"), py::arg("ground_size"));

  mod.def("circuits", [](const Matroid& m) { return to_lists(circuits(m)); });
  mod.def("flats", [](const Matroid& m) {
    std::vector<std::pair<IntList, int>> out;
    for (const Flat& f : flats(m)) out.emplace_back(f.set.to_vector(), f.rank);
    return out;
  });
  mod.def("contract", [](const Matroid& m, const IntList& s) { return contract(m, to_set(s)); });
  mod.def("restrict", [](const Matroid& m, const IntList& s) { return restrict(m, to_set(s)); });
  mod.def(
      "truncate", [](const Matroid& m, int k) { return rainbow::truncate(m, k); },
      py::arg("m"), py::arg("k"));

  mod.def(
      "betti_numbers",
      [](int ground_size, const std::vector<IntList>& facets) {
        return betti_numbers(complex_of(ground_size, facets));
      },
      py::arg("ground_size"), py::arg("facets"),
      "Reduced Betti numbers from degree -1 upward.");
  mod.def(
      "eta",
      [](int ground_size, const std::vector<IntList>& facets) {
        return to_py(eta(complex_of(ground_size, facets)));
      },
      py::arg("ground_size"), py::arg("facets"));
  mod.def(
      "independence_eta",
      [](int ground_size, const std::vector<IntList>& edges) {
        const Hypergraph h(ElementSet::range(ground_size), to_sets(edges));
        return to_py(eta(independence_complex(h)));
      },
      py::arg("ground_size"), py::arg("edges"));
  mod.def(
      "eta_recursion_check",
      [](int ground_size, const std::vector<IntList>& edges, const IntList& e) {
        const Hypergraph h(ElementSet::range(ground_size), to_sets(edges));
        const RecursionCheck r = eta_recursion_check(h, to_set(e));
        py::dict out;
        out["whole"] = to_py(r.whole);
        out["deleted"] = to_py(r.deleted);
        out["contracted"] = to_py(r.contracted);
        out["bound"] = to_py(r.bound);
        out["holds"] = r.holds;
        return out;
      },
      py::arg("ground_size"), py::arg("edges"), py::arg("edge"));

  py::class_<RainbowInstance>(mod, "RainbowInstance")
      .def(py::init([](const Matroid& m, const Matroid& n,
                       const std::vector<IntList>& sets, int target) {
             return RainbowInstance(m, n, to_sets(sets), target);
           }),
           py::arg("m"), py::arg("n"), py::arg("sets"), py::arg("target"))
      .def_property_readonly("sets",
                             [](const RainbowInstance& i) { return to_lists(i.sets()); })
      .def_property_readonly("target", &RainbowInstance::target)
      .def("serialize", &serialize_instance);

  mod.def("parse_instance",
          [](const std::string& text) { return parse_instance(text).instance; });
  mod.def("find_rainbow", [](const RainbowInstance& inst) {
    std::optional<std::vector<std::pair<int, int>>> out;
    if (auto sel = find_rainbow(inst)) {
      out.emplace();
      for (const LayeredElement& p : sel->chosen) out->emplace_back(p.element, p.layer);
    }
    return out;
  });
  mod.def("satisfies_size_hypothesis", &satisfies_size_hypothesis);

  mod.def(
      "run_campaign",
      [](const std::string& name, std::optional<int> n, std::optional<int> ground,
         std::optional<std::size_t> count, std::uint64_t seed, bool exhaustive,
         const std::string& family, unsigned jobs) {
        CampaignParams p{n, ground, count, seed, exhaustive, family, jobs};
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_campaign(name, p);
        }
        py::dict out;
        out["campaign"] = r.campaign;
        out["checked"] = r.checked;
        out["failures"] = r.failures;
        out["notes"] = r.notes;
        out["counterexample"] = r.counterexample;
        out["passed"] = r.passed();
        out["report"] = r.to_string();
        return out;
      },
      py::arg("name"), py::arg("n") = py::none(), py::arg("ground") = py::none(),
      py::arg("count") = py::none(), py::arg("seed") = 0,
      py::arg("exhaustive") = false, py::arg("family") = "", py::arg("jobs") = 1);
}
