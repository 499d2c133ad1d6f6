// Copyright 2026 The wmstream Authors
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

#include <string>

#include "wmstream/errors.h"
#include "wmstream/estimator.h"
#include "wmstream/generators.h"
#include "wmstream/oracle.h"
#include "wmstream/reduction.h"
#include "wmstream/schedule.h"
#include "wmstream/stream.h"

namespace py = pybind11;
using namespace wmstream;

namespace {

EstimatorKind KindFromName(const std::string& name) {
  auto kind = ParseEstimatorKind(name);
  if (!kind) throw Error(ErrorKind::kParameter, "unknown estimator '" + name + "'");
  return *kind;
}

template <typename T>
T FromName(std::optional<T> value, const std::string& what, const std::string& name) {
  if (!value) throw Error(ErrorKind::kParameter, "unknown " + what + " '" + name + "'");
  return *value;
}

GraphSnapshot SnapshotFromEdges(VertexId n, const std::vector<std::tuple<VertexId, VertexId, double>>& edges) {
  StreamHeader header{n, 0.0, StreamModel::kInsertOnly};
  std::vector<StreamUpdate> updates;
  for (const auto& [u, v, w] : edges) {
    header.wmax = std::max(header.wmax, w);
    updates.push_back({UpdateOp::kInsert, u, v, w});
  }
  header.wmax = std::max(header.wmax, 1.0);
  return Replay(header, updates);
}

py::dict OracleToDict(const oracle::OracleResult& r) {
  py::list witness;
  for (const Edge& e : r.witness) witness.append(py::make_tuple(e.u, e.v, e.w));
  py::dict d;
  d["value"] = r.value;
  d["witness"] = witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Streaming maximum weighted matching estimation";

  static py::exception<Error> error(m, "WmstreamError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc =
          py::reinterpret_borrow<py::object>(error.ptr())(py::str(e.what()));
      exc.attr("kind") = std::string(ToString(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<LevelSchedule>(m, "LevelSchedule")
      .def_property_readonly("epsilon", &LevelSchedule::epsilon)
      .def_property_readonly("wmax", &LevelSchedule::wmax)
      .def_property_readonly("T", &LevelSchedule::top)
      .def_property_readonly("thresholds", [](const LevelSchedule& s) {
        return std::vector<double>(s.thresholds().begin(), s.thresholds().end());
      })
      .def("top_level", &LevelSchedule::TopLevel, py::arg("w"));

  m.def("build_schedule", &LevelSchedule::Build, py::arg("epsilon"), py::arg("wmax"));

  py::class_<StreamHeader>(m, "StreamHeader")
      .def_readonly("n", &StreamHeader::n)
      .def_readonly("wmax", &StreamHeader::wmax)
      .def_property_readonly("model", [](const StreamHeader& h) {
        return std::string(ToString(h.model));
      });

  py::class_<Stream>(m, "Stream")
      .def_readonly("header", &Stream::header)
      .def_property_readonly("updates", [](const Stream& s) {
        py::list out;
        for (const StreamUpdate& u : s.updates) {
          out.append(py::make_tuple(u.op == UpdateOp::kInsert ? "+" : "-", u.u, u.v, u.w));
        }
        return out;
      })
      .def("serialize", &SerializeStream)
      .def("final_edges", [](const Stream& s) {
        py::list out;
        for (const Edge& e : Replay(s.header, s.updates).edges) {
          out.append(py::make_tuple(e.u, e.v, e.w));
        }
        return out;
      })
      .def("__len__", [](const Stream& s) { return s.updates.size(); });

  m.def("parse_stream",
        [](const std::string& text, bool strict) { return ParseStream(text, {strict}); },
        py::arg("text"), py::arg("strict") = true);

  py::class_<LevelState>(m, "LevelState")
      .def_readonly("level", &LevelState::level)
      .def_readonly("s_hat", &LevelState::s_hat)
      .def_readonly("m_hat", &LevelState::m_hat)
      .def_readonly("delta_count", &LevelState::delta_count)
      .def_readonly("b", &LevelState::b)
      .def_readonly("a", &LevelState::a)
      .def_readonly("words", &LevelState::words);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("schedule", &RunReport::schedule)
      .def_readonly("levels", &RunReport::levels)
      .def_readonly("estimate", &RunReport::estimate)
      .def_readonly("total_words", &RunReport::total_words)
      .def_readonly("delta", &RunReport::delta)
      .def_readonly("delta_prime", &RunReport::delta_prime)
      .def_property_readonly("estimator", [](const RunReport& r) {
        return std::string(ToString(r.estimator));
      })
      .def("to_json", &ReportToJson)
      .def("check_lemma1", &CheckLemma1)
      .def("check_observations", &CheckObservations);

  m.def("run",
        [](const Stream& stream, double epsilon, double delta, const std::string& estimator) {
          return Run(stream, {epsilon, delta, KindFromName(estimator)});
        },
        py::arg("stream"), py::arg("epsilon") = 0.5, py::arg("delta") = 0.1,
        py::arg("estimator") = "exact");

  m.def("combine",
        [](const LevelSchedule& s, const std::vector<double>& s_hats) { return Combine(s, s_hats); },
        py::arg("schedule"), py::arg("s_hats"));

  m.def("sandwich_holds", &SandwichHolds, py::arg("estimate"), py::arg("optimum"),
        py::arg("lambda_"), py::arg("epsilon"));

  m.def("exact_mwm",
        [](VertexId n, const std::vector<std::tuple<VertexId, VertexId, double>>& edges) {
          return OracleToDict(oracle::ExactMwm(SnapshotFromEdges(n, edges)));
        },
        py::arg("n"), py::arg("edges"));
  m.def("exact_mcm",
        [](VertexId n, const std::vector<std::tuple<VertexId, VertexId, double>>& edges) {
          return OracleToDict(oracle::ExactMcm(SnapshotFromEdges(n, edges)));
        },
        py::arg("n"), py::arg("edges"));
  m.def("arboricity",
        [](VertexId n, const std::vector<std::tuple<VertexId, VertexId, double>>& edges) {
          return oracle::Arboricity(SnapshotFromEdges(n, edges));
        },
        py::arg("n"), py::arg("edges"));

  m.def("generate",
        [](const std::string& family, VertexId n, VertexId rows, VertexId cols, int nu,
           double p, const std::string& weights, double wmax, double alpha,
           const std::string& order, double churn, std::uint64_t seed) {
          gen::GenConfig c;
          c.family = FromName(gen::ParseFamily(family), "family", family);
          c.n = n;
          c.rows = rows;
          c.cols = cols;
          c.nu = nu;
          c.p = p;
          c.weights = FromName(gen::ParseWeightDist(weights), "weights", weights);
          c.wmax = wmax;
          c.alpha = alpha;
          c.order = FromName(gen::ParseOrder(order), "order", order);
          c.churn = churn;
          c.seed = seed;
          return gen::Generate(c);
        },
        py::arg("family") = "forest-union", py::arg("n") = 8, py::arg("rows") = 3,
        py::arg("cols") = 3, py::arg("nu") = 1, py::arg("p") = 0.5,
        py::arg("weights") = "constant", py::arg("wmax") = 1.0, py::arg("alpha") = 2.0,
        py::arg("order") = "as-generated", py::arg("churn") = 0.0, py::arg("seed") = 1);
}
