#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <map>

#include "scimap/correlate.hpp"
#include "scimap/corpus.hpp"
#include "scimap/eigen.hpp"
#include "scimap/error.hpp"
#include "scimap/factor.hpp"
#include "scimap/graph.hpp"
#include "scimap/local.hpp"
#include "scimap/mds.hpp"
#include "scimap/report.hpp"
#include "scimap/synthetic.hpp"

namespace py = pybind11;
using namespace scimap;

namespace {

py::array_t<double> to_numpy(const Matrix& m) {
  py::array_t<double> a({m.rows(), m.cols()});
  auto v = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i, j) = m(i, j);
  return a;
}

Matrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw Error("expected a 2-d array");
  Matrix m(a.shape(0), a.shape(1));
  auto v = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = v(i, j);
  return m;
}

std::vector<std::string> ids_of(const JournalRegistry& reg) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) ids.push_back(reg.id(i));
  return ids;
}

py::object as_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

CitationMatrix load(const std::string& registry, const std::string& edges, bool auto_register) {
  auto reg_in = open(registry);
  auto edge_in = open(edges);
  return ingest_edges(edge_in, ingest_registry(reg_in), {auto_register});
}

CitationMatrix from_edges(const std::vector<std::string>& ids,
                          const std::vector<std::tuple<std::string, std::string, Count>>& edges) {
  JournalRegistry reg;
  for (const auto& id : ids) reg.add({id, id, false});
  std::map<std::pair<std::size_t, std::size_t>, Count> cells;
  for (const auto& [a, b, c] : edges) {
    const auto i = reg.find(a), j = reg.find(b);
    if (!i || !j) throw Error("unknown journal id in edge " + a + " -> " + b);
    if (c == 0) throw Error("count must be a positive integer");
    cells[{*i, *j}] += c;
  }
  return CitationMatrix::from_cells(reg, cells);
}

}  // namespace

PYBIND11_MODULE(_scimap, m) {
  m.doc() = "Journal citation-pattern analysis";
  py::register_exception<Error>(m, "ScimapError", PyExc_ValueError);

  py::class_<CitationMatrix>(m, "CitationMatrix")
      .def_static("load", &load, py::arg("registry"), py::arg("edges"),
                  py::arg("auto_register") = false)
      .def_static("from_edges", &from_edges, py::arg("ids"), py::arg("edges"))
      .def_property_readonly("n", &CitationMatrix::n)
      .def_property_readonly("nonzero", &CitationMatrix::nonzero)
      .def_property_readonly("singles", &CitationMatrix::singles)
      .def_property_readonly("ids", [](const CitationMatrix& c) { return ids_of(c.journals()); })
      .def("count", &CitationMatrix::count, py::arg("citing"), py::arg("cited"))
      .def("dense", [](const CitationMatrix& c) {
        Matrix d(c.n(), c.n());
        for (std::size_t i = 0; i < c.n(); ++i)
          for (std::size_t j = 0; j < c.n(); ++j) d(i, j) = static_cast<double>(c.count(i, j));
        return to_numpy(d);
      });

  m.def("density", [](const CitationMatrix& c) { return as_python(to_json(density(c))); });

  py::class_<CorrelationMatrix>(m, "CorrelationMatrix")
      .def_property_readonly("ids", [](const CorrelationMatrix& c) { return ids_of(c.journals); })
      .def_property_readonly("r", [](const CorrelationMatrix& c) { return to_numpy(c.r); })
      .def_property_readonly("valid", [](const CorrelationMatrix& c) { return c.valid; });

  m.def(
      "correlate",
      [](const CitationMatrix& c, const std::string& axis, const std::string& diagonal,
         unsigned threads) {
        return citing_correlation(c, {parse_axis(axis), parse_diagonal_policy(diagonal), threads});
      },
      py::arg("matrix"), py::arg("axis") = "citing-rows", py::arg("diagonal") = "kept",
      py::arg("threads") = 0);

  m.def(
      "sym_eig",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& s) {
        const auto e = sym_eig(from_numpy(s));
        return py::make_tuple(e.values, to_numpy(e.vectors));
      },
      py::arg("s"));

  py::class_<FactorModel>(m, "FactorModel")
      .def_property_readonly("ids", [](const FactorModel& f) { return ids_of(f.journals); })
      .def_readonly("k", &FactorModel::k)
      .def_readonly("eigenvalues", &FactorModel::eigenvalues)
      .def_readonly("explained_variance", &FactorModel::explained_variance)
      .def_readonly("excluded", &FactorModel::excluded)
      .def_readonly("warnings", &FactorModel::warnings)
      .def_property_readonly("loadings", [](const FactorModel& f) { return to_numpy(f.loadings); })
      .def_property_readonly("rotation_matrix",
                             [](const FactorModel& f) { return to_numpy(f.rotation.matrix); })
      .def_property_readonly("communalities", &FactorModel::communalities)
      .def("to_dict", [](const FactorModel& f) { return as_python(to_json(f)); });

  m.def(
      "factors",
      [](const CorrelationMatrix& corr, std::optional<std::size_t> k, bool rotate,
         bool kaiser_normalize, double tol, int max_sweeps) {
        FactorModel model = extract(corr, k);
        return rotate ? varimax(std::move(model), {kaiser_normalize, tol, max_sweeps}) : model;
      },
      py::arg("corr"), py::arg("k") = py::none(), py::arg("rotate") = true,
      py::arg("kaiser_normalize") = true, py::arg("tol") = 1e-7, py::arg("max_sweeps") = 100);

  m.def(
      "components",
      [](const CorrelationMatrix& corr, double threshold, std::size_t min_size) {
        return as_python(to_json(biconnected_components(threshold_graph(corr, threshold), min_size)));
      },
      py::arg("corr"), py::arg("threshold"), py::arg("min_size") = 3);

  m.def(
      "sweep",
      [](const CorrelationMatrix& corr, double start, double step, double stop,
         std::size_t min_size) {
        SweepOptions o;
        o.start = start;
        o.step = step;
        o.stop = stop;
        o.min_size = min_size;
        return as_python(to_json(threshold_sweep(corr, o))["levels"]);
      },
      py::arg("corr"), py::arg("start") = 0.2, py::arg("step") = 0.1, py::arg("stop") = 0.9,
      py::arg("min_size") = 3);

  m.def(
      "local_environment",
      [](const CitationMatrix& c, const std::string& seed, double fraction) {
        return as_python(to_json(local_environment(c, seed, fraction)));
      },
      py::arg("matrix"), py::arg("seed"), py::arg("fraction") = 0.01);

  m.def(
      "local_factors",
      [](const CitationMatrix& c, const std::string& seed, double fraction,
         std::optional<std::size_t> k) {
        LocalAnalysisOptions o;
        o.k = k;
        return local_factor_analysis(local_environment(c, seed, fraction), o);
      },
      py::arg("matrix"), py::arg("seed"), py::arg("fraction") = 0.01, py::arg("k") = py::none());

  m.def(
      "mds",
      [](const CorrelationMatrix& corr, std::size_t dim, const std::string& dissimilarity) {
        const Layout l = classical_mds(correlation_to_distance(corr, parse_dissimilarity(dissimilarity)), dim);
        py::dict out;
        out["ids"] = l.journals;
        out["coords"] = to_numpy(l.coords);
        out["stress"] = l.stress;
        out["eigenvalues"] = l.eigenvalues;
        out["negative_mass"] = l.negative_mass;
        return out;
      },
      py::arg("corr"), py::arg("dim") = 2, py::arg("dissimilarity") = "one-minus-r");

  m.def(
      "planted_blocks",
      [](std::size_t blocks, std::size_t block_size, std::size_t hubs, std::uint64_t seed) {
        synthetic::PlantedOptions o;
        o.blocks = blocks;
        o.block_size = block_size;
        o.hubs = hubs;
        o.seed = seed;
        auto p = synthetic::planted_blocks(o);
        return py::make_tuple(p.matrix, p.block_ids, p.hub_ids);
      },
      py::arg("blocks") = 3, py::arg("block_size") = 8, py::arg("hubs") = 2, py::arg("seed") = 1);
}
