// Python bindings. Graphs cross the boundary as (n, [(u, v), ...]) with
// 0-based vertices; edge ids are list positions. Cycle sets are lists of
// edge-id lists, decompositions are lists of bags.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "plybasis/builders.hpp"
#include "plybasis/cli.hpp"
#include "plybasis/errors.hpp"
#include "plybasis/io.hpp"
#include "plybasis/providers.hpp"
#include "plybasis/verification.hpp"

namespace py = pybind11;
using namespace plybasis;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;
using Sets = std::vector<std::vector<int>>;
using Bags = std::vector<std::vector<int>>;

Graph to_graph(int n, const EdgeList& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, std::move(list));
}

EdgeList from_graph(const Graph& g) {
  EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

GeneratingSet to_set(const Graph& g, const Sets& sets) {
  GeneratingSet out(static_cast<std::size_t>(g.edge_count()));
  for (const auto& s : sets) {
    EdgeSet x(static_cast<std::size_t>(g.edge_count()));
    for (int e : s) {
      if (e < 0 || e >= g.edge_count()) throw UsageError("edge id " + std::to_string(e) + " out of range");
      x.flip(static_cast<std::size_t>(e));
    }
    out.add(std::move(x));
  }
  return out;
}

std::vector<int> ids(const EdgeSet& x) {
  std::vector<int> out;
  x.for_each([&](int e) { out.push_back(e); });
  return out;
}

Sets from_set(const GeneratingSet& b) {
  Sets out;
  for (const EdgeSet& x : b.elements()) out.push_back(ids(x));
  return out;
}

py::dict build_report(const Graph& g, const BuildResult& r) {
  py::dict d;
  d["basis"] = from_set(r.basis);
  d["ply"] = r.basis.max_ply();
  d["forest"] = ids(r.forest);
  d["d_max"] = r.trace.d_max;
  d["generating"] = is_generating_set(g, r.basis);
  return d;
}

}  // namespace

PYBIND11_MODULE(_plybasis, m) {
  m.doc() = "Low-ply generating sets of graph cycle spaces";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("cycle_rank", [](int n, const EdgeList& e) { return cycle_rank(to_graph(n, e)); }, py::arg("n"),
        py::arg("edges"));

  m.def(
      "is_generating_set",
      [](int n, const EdgeList& e, const Sets& basis) {
        const Graph g = to_graph(n, e);
        return is_generating_set(g, to_set(g, basis));
      },
      py::arg("n"), py::arg("edges"), py::arg("basis"));

  m.def(
      "ply_counts",
      [](int n, const EdgeList& e, const Sets& basis) {
        const Graph g = to_graph(n, e);
        return to_set(g, basis).ply_counts();
      },
      py::arg("n"), py::arg("edges"), py::arg("basis"), "ply of every edge, indexed by edge id");

  m.def(
      "validate_decomposition",
      [](int n, const EdgeList& e, const Bags& bags) -> std::optional<std::string> {
        const auto v = validate(to_graph(n, e), PathDecomposition(bags));
        if (!v) return std::nullopt;
        return v->message;
      },
      py::arg("n"), py::arg("edges"), py::arg("bags"), "None if valid, else the first violation");

  m.def(
      "normalize",
      [](int n, const EdgeList& e, const Bags& bags) { return normalize(to_graph(n, e), PathDecomposition(bags)).bags(); },
      py::arg("n"), py::arg("edges"), py::arg("bags"));

  m.def(
      "exact_pathwidth",
      [](int n, const EdgeList& e, int cap) {
        const PathwidthResult r = exact_pathwidth(to_graph(n, e), cap);
        return py::make_tuple(r.width, r.decomposition.bags());
      },
      py::arg("n"), py::arg("edges"), py::arg("cap") = kDefaultPathwidthCap);

  m.def(
      "skeleton_vertices",
      [](int n, const EdgeList& forest_edges, const std::vector<int>& terminals) {
        const Graph g = to_graph(n, forest_edges);
        const Forest f(g, g.all_edges(), std::vector<char>(static_cast<std::size_t>(n), 1));
        return skeleton(f, terminals).vertices;
      },
      py::arg("n"), py::arg("forest_edges"), py::arg("terminals"));

  m.def(
      "build_pw4t",
      [](int n, const EdgeList& e, const Bags& bags) {
        const Graph g = to_graph(n, e);
        return build_report(g, build_pw4t(g, normalize(g, PathDecomposition(bags))));
      },
      py::arg("n"), py::arg("edges"), py::arg("bags"), "bags are normalized first");

  m.def(
      "build_adhesion",
      [](int n, const EdgeList& e, const Bags& bags, int k, std::optional<int> b, const std::string& bag_basis,
         std::uint64_t seed) {
        const Graph g = to_graph(n, e);
        const PathDecomposition d(bags);
        const BagBasisProvider provider = make_provider(bag_basis, seed);
        int bound = 0;
        if (b) {
          bound = *b;
        } else {
          for (const EdgeSet& h : bag_graphs(g, d)) bound = std::max(bound, provider(g, h).max_ply());
        }
        py::dict out = build_report(g, build_adhesion(g, d, k, bound, provider));
        out["b"] = bound;
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("bags"), py::arg("k"), py::arg("b") = py::none(),
      py::arg("bag_basis") = "best", py::arg("seed") = 0);

  m.def(
      "fh",
      [](int n, const EdgeList& e, std::uint64_t seed) { return from_set(fh_generating_set(to_graph(n, e), seed)); },
      py::arg("n"), py::arg("edges"), py::arg("seed") = 0);

  m.def(
      "maxply",
      [](int n, const EdgeList& e, bool randomized, std::uint64_t seed) {
        return from_set(maxply_generating_set(to_graph(n, e),
                                              randomized ? MaxPlyMode::Randomized : MaxPlyMode::Deterministic, seed));
      },
      py::arg("n"), py::arg("edges"), py::arg("randomized") = false, py::arg("seed") = 0);

  m.def(
      "fundamental",
      [](int n, const EdgeList& e) {
        const Graph g = to_graph(n, e);
        return from_set(fundamental_basis(g, spanning_forest(g)));
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "basis_number",
      [](int n, const EdgeList& e, int cap) {
        const MinPlyResult r = brute_force_min_ply(to_graph(n, e), cap);
        return py::make_tuple(r.bn, from_set(r.witness));
      },
      py::arg("n"), py::arg("edges"), py::arg("cap") = kDefaultOracleRankCap, "exact, for small cycle rank only");

  m.def(
      "parse_graph",
      [](const std::string& text) {
        const Graph g = parse_graph(text);
        return py::make_tuple(g.vertex_count(), from_graph(g));
      },
      py::arg("text"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "returns (exit code, stdout, stderr)");
}
