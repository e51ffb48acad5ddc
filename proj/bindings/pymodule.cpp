#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "graphk/boundary.hpp"
#include "graphk/equivalence.hpp"
#include "graphk/graph.hpp"
#include "graphk/ktheory.hpp"
#include "graphk/monoid.hpp"
#include "graphk/moves.hpp"
#include "graphk/text.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<long long>>;

long long ll(const graphk::Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::invalid_argument("integer too large to convert");
    return x.convert_to<long long>();
}

graphk::Mat mat_of(const Rows& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    graphk::Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("matrix rows must all have the same length");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = graphk::Int(rows[i][j]);
    }
    return m;
}

Rows rows_of(const graphk::Mat& m) {
    Rows out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = ll(m(i, j));
    return out;
}

std::vector<long long> ints_of(const std::vector<graphk::Int>& v) {
    std::vector<long long> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(ll(x));
    return out;
}

std::vector<graphk::Int> ints_from(const std::vector<long long>& v) {
    return {v.begin(), v.end()};
}

py::dict group_dict(const graphk::Graph& g, const graphk::K0Data& d) {
    py::dict out;
    out["invariant_factors"] = ints_of(d.invariant_factors);
    out["free_rank"] = d.free_rank;
    py::dict cls;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        cls[py::str(g.name(v))] = ints_of(d.classes[v]);
    out["classes"] = cls;
    out["unit"] = ints_of(d.unit);
    out["k1_rank"] = d.k1_rank;
    return out;
}

py::dict cert_dict(const graphk::Certificate& c, std::size_t word_length) {
    py::dict out;
    out["U"] = rows_of(c.u);
    out["V"] = rows_of(c.v);
    out["required_detU"] = std::string(graphk::to_string(c.required_det));
    out["word_length"] = word_length;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic invariants of directed graphs and their algebras";

    py::class_<graphk::Graph>(m, "Graph")
        .def(py::init<>())
        .def("serialize", [](const graphk::Graph& g) { return graphk::serialize_graph(g); })
        .def("dot", [](const graphk::Graph& g) { return graphk::to_dot(g); })
        .def("vertex_count", &graphk::Graph::vertex_count)
        .def("names", &graphk::Graph::names)
        .def("__eq__",
             [](const graphk::Graph& a, const graphk::Graph& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const graphk::Graph& g) {
            return "<Graph with " + std::to_string(g.vertex_count()) + " vertices>";
        });

    m.def("parse_graph", [](const std::string& s) { return graphk::parse_graph(s); });
    m.def("fixture", [](const std::string& n) { return graphk::fixture(n); });
    m.def("fixture_names", [] { return graphk::fixture_names(); });

    m.def("k0", [](const graphk::Graph& g) { return group_dict(g, graphk::k0_of_graph(g)); });
    m.def("h0", [](const graphk::Graph& g) { return group_dict(g, graphk::h0_of_graph(g)); });
    m.def("classify", [](const graphk::Graph& a, const graphk::Graph& b) {
        return std::string(
            graphk::to_string(graphk::pointed_compare(graphk::k0_of_graph(a), graphk::k0_of_graph(b))));
    });

    m.def(
        "monoid_equal",
        [](const graphk::Graph& g, const std::string& lhs, const std::string& rhs,
           std::size_t depth) {
            return std::string(graphk::to_string(
                graphk::monoid_equal(g, graphk::parse_monoid_element(g, lhs),
                                     graphk::parse_monoid_element(g, rhs), depth)));
        },
        py::arg("graph"), py::arg("lhs"), py::arg("rhs"), py::arg("depth") = 12);

    m.def("cyl_intersect", [](const graphk::Graph& g, const std::string& a, const std::string& b) {
        return graphk::format_cylinder_union(
            g, graphk::intersect(g, graphk::parse_cylinder_union(g, a),
                                 graphk::parse_cylinder_union(g, b)));
    });
    m.def("cyl_subtract", [](const graphk::Graph& g, const std::string& a, const std::string& b) {
        return graphk::format_cylinder_union(
            g, graphk::subtract(g, graphk::parse_cylinder_union(g, a),
                                graphk::parse_cylinder_union(g, b)));
    });
    m.def("cyl_class", [](const graphk::Graph& g, const std::string& a) {
        return graphk::format_monoid_element(
            g, graphk::monoid_class_of(g, graphk::parse_cylinder_union(g, a)));
    });
    m.def(
        "cyl_member",
        [](const graphk::Graph& g, const std::string& u, const std::string& path, bool terminal) {
            return std::string(graphk::to_string(
                graphk::member(g, graphk::parse_path(g, path), terminal,
                               graphk::parse_cylinder_union(g, u))));
        },
        py::arg("graph"), py::arg("union"), py::arg("path"), py::arg("terminal") = false);
    m.def("full_space", [](const graphk::Graph& g) {
        return graphk::format_cylinder_union(g, graphk::full_space(g));
    });

    m.def("outsplit", [](const graphk::Graph& g, const std::string& partition) {
        return graphk::outsplit(g, graphk::parse_partition(g, partition));
    });
    m.def("add_sources", [](const graphk::Graph& g, const std::string& vertex, std::size_t n) {
        return graphk::add_sources(g, g.index_of(vertex), n);
    });

    m.def(
        "verify_certificate",
        [](const Rows& b, const Rows& c, const Rows& u, const Rows& v, const std::string& det,
           const std::optional<std::vector<long long>>& unit_src,
           const std::optional<std::vector<long long>>& unit_tgt) {
            graphk::Certificate cert;
            cert.u = mat_of(u);
            cert.v = mat_of(v);
            cert.required_det = graphk::det_req_from_string(det);
            if (unit_src.has_value() != unit_tgt.has_value())
                throw std::invalid_argument("unit vectors must come as a pair");
            if (unit_src) {
                cert.unit_src = ints_from(*unit_src);
                cert.unit_tgt = ints_from(*unit_tgt);
            }
            return graphk::verify_certificate(mat_of(b), mat_of(c), cert);
        },
        py::arg("b"), py::arg("c"), py::arg("u"), py::arg("v"), py::arg("required_det") = "either",
        py::arg("unit_src") = std::nullopt, py::arg("unit_tgt") = std::nullopt);

    m.def(
        "search_certificate",
        [](const Rows& b, const Rows& c, const std::string& det, std::size_t bound,
           const std::optional<std::vector<long long>>& unit_src,
           const std::optional<std::vector<long long>>& unit_tgt) -> py::object {
            if (unit_src.has_value() != unit_tgt.has_value())
                throw std::invalid_argument("unit vectors must come as a pair");
            std::optional<std::pair<std::vector<graphk::Int>, std::vector<graphk::Int>>> units;
            if (unit_src) units = {ints_from(*unit_src), ints_from(*unit_tgt)};
            graphk::SearchResult r = graphk::search_certificate(
                mat_of(b), mat_of(c), graphk::det_req_from_string(det), units, bound);
            if (!r.found) return py::none();
            return cert_dict(r.cert, r.word_length);
        },
        py::arg("b"), py::arg("c"), py::arg("det") = "either", py::arg("bound") = 8,
        py::arg("unit_src") = std::nullopt, py::arg("unit_tgt") = std::nullopt);

    m.def(
        "sign_report",
        [](const graphk::Graph& src, const graphk::Graph& tgt, std::size_t bound) {
            graphk::SignReport rep = graphk::sign_report(src, tgt, bound);
            py::dict out;
            out["verdict"] = std::string(graphk::to_string(rep.verdict));
            out["comparable"] = rep.comparable;
            out["source_weights"] = ints_of(rep.weight_src);
            out["target_weights"] = ints_of(rep.weight_tgt);
            out["plus_found"] = rep.plus.found;
            out["minus_found"] = rep.minus.found;
            if (rep.plus.found) out["plus_certificate"] = cert_dict(rep.plus.cert, rep.plus.word_length);
            if (rep.minus.found)
                out["minus_certificate"] = cert_dict(rep.minus.cert, rep.minus.word_length);
            return out;
        },
        py::arg("source"), py::arg("target"), py::arg("bound") = 8);
}
