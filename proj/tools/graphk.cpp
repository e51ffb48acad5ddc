#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphk/boundary.hpp"
#include "graphk/equivalence.hpp"
#include "graphk/graph.hpp"
#include "graphk/ktheory.hpp"
#include "graphk/monoid.hpp"
#include "graphk/moves.hpp"
#include "graphk/text.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

long long to_ll(const graphk::Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::invalid_argument("integer too large to serialize");
    return x.convert_to<long long>();
}

graphk::Graph load_graph(const std::string& arg) {
    if (auto t = graphk::fixture_text(arg)) return graphk::parse_graph(*t);
    std::ifstream in(arg);
    if (!in)
        throw std::invalid_argument("'" + arg + "' is neither a fixture name nor a readable file");
    std::stringstream ss;
    ss << in.rdbuf();
    return graphk::parse_graph(ss.str());
}

ordered_json vec_json(const std::vector<graphk::Int>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(to_ll(x));
    return a;
}

std::string vec_text(const std::vector<graphk::Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += v[i].str();
    }
    return out;
}

ordered_json mat_json(const graphk::Mat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_ll(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string mat_text(const graphk::Mat& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

graphk::Mat mat_from_json(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;
    graphk::Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix rows must all have the same length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = graphk::Int(row.at(k).get<long long>());
    }
    return m;
}

ordered_json json_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return ordered_json::parse(in);
}

std::vector<graphk::Int> parse_int_list(const std::string& s) {
    std::vector<graphk::Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos)
            throw std::invalid_argument("empty entry in integer list '" + s + "'");
        out.emplace_back(tok);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json k0_json(const graphk::Graph& g, const graphk::K0Data& d) {
    ordered_json j;
    j["invariant_factors"] = vec_json(d.invariant_factors);
    j["free_rank"] = d.free_rank;
    ordered_json cls;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) cls[g.name(v)] = vec_json(d.classes[v]);
    j["classes"] = std::move(cls);
    j["unit"] = vec_json(d.unit);
    j["k1_rank"] = d.k1_rank;
    return j;
}

void k0_text(const graphk::Graph& g, const graphk::K0Data& d) {
    std::cout << "invariant_factors: " << vec_text(d.invariant_factors) << "\n";
    std::cout << "free_rank: " << d.free_rank << "\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        std::cout << "class " << g.name(v) << ": " << vec_text(d.classes[v]) << "\n";
    std::cout << "unit: " << vec_text(d.unit) << "\n";
    std::cout << "k1_rank: " << d.k1_rank << "\n";
}

ordered_json cert_json(const graphk::Certificate& c) {
    ordered_json j;
    j["U"] = mat_json(c.u);
    j["V"] = mat_json(c.v);
    j["required_detU"] = graphk::to_string(c.required_det);
    if (c.unit_src) {
        j["unit_src"] = vec_json(*c.unit_src);
        j["unit_tgt"] = vec_json(*c.unit_tgt);
    }
    return j;
}

graphk::Certificate cert_from_json(const ordered_json& j) {
    graphk::Certificate c;
    c.u = mat_from_json(j.at("U"));
    c.v = mat_from_json(j.at("V"));
    if (j.contains("required_detU"))
        c.required_det = graphk::det_req_from_string(j.at("required_detU").get<std::string>());
    if (j.contains("unit_src") != j.contains("unit_tgt"))
        throw std::invalid_argument("unit vectors must come as a pair");
    if (j.contains("unit_src")) {
        std::vector<graphk::Int> us, ut;
        for (const auto& x : j.at("unit_src")) us.emplace_back(x.get<long long>());
        for (const auto& x : j.at("unit_tgt")) ut.emplace_back(x.get<long long>());
        c.unit_src = std::move(us);
        c.unit_tgt = std::move(ut);
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic invariants of directed graphs and their algebras"};
    app.require_subcommand(1);

    std::string graph_arg, other_arg, format = "text";
    std::string lhs, rhs;
    std::size_t depth = 12;
    std::string op, a_lit, b_lit, path_lit;
    bool terminal = false;
    std::string kind, partition_lit, vertex_name;
    std::size_t count = 1;
    std::string b_file, c_file, cert_file, det = "either", unit_src_s, unit_tgt_s;
    std::size_t bound = 8;
    std::string topic;

    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_graph = [&](CLI::App* sc) {
        sc->add_option("--graph", graph_arg, "fixture name or graph file")->required();
    };

    CLI::App* c_k0 = app.add_subcommand("k0", "canonical cokernel presentation of a graph");
    add_graph(c_k0);
    add_format(c_k0);

    CLI::App* c_h0 = app.add_subcommand("h0", "the same group computed from the truncation presentation");
    add_graph(c_h0);
    add_format(c_h0);

    CLI::App* c_k1 = app.add_subcommand("k1", "rank of the kernel of the stable matrix");
    add_graph(c_k1);
    add_format(c_k1);

    CLI::App* c_classify = app.add_subcommand("classify", "compare the pointed groups of two graphs");
    add_graph(c_classify);
    c_classify->add_option("--other", other_arg, "fixture name or graph file")->required();
    add_format(c_classify);

    CLI::App* c_dot = app.add_subcommand("dot", "graphviz rendering of a graph");
    add_graph(c_dot);

    CLI::App* c_meq = app.add_subcommand("monoid-eq", "decide equality of two monoid elements");
    add_graph(c_meq);
    c_meq->add_option("--lhs", lhs, "monoid element literal")->required();
    c_meq->add_option("--rhs", rhs, "monoid element literal")->required();
    c_meq->add_option("--depth", depth, "search depth (max total multiplicity)");
    add_format(c_meq);

    CLI::App* c_cyl = app.add_subcommand("cyl-op", "operate on unions of boundary cylinders");
    add_graph(c_cyl);
    c_cyl->add_option("--op", op, "operation")
        ->required()
        ->check(CLI::IsMember({"intersect", "subtract", "member", "class", "full"}));
    c_cyl->add_option("--a", a_lit, "first cylinder union literal");
    c_cyl->add_option("--b", b_lit, "second cylinder union literal");
    c_cyl->add_option("--path", path_lit, "path literal for member");
    c_cyl->add_flag("--terminal", terminal, "the path is a whole boundary point");
    add_format(c_cyl);

    CLI::App* c_move = app.add_subcommand("move", "apply a graph move and print the new graph");
    add_graph(c_move);
    c_move->add_option("--kind", kind, "move kind")
        ->required()
        ->check(CLI::IsMember({"outsplit", "add-sources", "fan"}));
    c_move->add_option("--partition", partition_lit, "outsplit partition literal");
    c_move->add_option("--vertex", vertex_name, "vertex receiving new sources");
    c_move->add_option("--count", count, "number of sources / fan width");

    CLI::App* c_cv = app.add_subcommand("cert-verify", "check an equivalence certificate");
    c_cv->add_option("--b", b_file, "source matrix JSON file")->required();
    c_cv->add_option("--c", c_file, "target matrix JSON file")->required();
    c_cv->add_option("--cert", cert_file, "certificate JSON file")->required();
    add_format(c_cv);

    CLI::App* c_cs = app.add_subcommand("cert-search", "search for an equivalence certificate");
    c_cs->add_option("--b", b_file, "source matrix JSON file")->required();
    c_cs->add_option("--c", c_file, "target matrix JSON file")->required();
    c_cs->add_option("--det", det, "required determinant of the row factor")
        ->check(CLI::IsMember({"+1", "-1", "either"}));
    c_cs->add_option("--bound", bound, "maximum word length");
    c_cs->add_option("--unit-src", unit_src_s, "comma-separated source unit vector");
    c_cs->add_option("--unit-tgt", unit_tgt_s, "comma-separated target unit vector");
    add_format(c_cs);

    CLI::App* c_rep = app.add_subcommand("report", "print a named reproduction report");
    c_rep->add_option("topic", topic, "report topic (available: unit-flip)")->required();
    c_rep->add_option("--bound", bound, "certificate search bound");
    add_format(c_rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_k0) || app.got_subcommand(c_h0)) {
            graphk::Graph g = load_graph(graph_arg);
            graphk::K0Data d =
                app.got_subcommand(c_k0) ? graphk::k0_of_graph(g) : graphk::h0_of_graph(g);
            if (format == "json")
                emit(k0_json(g, d));
            else
                k0_text(g, d);
        } else if (app.got_subcommand(c_k1)) {
            graphk::Graph g = load_graph(graph_arg);
            graphk::K0Data d = graphk::k0_of_graph(g);
            if (format == "json")
                emit(ordered_json{{"k1_rank", d.k1_rank}});
            else
                std::cout << "k1_rank: " << d.k1_rank << "\n";
        } else if (app.got_subcommand(c_classify)) {
            graphk::Graph a = load_graph(graph_arg);
            graphk::Graph b = load_graph(other_arg);
            graphk::PointedCompare v =
                graphk::pointed_compare(graphk::k0_of_graph(a), graphk::k0_of_graph(b));
            if (format == "json")
                emit(ordered_json{{"verdict", graphk::to_string(v)}});
            else
                std::cout << graphk::to_string(v) << "\n";
        } else if (app.got_subcommand(c_dot)) {
            std::cout << graphk::to_dot(load_graph(graph_arg));
        } else if (app.got_subcommand(c_meq)) {
            graphk::Graph g = load_graph(graph_arg);
            graphk::MonoidElement a = graphk::parse_monoid_element(g, lhs);
            graphk::MonoidElement b = graphk::parse_monoid_element(g, rhs);
            graphk::Tri r = graphk::monoid_equal(g, a, b, depth);
            if (format == "json")
                emit(ordered_json{{"result", graphk::to_string(r)}});
            else
                std::cout << graphk::to_string(r) << "\n";
        } else if (app.got_subcommand(c_cyl)) {
            graphk::Graph g = load_graph(graph_arg);
            auto need = [&](const std::string& val, const char* name) {
                if (val.empty())
                    throw std::invalid_argument(std::string("--") + name + " is required for op " + op);
                return val;
            };
            std::string result;
            if (op == "full") {
                result = graphk::format_cylinder_union(g, graphk::full_space(g));
            } else if (op == "intersect" || op == "subtract") {
                graphk::CylinderUnion a = graphk::parse_cylinder_union(g, need(a_lit, "a"));
                graphk::CylinderUnion b = graphk::parse_cylinder_union(g, need(b_lit, "b"));
                graphk::CylinderUnion r = op == "intersect" ? graphk::intersect(g, a, b)
                                                            : graphk::subtract(g, a, b);
                result = graphk::format_cylinder_union(g, r);
            } else if (op == "class") {
                graphk::CylinderUnion a = graphk::parse_cylinder_union(g, need(a_lit, "a"));
                result = graphk::format_monoid_element(g, graphk::monoid_class_of(g, a));
            } else {
                graphk::CylinderUnion a = graphk::parse_cylinder_union(g, need(a_lit, "a"));
                graphk::Path p = graphk::parse_path(g, need(path_lit, "path"));
                result = graphk::to_string(graphk::member(g, p, terminal, a));
            }
            if (format == "json")
                emit(ordered_json{{"result", result}});
            else
                std::cout << result << "\n";
        } else if (app.got_subcommand(c_move)) {
            graphk::Graph g = load_graph(graph_arg);
            graphk::Graph out;
            if (kind == "outsplit") {
                if (partition_lit.empty())
                    throw std::invalid_argument("--partition is required for outsplit");
                out = graphk::outsplit(g, graphk::parse_partition(g, partition_lit));
            } else if (kind == "add-sources") {
                if (vertex_name.empty())
                    throw std::invalid_argument("--vertex is required for add-sources");
                out = graphk::add_sources(g, g.index_of(vertex_name), count);
            } else {
                out = graphk::attach_fan_approx(g, count);
            }
            std::cout << graphk::serialize_graph(out);
        } else if (app.got_subcommand(c_cv)) {
            graphk::Mat b = mat_from_json(json_from_file(b_file));
            graphk::Mat c = mat_from_json(json_from_file(c_file));
            graphk::Certificate cert = cert_from_json(json_from_file(cert_file));
            bool ok = graphk::verify_certificate(b, c, cert);
            if (format == "json")
                emit(ordered_json{{"valid", ok}});
            else
                std::cout << (ok ? "valid" : "invalid") << "\n";
        } else if (app.got_subcommand(c_cs)) {
            graphk::Mat b = mat_from_json(json_from_file(b_file));
            graphk::Mat c = mat_from_json(json_from_file(c_file));
            if (unit_src_s.empty() != unit_tgt_s.empty())
                throw std::invalid_argument("unit vectors must come as a pair");
            std::optional<std::pair<std::vector<graphk::Int>, std::vector<graphk::Int>>> units;
            if (!unit_src_s.empty())
                units = {parse_int_list(unit_src_s), parse_int_list(unit_tgt_s)};
            graphk::SearchResult r = graphk::search_certificate(
                b, c, graphk::det_req_from_string(det), units, bound);
            if (format == "json") {
                ordered_json j;
                j["found"] = r.found;
                if (r.found) {
                    j["word_length"] = r.word_length;
                    j["certificate"] = cert_json(r.cert);
                }
                emit(j);
            } else if (r.found) {
                std::cout << "found: yes\nword_length: " << r.word_length << "\n"
                          << "U: " << mat_text(r.cert.u) << "\nV: " << mat_text(r.cert.v) << "\n"
                          << "required_detU: " << graphk::to_string(r.cert.required_det) << "\n";
            } else {
                std::cout << "found: no\n";
            }
        } else if (app.got_subcommand(c_rep)) {
            if (topic != "unit-flip")
                throw std::invalid_argument("unknown report topic '" + topic + "'");
            graphk::Graph e = graphk::fixture("graph_e");
            graphk::Graph f = graphk::fixture("graph_f");
            graphk::SignReport rep = graphk::sign_report(e, f, bound);
            if (format == "json") {
                ordered_json j;
                j["source"] = "graph_e";
                j["target"] = "graph_f";
                j["core_source_vertices"] = rep.core_src.names();
                j["core_target_vertices"] = rep.core_tgt.names();
                j["source_weights"] = vec_json(rep.weight_src);
                j["target_weights"] = vec_json(rep.weight_tgt);
                j["verdict"] = graphk::to_string(rep.verdict);
                j["plus_found"] = rep.plus.found;
                j["minus_found"] = rep.minus.found;
                if (rep.minus.found) {
                    j["minus_word_length"] = rep.minus.word_length;
                    j["minus_certificate"] = cert_json(rep.minus.cert);
                }
                emit(j);
            } else {
                std::cout << "source graph: graph_e (weights " << vec_text(rep.weight_src) << ")\n";
                std::cout << "target graph: graph_f, pruned to its cycle-reaching part (weights "
                          << vec_text(rep.weight_tgt) << ")\n";
                std::cout << "pointed-class comparison: " << graphk::to_string(rep.verdict) << "\n";
                std::cout << "det +1 certificate within bound " << bound << ": "
                          << (rep.plus.found ? "found" : "not found") << "\n";
                std::cout << "det -1 certificate within bound " << bound << ": "
                          << (rep.minus.found ? "found" : "not found");
                if (rep.minus.found)
                    std::cout << ", word length " << rep.minus.word_length
                              << ", U = " << mat_text(rep.minus.cert.u)
                              << ", V = " << mat_text(rep.minus.cert.v);
                std::cout << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
