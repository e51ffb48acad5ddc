#include "graphk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace graphk {

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Regular: return "Regular";
        case VertexClass::InfiniteEmitter: return "InfiniteEmitter";
        case VertexClass::Sink: return "Sink";
    }
    return "?";
}

std::size_t Graph::add_vertex(const std::string& name) {
    if (index_.contains(name)) throw std::invalid_argument("duplicate vertex: " + name);
    names_.push_back(name);
    out_.emplace_back();
    index_.emplace(name, names_.size() - 1);
    return names_.size() - 1;
}

std::size_t Graph::ensure_vertex(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    return add_vertex(name);
}

void Graph::add_edges(std::size_t src, std::size_t dst, ExtNat count) {
    check_vertex(src);
    check_vertex(dst);
    if (count == ExtNat(0)) throw std::invalid_argument("zero multiplicity");
    auto& slot = out_[src][dst];
    slot = (slot.is_omega() || count.is_omega()) ? ExtNat::omega() : slot + count;
}

std::optional<std::size_t> Graph::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Graph::index_of(std::string_view name) const {
    auto v = find(name);
    if (!v) throw std::invalid_argument("unknown vertex: " + std::string(name));
    return *v;
}

ExtNat Graph::mult(std::size_t src, std::size_t dst) const {
    check_vertex(src);
    check_vertex(dst);
    auto it = out_[src].find(dst);
    return it == out_[src].end() ? ExtNat(0) : it->second;
}

const std::map<std::size_t, ExtNat>& Graph::out(std::size_t v) const {
    check_vertex(v);
    return out_[v];
}

ExtNat Graph::out_degree(std::size_t v) const {
    ExtNat d = 0;
    for (const auto& [_, c] : out(v)) d += c;
    return d;
}

bool Graph::has_incoming(std::size_t v) const {
    check_vertex(v);
    for (const auto& adj : out_)
        if (adj.contains(v)) return true;
    return false;
}

VertexClass Graph::classify(std::size_t v) const {
    const auto& adj = out(v);
    if (adj.empty()) return VertexClass::Sink;
    for (const auto& [_, c] : adj)
        if (c.is_omega()) return VertexClass::InfiniteEmitter;
    return VertexClass::Regular;
}

std::vector<std::size_t> Graph::regular_vertices() const {
    std::vector<std::size_t> r;
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (classify(v) == VertexClass::Regular) r.push_back(v);
    return r;
}

bool Graph::valid_edge(const Edge& e) const {
    if (e.src >= vertex_count() || e.dst >= vertex_count()) return false;
    return ExtNat(e.index) < mult(e.src, e.dst);
}

void Graph::check_vertex(std::size_t v) const {
    if (v >= vertex_count()) throw std::invalid_argument("vertex index out of range");
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

ExtNat parse_count(std::string_view tok, std::size_t line) {
    if (tok == "inf") return ExtNat::omega();
    std::uint64_t n = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(line, "bad multiplicity '" + std::string(tok) + "' (positive integer or inf)");
    if (n == 0) throw ParseError(line, "multiplicity must be positive");
    return ExtNat(n);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    Graph g;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        // A comment starts at line start or after whitespace; a mid-word '#'
        // belongs to the name, so serialized move results re-parse exactly.
        for (std::size_t i = 0; i < line.size(); ++i)
            if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
                line = line.substr(0, i);
                break;
            }
        auto toks = tokens(line);
        if (toks.empty()) continue;

        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: vertex NAME");
            if (g.find(toks[1])) throw ParseError(lineno, "duplicate vertex declaration: " + std::string(toks[1]));
            g.add_vertex(std::string(toks[1]));
        } else if (toks[0] == "edge") {
            if (toks.size() != 4) throw ParseError(lineno, "expected: edge SRC DST COUNT");
            ExtNat c = parse_count(toks[3], lineno);
            std::size_t s = g.ensure_vertex(std::string(toks[1]));
            std::size_t d = g.ensure_vertex(std::string(toks[2]));
            g.add_edges(s, d, c);
        } else {
            throw ParseError(lineno, "unknown directive '" + std::string(toks[0]) + "'");
        }
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "vertex " << g.name(v) << "\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& [t, c] : g.out(v)) os << "edge " << g.name(v) << " " << g.name(t) << " " << c.str() << "\n";
    return os.str();
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g) {
    if (g.vertex_count() == 0) return "digraph { }\n";
    std::ostringstream os;
    os << "digraph {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  " << dot_quote(g.name(v)) << ";\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& [t, c] : g.out(v)) {
            std::string arrow = "  " + dot_quote(g.name(v)) + " -> " + dot_quote(g.name(t));
            if (c.is_omega()) {
                os << arrow << " [label=\"∞\"];\n";
            } else if (c.finite() <= 4) {
                for (std::uint64_t k = 0; k < c.finite(); ++k) os << arrow << ";\n";
            } else {
                os << arrow << " [label=\"" << c.finite() << "\"];\n";
            }
        }
    os << "}\n";
    return os.str();
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<std::size_t>& map,
                std::vector<bool>& used, std::size_t v) {
    if (v == a.vertex_count()) return true;
    for (std::size_t w = 0; w < b.vertex_count(); ++w) {
        if (used[w]) continue;
        bool ok = a.mult(v, v) == b.mult(w, w);
        for (std::size_t u = 0; u < v && ok; ++u) {
            ok = a.mult(v, u) == b.mult(w, map[u]) && a.mult(u, v) == b.mult(map[u], w);
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_iso(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::vector<std::size_t> map(a.vertex_count());
    std::vector<bool> used(a.vertex_count(), false);
    return extend_iso(a, b, map, used, 0);
}

std::optional<Edge> edge_at_position(const Graph& g, std::size_t v, std::uint64_t pos) {
    const auto& adj = g.out(v);
    std::uint64_t seen = 0;
    for (std::uint64_t round = 0;; ++round) {
        std::uint64_t hits = 0;
        for (const auto& [t, c] : adj) {
            if (ExtNat(round) < c) {
                if (seen == pos) return Edge{v, t, round};
                ++seen;
                ++hits;
            }
        }
        if (hits == 0) return std::nullopt;  // enumeration exhausted
    }
}

std::optional<std::uint64_t> position_of_edge(const Graph& g, const Edge& e) {
    if (!g.valid_edge(e)) return std::nullopt;
    std::uint64_t pos = 0;
    for (std::uint64_t round = 0; round <= e.index; ++round)
        for (const auto& [t, c] : g.out(e.src)) {
            if (!(ExtNat(round) < c)) continue;
            if (round == e.index && t == e.dst) return pos;
            ++pos;
        }
    return std::nullopt;  // unreachable for valid edges
}

StableMatrix stable_matrix(const Graph& g) {
    StableMatrix sm;
    sm.rows.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) sm.rows[v] = v;
    sm.cols = g.regular_vertices();
    sm.m = Mat(sm.rows.size(), sm.cols.size());
    for (std::size_t j = 0; j < sm.cols.size(); ++j) {
        std::size_t v = sm.cols[j];
        for (const auto& [t, c] : g.out(v)) sm.m(t, j) += Int(c.finite());
        sm.m(v, j) -= 1;
    }
    return sm;
}

}  // namespace graphk
