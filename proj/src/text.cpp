#include "graphk/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "graphk/fixtures_data.hpp"

namespace graphk {

namespace {

struct Scan {
    std::string_view s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        ws();
        return i == s.size();
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument(msg + " at offset " + std::to_string(i) + " in \"" +
                                    std::string(s) + "\"");
    }
    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
    }
    std::string name() {
        ws();
        std::size_t b = i;
        while (i < s.size() && name_char(s[i])) ++i;
        if (b == i) fail("expected a name");
        return std::string(s.substr(b, i - b));
    }
    std::uint64_t number_from(const std::string& tok) {
        std::uint64_t v = 0;
        auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size()) fail("number out of range");
        return v;
    }
};

std::size_t vertex_token(Scan& sc, const Graph& g) {
    std::string n = sc.name();
    auto v = g.find(n);
    if (!v) sc.fail("unknown vertex '" + n + "'");
    return *v;
}

// eN resolves against the edge enumeration leaving `at`.
Edge edge_token(Scan& sc, const Graph& g, std::size_t at) {
    std::string tok = sc.name();
    if (tok.size() < 2 || tok[0] != 'e' ||
        !std::all_of(tok.begin() + 1, tok.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        sc.fail("expected an edge token like e0, got '" + tok + "'");
    std::uint64_t pos = sc.number_from(tok.substr(1));
    auto e = edge_at_position(g, at, pos);
    if (!e) sc.fail("vertex '" + g.name(at) + "' has no edge at position " + std::to_string(pos));
    return *e;
}

std::uint64_t edge_position(const Graph& g, const Edge& e) {
    auto pos = position_of_edge(g, e);
    if (!pos) throw std::logic_error("edge has no position in its graph");
    return *pos;
}

std::string edge_set_text(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<std::uint64_t> pos;
    pos.reserve(edges.size());
    for (const Edge& e : edges) pos.push_back(edge_position(g, e));
    std::sort(pos.begin(), pos.end());
    std::string out;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (k) out += ", ";
        out += "e" + std::to_string(pos[k]);
    }
    return out;
}

bool all_digits(const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

}  // namespace

MonoidElement parse_monoid_element(const Graph& g, std::string_view text) {
    Scan sc{text};
    MonoidElement elem;
    sc.ws();
    if (sc.s.substr(sc.i) == "0") return elem;
    while (true) {
        std::string tok = sc.name();
        std::uint64_t count = 1;
        if (all_digits(tok) && sc.peek() == '*') {
            count = sc.number_from(tok);
            if (count == 0) sc.fail("coefficient must be positive");
            sc.expect('*');
            tok = sc.name();
        }
        if (tok == "q" && sc.peek() == '{') {
            sc.expect('{');
            std::size_t v = vertex_token(sc, g);
            sc.expect(':');
            std::vector<Edge> edges;
            edges.push_back(edge_token(sc, g, v));
            while (sc.eat(',')) edges.push_back(edge_token(sc, g, v));
            sc.expect('}');
            elem.add(qgen(v, std::move(edges)), count);
        } else {
            auto v = g.find(tok);
            if (!v) sc.fail("unknown vertex '" + tok + "'");
            elem.add(vgen(*v), count);
        }
        if (!sc.eat('+')) break;
    }
    if (!sc.done()) sc.fail("trailing input");
    validate_element(g, elem);
    return elem;
}

std::string format_monoid_element(const Graph& g, const MonoidElement& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    for (const auto& [gen, count] : e.terms) {
        if (!out.empty()) out += " + ";
        if (count != 1) out += std::to_string(count) + "*";
        if (!gen.is_q) {
            out += g.name(gen.vertex);
        } else {
            out += "q{" + g.name(gen.vertex) + ": " + edge_set_text(g, gen.edges) + "}";
        }
    }
    return out;
}

namespace {

Path path_body(Scan& sc, const Graph& g) {
    Path p;
    p.base = vertex_token(sc, g);
    std::size_t at = p.base;
    while (sc.eat('.')) {
        Edge e = edge_token(sc, g, at);
        at = e.dst;
        p.edges.push_back(e);
    }
    return p;
}

}  // namespace

Path parse_path(const Graph& g, std::string_view text) {
    Scan sc{text};
    Path p = path_body(sc, g);
    if (!sc.done()) sc.fail("trailing input");
    return p;
}

std::string format_path(const Graph& g, const Path& p) {
    std::string out = g.name(p.base);
    for (const Edge& e : p.edges) out += ".e" + std::to_string(edge_position(g, e));
    return out;
}

GenCylinder parse_cylinder(const Graph& g, std::string_view text) {
    Scan sc{text};
    GenCylinder c = [&] {
        std::string z = sc.name();
        if (z != "Z") sc.fail("cylinder literal must start with Z(");
        sc.expect('(');
        Path mu = path_body(sc, g);
        std::vector<Edge> removed;
        if (sc.eat('\\')) {
            sc.expect('{');
            removed.push_back(edge_token(sc, g, mu.range()));
            while (sc.eat(',')) removed.push_back(edge_token(sc, g, mu.range()));
            sc.expect('}');
        }
        sc.expect(')');
        return make_cylinder(g, std::move(mu), std::move(removed));
    }();
    if (!sc.done()) sc.fail("trailing input");
    return c;
}

std::string format_cylinder(const Graph& g, const GenCylinder& c) {
    std::string out = "Z(" + format_path(g, c.mu);
    if (!c.removed.empty()) out += " \\ {" + edge_set_text(g, c.removed) + "}";
    out += ")";
    return out;
}

CylinderUnion parse_cylinder_union(const Graph& g, std::string_view text) {
    Scan sc{text};
    sc.ws();
    if (sc.s.substr(sc.i) == "0") return CylinderUnion{};
    std::vector<GenCylinder> parts;
    while (true) {
        sc.ws();
        std::size_t start = sc.i;
        std::size_t depth = 0;
        std::size_t end = start;
        while (end < sc.s.size()) {
            char ch = sc.s[end];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == '+' && depth == 0) break;
            ++end;
        }
        parts.push_back(parse_cylinder(g, sc.s.substr(start, end - start)));
        sc.i = end;
        if (!sc.eat('+')) break;
    }
    if (!sc.done()) sc.fail("trailing input");
    return CylinderUnion(g, std::move(parts));
}

std::string format_cylinder_union(const Graph& g, const CylinderUnion& u) {
    if (u.is_empty()) return "0";
    std::string out;
    for (const GenCylinder& c : u.parts()) {
        if (!out.empty()) out += " + ";
        out += format_cylinder(g, c);
    }
    return out;
}

OutPartition parse_partition(const Graph& g, std::string_view text) {
    Scan sc{text};
    OutPartition p;
    p.vertex = vertex_token(sc, g);
    sc.expect('=');
    do {
        sc.expect('{');
        std::map<std::size_t, ExtNat> group;
        do {
            std::size_t t = vertex_token(sc, g);
            sc.expect(':');
            ExtNat share;
            if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
                share = ExtNat(sc.number_from(sc.name()));
            } else {
                std::string word = sc.name();
                if (word != "inf") sc.fail("share must be a number or inf");
                share = ExtNat::omega();
            }
            if (!group.emplace(t, share).second) sc.fail("target listed twice in one group");
        } while (sc.eat(','));
        sc.expect('}');
        p.parts.push_back(std::move(group));
    } while (sc.eat('|'));
    if (!sc.done()) sc.fail("trailing input");
    return p;
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"e_infinity", "e_infinity_minus", "graph_e",
                                                "graph_f"};
    return names;
}

std::optional<std::string_view> fixture_text(std::string_view name) {
    if (name == "e_infinity") return std::string_view{fixture_data::e_infinity};
    if (name == "e_infinity_minus") return std::string_view{fixture_data::e_infinity_minus};
    if (name == "graph_e") return std::string_view{fixture_data::graph_e};
    if (name == "graph_f") return std::string_view{fixture_data::graph_f};
    return std::nullopt;
}

Graph fixture(std::string_view name) {
    auto text = fixture_text(name);
    if (!text) throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
    return parse_graph(*text);
}

}  // namespace graphk
