#include "graphk/equivalence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "graphk/snf.hpp"

namespace graphk {

const char* to_string(DetReq r) {
    switch (r) {
        case DetReq::Plus: return "+1";
        case DetReq::Minus: return "-1";
        case DetReq::Either: return "either";
    }
    return "?";
}

DetReq det_req_from_string(std::string_view s) {
    if (s == "+1") return DetReq::Plus;
    if (s == "-1") return DetReq::Minus;
    if (s == "either") return DetReq::Either;
    throw std::invalid_argument("determinant requirement must be +1, -1, or either");
}

namespace {

bool det_ok(DetReq req, const Int& d) {
    if (d == 1) return req != DetReq::Minus;
    if (d == -1) return req != DetReq::Plus;
    return false;
}

}  // namespace

bool verify_certificate(const Mat& b, const Mat& c, const Certificate& cert) {
    if (b.rows() != c.rows() || b.cols() != c.cols())
        throw std::invalid_argument("matrices must share a shape to compare");
    if (cert.unit_src.has_value() != cert.unit_tgt.has_value())
        throw std::invalid_argument("unit vectors must come as a pair");
    if (cert.u.rows() != b.rows() || cert.u.cols() != b.rows() ||
        cert.v.rows() != b.cols() || cert.v.cols() != b.cols())
        throw std::invalid_argument("certificate factor shapes do not fit the matrices");
    if (cert.unit_src &&
        (cert.unit_src->size() != b.rows() || cert.unit_tgt->size() != c.rows()))
        throw std::invalid_argument("unit vector length must match the row count");
    if (cert.u * b * cert.v != c) return false;
    if (det(cert.v) != 1) return false;
    if (!det_ok(cert.required_det, det(cert.u))) return false;
    if (cert.unit_src) {
        std::vector<Int> moved = cert.u.apply(*cert.unit_src);
        for (std::size_t i = 0; i < moved.size(); ++i) moved[i] -= (*cert.unit_tgt)[i];
        if (!in_column_lattice(c, moved)) return false;
    }
    return true;
}

namespace {

struct Node {
    Mat u;
    Mat v;
    std::size_t depth = 0;
};

std::vector<Int> flatten(const Mat& m) {
    std::vector<Int> flat;
    flat.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
    return flat;
}

// Forward states carry the determinant sign of the accumulated row factor;
// column factors always have determinant +1.
using FwdKey = std::pair<std::vector<Int>, int>;

struct SearchState {
    const Mat* b;
    const Mat* c;
    DetReq req;
    const std::optional<std::pair<std::vector<Int>, std::vector<Int>>>* units;
    std::map<FwdKey, Node> fwd;
    std::map<std::vector<Int>, Node> bwd;
    std::vector<std::pair<Mat, int>> fwd_frontier;
    std::vector<Mat> bwd_frontier;
    SearchResult res;

    bool try_meet(const Node& f, int sign, const Node& bk) {
        Certificate cand;
        cand.u = bk.u * f.u;
        cand.v = f.v * bk.v;
        cand.required_det = sign < 0 ? DetReq::Minus : DetReq::Plus;
        if (*units) {
            cand.unit_src = (*units)->first;
            cand.unit_tgt = (*units)->second;
        }
        if (!verify_certificate(*b, *c, cand)) return false;
        res.found = true;
        res.word_length = f.depth + bk.depth;
        res.cert = std::move(cand);
        return true;
    }

    void insert_fwd(Mat m, int sign, Node node) {
        FwdKey key{flatten(m), sign};
        if (fwd.count(key)) return;
        auto at = bwd.find(key.first);
        if (at != bwd.end() && try_meet(node, sign, at->second)) return;
        fwd.emplace(std::move(key), std::move(node));
        fwd_frontier.emplace_back(std::move(m), sign);
    }

    void insert_bwd(Mat m, Node node) {
        std::vector<Int> key = flatten(m);
        if (bwd.count(key)) return;
        for (int sign : {+1, -1}) {
            auto at = fwd.find(FwdKey{key, sign});
            if (at != fwd.end() && try_meet(at->second, sign, node)) return;
        }
        bwd.emplace(std::move(key), std::move(node));
        bwd_frontier.push_back(std::move(m));
    }

    // One breadth level: every +-1 row addition, then every +-1 column
    // addition, applied to each frontier matrix in insertion order.
    void expand_fwd() {
        std::vector<std::pair<Mat, int>> level = std::move(fwd_frontier);
        fwd_frontier.clear();
        for (const auto& [m, sign] : level) {
            if (res.found) return;
            const Node& parent = fwd.at(FwdKey{flatten(m), sign});
            Node base = parent;  // copy before map iterators move on
            for (std::size_t i = 0; i < m.rows() && !res.found; ++i)
                for (std::size_t j = 0; j < m.rows() && !res.found; ++j) {
                    if (i == j) continue;
                    for (int s : {+1, -1}) {
                        Mat next = m;
                        next.add_row(i, j, s);
                        Node child{base.u, base.v, base.depth + 1};
                        child.u.add_row(i, j, s);
                        insert_fwd(std::move(next), sign, std::move(child));
                        if (res.found) break;
                    }
                }
            for (std::size_t i = 0; i < m.cols() && !res.found; ++i)
                for (std::size_t j = 0; j < m.cols() && !res.found; ++j) {
                    if (i == j) continue;
                    for (int s : {+1, -1}) {
                        Mat next = m;
                        next.add_col(i, j, s);
                        Node child{base.u, base.v, base.depth + 1};
                        child.v.add_col(i, j, s);
                        insert_fwd(std::move(next), sign, std::move(child));
                        if (res.found) break;
                    }
                }
        }
    }

    // Backward states satisfy C == U * M * V; prepending an operation to M
    // appends its inverse to the stored factors.
    void expand_bwd() {
        std::vector<Mat> level = std::move(bwd_frontier);
        bwd_frontier.clear();
        for (const Mat& m : level) {
            if (res.found) return;
            Node base = bwd.at(flatten(m));
            for (std::size_t i = 0; i < m.rows() && !res.found; ++i)
                for (std::size_t j = 0; j < m.rows() && !res.found; ++j) {
                    if (i == j) continue;
                    for (int s : {+1, -1}) {
                        Mat next = m;
                        next.add_row(i, j, -s);
                        Node child{base.u, base.v, base.depth + 1};
                        child.u.add_col(j, i, s);
                        insert_bwd(std::move(next), std::move(child));
                        if (res.found) break;
                    }
                }
            for (std::size_t i = 0; i < m.cols() && !res.found; ++i)
                for (std::size_t j = 0; j < m.cols() && !res.found; ++j) {
                    if (i == j) continue;
                    for (int s : {+1, -1}) {
                        Mat next = m;
                        next.add_col(i, j, -s);
                        Node child{base.u, base.v, base.depth + 1};
                        child.v.add_row(j, i, s);
                        insert_bwd(std::move(next), std::move(child));
                        if (res.found) break;
                    }
                }
        }
    }
};

constexpr std::size_t kSearchStateCap = 2'000'000;

}  // namespace

SearchResult search_certificate(const Mat& b, const Mat& c, DetReq req,
                                const std::optional<std::pair<std::vector<Int>, std::vector<Int>>>& units,
                                std::size_t bound) {
    if (b.rows() != c.rows() || b.cols() != c.cols())
        throw std::invalid_argument("matrices must share a shape to compare");
    if (units && (units->first.size() != b.rows() || units->second.size() != c.rows()))
        throw std::invalid_argument("unit vector length must match the row count");

    SearchState st;
    st.b = &b;
    st.c = &c;
    st.req = req;
    st.units = &units;

    std::size_t df = 0;
    std::size_t db = 0;
    if (req != DetReq::Minus)
        st.insert_fwd(b, +1, Node{Mat::identity(b.rows()), Mat::identity(b.cols()), 0});
    if (req != DetReq::Plus) {
        // Swap seeds sit at depth 1 but do not consume an expansion ply: df
        // counts expansions, so plus-branch words of full length <= bound stay
        // covered and minus-branch words only gain coverage.
        for (std::size_t i = 0; i < b.rows() && !st.res.found; ++i)
            for (std::size_t j = i + 1; j < b.rows() && !st.res.found; ++j) {
                Mat m = b;
                m.swap_rows(i, j);
                Mat u = Mat::identity(b.rows());
                u.swap_rows(i, j);
                st.insert_fwd(std::move(m), -1, Node{std::move(u), Mat::identity(b.cols()), 1});
            }
    }
    if (!st.res.found) st.insert_bwd(c, Node{Mat::identity(b.rows()), Mat::identity(b.cols()), 0});

    while (!st.res.found && df + db < bound &&
           st.fwd.size() + st.bwd.size() < kSearchStateCap) {
        bool can_f = !st.fwd_frontier.empty();
        bool can_b = !st.bwd_frontier.empty();
        if (!can_f && !can_b) break;
        if (can_f && (!can_b || st.fwd_frontier.size() <= st.bwd_frontier.size())) {
            st.expand_fwd();
            ++df;
        } else {
            st.expand_bwd();
            ++db;
        }
    }
    return std::move(st.res);
}

std::pair<Graph, std::vector<Int>> essential_core(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<Int> weight(n, 1);
    std::vector<std::map<std::size_t, ExtNat>> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) out.push_back(g.out(v));

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n && !changed; ++v) {
            if (!alive[v]) continue;
            bool incoming = false;
            for (std::size_t u = 0; u < n && !incoming; ++u)
                if (alive[u] && out[u].count(v)) incoming = true;
            if (incoming) continue;
            if (out[v].size() != 1) continue;
            auto& [t, cnt] = *out[v].begin();
            if (!cnt.is_finite() || cnt.finite() != 1) continue;
            weight[t] += weight[v];
            alive[v] = 0;
            out[v].clear();
            changed = true;
        }
    }

    Graph core;
    std::vector<std::size_t> remap(n, 0);
    std::vector<Int> w;
    for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        remap[v] = core.add_vertex(g.name(v));
        w.push_back(weight[v]);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (auto& [t, cnt] : out[v]) core.add_edges(remap[v], remap[t], cnt);
    }
    return {std::move(core), std::move(w)};
}

SignReport sign_report(const Graph& src, const Graph& tgt, std::size_t bound) {
    SignReport rep;
    auto [cs, ws] = essential_core(src);
    auto [ct, wt] = essential_core(tgt);
    rep.core_src = std::move(cs);
    rep.core_tgt = std::move(ct);
    rep.weight_src = std::move(ws);
    rep.weight_tgt = std::move(wt);
    StableMatrix ms = stable_matrix(rep.core_src);
    StableMatrix mt = stable_matrix(rep.core_tgt);
    rep.comparable = ms.m.rows() == mt.m.rows() && ms.m.cols() == mt.m.cols();
    if (rep.comparable) {
        auto units = std::make_optional(std::make_pair(rep.weight_src, rep.weight_tgt));
        rep.plus = search_certificate(ms.m, mt.m, DetReq::Plus, units, bound);
        rep.minus = search_certificate(ms.m, mt.m, DetReq::Minus, units, bound);
    }
    rep.verdict = pointed_compare(k0_of_graph(src), k0_of_graph(tgt));
    return rep;
}

}  // namespace graphk
