#include "graphk/snf.hpp"

#include <cstdlib>
#include <optional>

namespace graphk {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero absolute value in the submatrix at (t..), ties resolved to
// the highest (row, col) position. Fixing the tie direction (together with the
// Hermite pre-pass used by the K-theory layer) pins the coordinates every
// caller sees, so it must not change.
std::optional<std::pair<std::size_t, std::size_t>> pick_pivot(const Mat& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = iabs(a(i, j));
            if (!best || v < best_abs || v == best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

}  // namespace

SmithResult smith_normal_form(const Mat& m) {
    SmithResult r;
    r.s = m;
    r.u = Mat::identity(m.rows());
    r.v = Mat::identity(m.cols());
    Mat& s = r.s;

    std::size_t t = 0;
    std::size_t dim = std::min(m.rows(), m.cols());
    while (t < dim) {
        auto p = pick_pivot(s, t);
        if (!p) break;
        auto [pi, pj] = *p;
        if (pi != t) {
            s.swap_rows(t, pi);
            r.u.swap_rows(t, pi);
        }
        if (pj != t) {
            s.swap_cols(t, pj);
            r.v.swap_cols(t, pj);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            r.u.negate_row(t);
        }

        bool lone = true;
        for (std::size_t i = t + 1; i < s.rows(); ++i) {
            if (s(i, t) == 0) continue;
            Int q = s(i, t) / s(t, t);
            if (q != 0) {
                s.add_row(i, t, -q);
                r.u.add_row(i, t, -q);
            }
            if (s(i, t) != 0) lone = false;  // remainder smaller than pivot
        }
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
            if (s(t, j) == 0) continue;
            Int q = s(t, j) / s(t, t);
            if (q != 0) {
                s.add_col(j, t, -q);
                r.v.add_col(j, t, -q);
            }
            if (s(t, j) != 0) lone = false;
        }
        if (!lone) continue;

        // Divisibility sweep: pull a violating row up so the next rounds fold
        // its gcd into this pivot.
        bool divides = true;
        for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
            for (std::size_t j = t + 1; j < s.cols(); ++j)
                if (s(i, j) % s(t, t) != 0) {
                    s.add_row(t, i, 1);
                    r.u.add_row(t, i, 1);
                    divides = false;
                    break;
                }
        if (divides) ++t;
    }

    for (std::size_t i = 0; i < dim && r.s(i, i) != 0; ++i) {
        r.diagonal.push_back(r.s(i, i));
        if (r.s(i, i) > 1) r.invariant_factors.push_back(r.s(i, i));
    }
    r.rank = r.diagonal.size();

    // The factorization is cheap to recheck at this scale; refuse to hand out
    // a broken decomposition.
    if (r.u * m * r.v != r.s) throw std::logic_error("smith_normal_form: U*M*V != S");
    for (std::size_t i = 0; i + 1 < r.rank; ++i)
        if (r.diagonal[i + 1] % r.diagonal[i] != 0)
            throw std::logic_error("smith_normal_form: divisibility chain broken");
    return r;
}

Mat hermite_column_basis(const Mat& m) {
    Mat h = m;
    std::size_t slot = 0;
    for (std::size_t row = 0; row < h.rows() && slot < h.cols(); ++row) {
        // Gcd-fold every active column's entry at this row into one column.
        while (true) {
            std::optional<std::size_t> best;
            Int best_abs = 0;
            std::size_t nonzero = 0;
            for (std::size_t j = slot; j < h.cols(); ++j) {
                if (h(row, j) == 0) continue;
                ++nonzero;
                Int v = iabs(h(row, j));
                if (!best || v < best_abs) {
                    best = j;
                    best_abs = v;
                }
            }
            if (!best) break;  // no pivot in this row
            if (nonzero == 1) {
                if (*best != slot) h.swap_cols(slot, *best);
                break;
            }
            for (std::size_t j = slot; j < h.cols(); ++j) {
                if (j == *best || h(row, j) == 0) continue;
                Int q = h(row, j) / h(row, *best);
                if (q != 0) h.add_col(j, *best, -q);
            }
        }
        if (h(row, slot) == 0) continue;
        if (h(row, slot) < 0) h.negate_col(slot);
        // Reduce earlier pivot columns at this row into [0, pivot).
        for (std::size_t j = 0; j < slot; ++j) {
            Int q = h(row, j) / h(row, slot);
            if (h(row, j) - q * h(row, slot) < 0) q -= 1;  // floor division
            if (q != 0) h.add_col(j, slot, -q);
        }
        ++slot;
    }
    Mat out(h.rows(), slot);
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < slot; ++j) out(i, j) = h(i, j);
    return out;
}

bool in_column_lattice(const Mat& m, const std::vector<Int>& x) {
    if (x.size() != m.rows()) throw std::invalid_argument("in_column_lattice: length mismatch");
    SmithResult r = smith_normal_form(m);
    std::vector<Int> y = r.u.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < r.rank) {
            if (y[i] % r.diagonal[i] != 0) return false;
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace graphk
