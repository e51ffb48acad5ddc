#include "graphk/intmat.hpp"

namespace graphk {

// Bareiss one-step fraction-free elimination; all divisions are exact.
Int det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    Mat a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace graphk
