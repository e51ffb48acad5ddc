#pragma once

#include "graphk/intmat.hpp"

namespace graphk {

// U * input * V == s, with U, V unimodular, s diagonal, nonnegative, and each
// diagonal entry dividing the next.
struct SmithResult {
    Mat s, u, v;
    std::size_t rank = 0;               // number of nonzero diagonal entries
    std::vector<Int> diagonal;          // the nonzero entries, in order
    std::vector<Int> invariant_factors; // diagonal entries > 1
};

SmithResult smith_normal_form(const Mat& m);

// Canonical basis of the column lattice: column echelon, positive pivots,
// entries left of a pivot reduced into [0, pivot). Zero columns dropped.
Mat hermite_column_basis(const Mat& m);

// Does the column lattice of m contain x?
bool in_column_lattice(const Mat& m, const std::vector<Int>& x);

}  // namespace graphk
