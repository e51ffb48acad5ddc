#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphk/graph.hpp"
#include "graphk/intmat.hpp"
#include "graphk/ktheory.hpp"

namespace graphk {

enum class DetReq { Plus, Minus, Either };
const char* to_string(DetReq r);
DetReq det_req_from_string(std::string_view s);  // "+1", "-1", "either"

// Witness that U*B*V == C with det V == +1 and det U constrained by
// required_det. Optional unit vectors assert that U carries unit_src to
// unit_tgt modulo the column lattice of C.
struct Certificate {
    Mat u;
    Mat v;
    DetReq required_det = DetReq::Either;
    std::optional<std::vector<Int>> unit_src;
    std::optional<std::vector<Int>> unit_tgt;
};

// Checks the certificate against the pair (B, C). Shape disagreement between
// B and C is a usage error and throws; a malformed certificate (wrong U/V
// shapes, unpaired or mis-sized unit vectors) also throws. A well-formed
// certificate that fails any equation returns false.
bool verify_certificate(const Mat& b, const Mat& c, const Certificate& cert);

struct SearchResult {
    bool found = false;
    Certificate cert;
    std::size_t word_length = 0;
};

// Bidirectional breadth-first search over elementary operations: row and
// column additions with coefficient +-1, plus one optional row swap at the
// root for the det -1 branch. Stops once every certificate of combined word
// length <= bound has been covered. Unit vectors, when given, must verify
// before a meet is accepted; failing meets are skipped, so a miss reports
// not-found-within-bound rather than impossibility.
SearchResult search_certificate(const Mat& b, const Mat& c, DetReq req,
                                const std::optional<std::pair<std::vector<Int>, std::vector<Int>>>& units,
                                std::size_t bound);

// Repeatedly deletes vertices with no incoming edge and a single outgoing
// edge, adding the deleted vertex's weight onto its target (all weights start
// at 1). Returns the pruned graph and the weights of the surviving vertices.
std::pair<Graph, std::vector<Int>> essential_core(const Graph& g);

// Certificate search between the stable matrices of the essential cores of
// two graphs, run separately for each determinant sign with the accumulated
// weight vectors as units. The verdict field restates the canonical-class
// comparison of the original graphs' pointed groups.
struct SignReport {
    Graph core_src;
    Graph core_tgt;
    std::vector<Int> weight_src;
    std::vector<Int> weight_tgt;
    bool comparable = false;  // core stable matrices share a shape
    SearchResult plus;
    SearchResult minus;
    PointedCompare verdict = PointedCompare::Undecided;
};

SignReport sign_report(const Graph& src, const Graph& tgt, std::size_t bound);

}  // namespace graphk
