#ifndef GRAPHZETA_EXPRESSIONS_HPP
#define GRAPHZETA_EXPRESSIONS_HPP

#include <utility>
#include <vector>

#include "graphzeta/cycles.hpp"
#include "graphzeta/digraph.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/series.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// Exponential expression exp(sum_{k>=1} N_k t^k / k) truncated at
/// order K. N_k comes from trace(M_theta^k).
TruncatedSeries exponential_expression(const Digraph& d, const WeightAssignment& w,
                                       int order);

/// Euler expression: product over prime cycles of length <= K of
/// (1 - circ_theta(C) t^{|C|})^-1, truncated at order K.
TruncatedSeries euler_expression(const Digraph& d, const WeightAssignment& w, int order,
                                 std::size_t cap = kDefaultOracleCap);

struct AdjacencyReport {
    bool pass = true;
    /// Arc pairs (a, a') with theta != 0 but head(a) != tail(a').
    std::vector<std::pair<ArcId, ArcId>> violations;
};

/// Scans all arc pairs for the adjacency condition
/// theta(a,a') != 0  =>  head(a) = tail(a'). Always passes for the
/// built-in weight; exposed as an assertable diagnostic.
AdjacencyReport adjacency_condition_check(const Digraph& d, const WeightAssignment& w);

/// Same check against an externally supplied arc matrix whose rows and
/// columns follow `arc_order` (negative-control hook for tests).
AdjacencyReport adjacency_condition_check(const Digraph& d, const Matrix<Scalar>& m,
                                          const std::vector<ArcId>& arc_order);

}  // namespace graphzeta

#endif
