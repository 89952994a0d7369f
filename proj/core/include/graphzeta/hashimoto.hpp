#ifndef GRAPHZETA_HASHIMOTO_HPP
#define GRAPHZETA_HASHIMOTO_HPP

#include "graphzeta/arc_partition.hpp"
#include "graphzeta/digraph.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/polynomial.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// M_theta = (theta(a,a')) over all arc pairs, rows and columns in the
/// partition's block-grouped arc order.
Matrix<Scalar> hashimoto_matrix(const Digraph& d, const WeightAssignment& w,
                                const ArcPartition& p);
Matrix<Scalar> hashimoto_matrix(const Digraph& d, const WeightAssignment& w);

/// 1/Z as a polynomial: det(I - t M_theta). Constant term is 1.
Polynomial hashimoto_inverse_zeta(const Digraph& d, const WeightAssignment& w);

/// N_k = trace(M_theta^k), the weighted closed-path count of length k.
Scalar n_k(const Digraph& d, const WeightAssignment& w, int k);

}  // namespace graphzeta

#endif
