#ifndef GRAPHZETA_IHARA_HPP
#define GRAPHZETA_IHARA_HPP

#include <optional>
#include <vector>

#include "graphzeta/arc_partition.hpp"
#include "graphzeta/cycles.hpp"
#include "graphzeta/digraph.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/rational_function.hpp"
#include "graphzeta/series.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// J, K, L in the partition's block-grouped arc order:
///   j_{aa'} = upsilon(a,a') [a' in a^-1]   (m x m, block diagonal)
///   k_{av}  = tau1(a) [head(a) = v]        (m x n)
///   l_{ua'} = tau2(a') [u = tail(a')]      (n x m)
/// The adjacency part factors as K*L and M_theta = K*L - J.
struct JklMatrices {
    Matrix<Scalar> J, K, L;
};

JklMatrices build_jkl(const Digraph& d, const WeightAssignment& w, const ArcPartition& p);

/// Slices of J, K, L restricted to one block (rows/columns in block
/// arc order).
struct BlockSlices {
    Matrix<Scalar> J, K, L;
};

BlockSlices block_slices(const Digraph& d, const WeightAssignment& w, const ArcBlock& b);

/// det T = det(I + tJ) as a product of per-block closed forms:
/// 1 + upsilon(A_ww) t for a general-mode loop block (rank-one shape),
/// 1 - upsilon(arc[a]) upsilon(a^-1) t^2 otherwise (anti-diagonal shape).
struct BlockT {
    std::vector<Polynomial> block_dets;  // per block, partition block order
    Polynomial det;
};

BlockT block_T(const Digraph& d, const WeightAssignment& w, const ArcPartition& p);

/// The vertex-indexed matrices of the determinant identity:
///   A = sum_blocks L(arc(a)) K(arc(a))
///   D = sum_blocks L(arc(a)) J(arc(a)) K(arc(a)) / (1 - u[a] u^-1[a] t^2)
///   X = sum_blocks L(arc(a)) J(arc(a))^2 K(arc(a)) / (1 - u[a] u^-1[a] t^2)
struct IharaMatrices {
    Matrix<Scalar> A;
    Matrix<RationalFunction> D, X;
};

IharaMatrices ihara_matrices(const Digraph& d, const WeightAssignment& w,
                             const ArcPartition& p);

/// 1/Z via the vertex-indexed determinant:
/// det T * det(I - tA + t^2 D - t^3 X). The rational-function product
/// always collapses to a polynomial; a nontrivial denominator indicates
/// an implementation bug and raises std::logic_error.
Polynomial ihara_inverse_zeta(const Digraph& d, const WeightAssignment& w,
                              const ArcPartition& p);
Polynomial ihara_inverse_zeta(const Digraph& d, const WeightAssignment& w);

/// Four-way comparison of the zeta expressions.
struct TheoremReport {
    int order = 0;
    Polynomial hashimoto;   // det(I - t M_theta)
    Polynomial ihara;       // det T * det(I - tA + t^2 D - t^3 X)
    Polynomial det_t;
    TruncatedSeries exponential;
    TruncatedSeries euler;
    bool determinants_match = false;
    bool series_match = false;
    /// Lowest power of t where any two expressions disagree.
    std::optional<int> first_divergence;

    bool pass() const { return determinants_match && series_match; }
};

/// Builds the report from independently computed pieces (the CLI's
/// fault-injection hook feeds mismatching pieces through this).
TheoremReport compose_theorem_report(Polynomial hashimoto, Polynomial ihara,
                                     Polynomial det_t, TruncatedSeries exponential,
                                     TruncatedSeries euler, int order);

/// Computes all four expressions and compares: Hashimoto and Ihara
/// polynomials exactly, exponential and Euler truncations mod t^{K+1}.
TheoremReport verify_theorem(const Digraph& d, const WeightAssignment& w, int order = 10,
                             std::size_t cap = kDefaultOracleCap);

}  // namespace graphzeta

#endif
