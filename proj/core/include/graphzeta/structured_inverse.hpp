#ifndef GRAPHZETA_STRUCTURED_INVERSE_HPP
#define GRAPHZETA_STRUCTURED_INVERSE_HPP

#include <cstddef>
#include <vector>

#include "graphzeta/matrix.hpp"
#include "graphzeta/rational_function.hpp"
#include "graphzeta/scalar.hpp"

namespace graphzeta {

/// Closed-form inverse and determinant of I + tM for the two structured
/// shapes of M that arise as diagonal blocks of T.
struct StructuredInverse {
    Matrix<RationalFunction> inverse;
    Polynomial det;
};

/// M is the rank-one matrix M_ij = m1(i) * m2(j) (k x k, k = |m1| = |m2|).
/// Returns (I + tM)^-1 = I - t(1-mu^2 t^2)^-1 M + t^2 (1-mu^2 t^2)^-1 M^2
/// and det(I + tM) = 1 + mu*t with mu = sum_i m1(i) m2(i).
StructuredInverse rank_one_inverse(const std::vector<Scalar>& m1,
                                   const std::vector<Scalar>& m2);

/// M = [[0, M1], [M2, 0]] with (M1)_ij = m1(i) m2(k+j) and
/// (M2)_ij = m1(k+i) m2(j); m1 and m2 both have length k + l.
/// Returns (I + tM)^-1 = I - t(1-mu1 mu2 t^2)^-1 M + t^2 (1-mu1 mu2 t^2)^-1 M^2
/// and det(I + tM) = 1 - mu1 mu2 t^2, where mu1 sums the first k products
/// m1(i) m2(i) and mu2 the rest.
StructuredInverse antidiag_inverse(const std::vector<Scalar>& m1,
                                   const std::vector<Scalar>& m2, std::size_t k);

}  // namespace graphzeta

#endif
