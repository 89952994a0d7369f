#include "graphzeta/hashimoto.hpp"

#include <stdexcept>

namespace graphzeta {

Matrix<Scalar> hashimoto_matrix(const Digraph& d, const WeightAssignment& w,
                                const ArcPartition& p) {
    if (!w.covers(d.arc_count()))
        throw std::invalid_argument("hashimoto_matrix: weights do not cover the arc set");
    const std::size_t m = p.arc_order.size();
    Matrix<Scalar> mat(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mat(i, j) = theta(d, w, p.arc_order[i], p.arc_order[j]);
    return mat;
}

Matrix<Scalar> hashimoto_matrix(const Digraph& d, const WeightAssignment& w) {
    return hashimoto_matrix(d, w, arc_partition(d));
}

Polynomial hashimoto_inverse_zeta(const Digraph& d, const WeightAssignment& w) {
    const Matrix<Scalar> m = hashimoto_matrix(d, w);
    const std::size_t n = m.rows();
    Matrix<Polynomial> char_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            char_matrix(i, j) = Polynomial::monomial(-m(i, j), 1);
            if (i == j) char_matrix(i, j) += Polynomial::one();
        }
    return determinant(std::move(char_matrix));
}

Scalar n_k(const Digraph& d, const WeightAssignment& w, int k) {
    if (k < 1) throw std::invalid_argument("n_k: k >= 1");
    const Matrix<Scalar> m = hashimoto_matrix(d, w);
    return matrix_pow(m, static_cast<unsigned>(k)).trace();
}

}  // namespace graphzeta
