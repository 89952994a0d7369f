#include "graphzeta/structured_inverse.hpp"

#include <stdexcept>

namespace graphzeta {

namespace {

// I - t*M/q + t^2*M^2/q with q a polynomial in t.
Matrix<RationalFunction> assemble_inverse(const Matrix<Scalar>& m, const Polynomial& q) {
    const std::size_t n = m.rows();
    const Matrix<Scalar> m2 = m * m;
    Matrix<RationalFunction> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial num =
                Polynomial::monomial(-m(i, j), 1) + Polynomial::monomial(m2(i, j), 2);
            RationalFunction entry(num, q);
            if (i == j) entry += RationalFunction::one();
            out(i, j) = entry;
        }
    return out;
}

}  // namespace

StructuredInverse rank_one_inverse(const std::vector<Scalar>& m1,
                                   const std::vector<Scalar>& m2) {
    if (m1.size() != m2.size() || m1.empty())
        throw std::invalid_argument("rank_one_inverse: vector lengths");
    const std::size_t n = m1.size();
    Matrix<Scalar> m(n, n);
    Scalar mu;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = m1[i] * m2[j];
        mu += m1[i] * m2[i];
    }
    // q = 1 - mu^2 t^2
    Polynomial q = Polynomial::one() - Polynomial::monomial(mu * mu, 2);
    Polynomial det = Polynomial::one() + Polynomial::monomial(mu, 1);
    return {assemble_inverse(m, q), det};
}

StructuredInverse antidiag_inverse(const std::vector<Scalar>& m1,
                                   const std::vector<Scalar>& m2, std::size_t k) {
    if (m1.size() != m2.size())
        throw std::invalid_argument("antidiag_inverse: vector lengths");
    if (k > m1.size()) throw std::invalid_argument("antidiag_inverse: k out of range");
    const std::size_t n = m1.size();
    Matrix<Scalar> m(n, n);
    Scalar mu1, mu2;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = k; j < n; ++j) m(i, j) = m1[i] * m2[j];
        mu1 += m1[i] * m2[i];
    }
    for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = m1[i] * m2[j];
        mu2 += m1[i] * m2[i];
    }
    Polynomial q = Polynomial::one() - Polynomial::monomial(mu1 * mu2, 2);
    return {assemble_inverse(m, q), q};
}

}  // namespace graphzeta
