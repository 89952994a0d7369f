#include <doctest.h>

#include <random>

#include "graphzeta/matrix.hpp"
#include "graphzeta/polynomial.hpp"
#include "graphzeta/rational_function.hpp"
#include "graphzeta/scalar.hpp"
#include "testutil.hpp"

using namespace graphzeta;
using test::poly;
using test::rat;

namespace {

Matrix<Polynomial> random_poly_matrix(std::mt19937_64& rng, std::size_t n, int max_deg) {
    Matrix<Polynomial> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = test::random_polynomial(rng, max_deg);
    return m;
}

}  // namespace

TEST_CASE("determinant of the identity is 1") {
    CHECK(determinant(Matrix<Scalar>::identity(3)) == Scalar::one());
    CHECK(determinant(Matrix<Polynomial>::identity(5)) == Polynomial::one());
    CHECK(determinant(Matrix<Scalar>(0, 0)) == Scalar::one());
}

TEST_CASE("2x2 polynomial determinant: [[1,t],[t,1]] -> 1 - t^2") {
    Matrix<Polynomial> m(2, 2);
    m(0, 0) = Polynomial::one();
    m(0, 1) = Polynomial::t();
    m(1, 0) = Polynomial::t();
    m(1, 1) = Polynomial::one();
    CHECK(determinant(m) == poly({1, 0, -1}));
}

TEST_CASE("det(I + tM) for the 2x2 all-ones M is 1 + 2t") {
    Matrix<Polynomial> m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = Polynomial::t();
            if (i == j) m(i, j) += Polynomial::one();
        }
    CHECK(determinant(m) == poly({1, 2}));
}

TEST_CASE("bareiss path agrees with cofactor expansion") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        // 4x4 exercises Bareiss; compare against expansion along row 0
        // of 3x3 minors, which the small-size path computes.
        Matrix<Polynomial> m = random_poly_matrix(rng, 4, 2);
        Polynomial expanded;
        for (std::size_t c = 0; c < 4; ++c) {
            Matrix<Polynomial> minor(3, 3);
            for (std::size_t i = 1; i < 4; ++i) {
                std::size_t col = 0;
                for (std::size_t j = 0; j < 4; ++j) {
                    if (j == c) continue;
                    minor(i - 1, col++) = m(i, j);
                }
            }
            Polynomial term = m(0, c) * determinant(minor);
            if (c % 2) term = -term;
            expanded += term;
        }
        CHECK(determinant(m) == expanded);
    }
}

TEST_CASE("determinant is multiplicative on random polynomial matrices") {
    std::mt19937_64 rng(29);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const Matrix<Polynomial> a = random_poly_matrix(rng, n, 1);
            const Matrix<Polynomial> b = random_poly_matrix(rng, n, 1);
            CHECK(determinant(a * b) == determinant(a) * determinant(b));
        }
    }
}

TEST_CASE("singular matrices give zero determinant") {
    Matrix<Polynomial> m(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m(1, j) = poly({1, 2});
        m(2, j) = poly({1, 2});  // duplicate row
        m(0, j) = Polynomial::t();
        m(3, j) = poly({3});
    }
    CHECK(determinant(m).is_zero());
}

TEST_CASE("gauss-jordan inverse over the rational-function field") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 3;
        Matrix<RationalFunction> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = RationalFunction(test::random_polynomial(rng, 1),
                                           poly({1, 1}));
        if (determinant(m).is_zero()) continue;
        CHECK(m * inverse(m) == Matrix<RationalFunction>::identity(n));
    }
    CHECK_THROWS_AS(inverse(Matrix<Scalar>(2, 2)), std::domain_error);
    CHECK_THROWS_AS(determinant(Matrix<Scalar>(2, 3)), std::invalid_argument);
}

TEST_CASE("trace and powers") {
    Matrix<Scalar> m(2, 2);
    m(0, 0) = rat(1);
    m(0, 1) = rat(2);
    m(1, 0) = rat(3);
    m(1, 1) = rat(4);
    CHECK(m.trace() == rat(5));
    CHECK(matrix_pow(m, 0) == Matrix<Scalar>::identity(2));
    CHECK(matrix_pow(m, 3) == m * m * m);
}
