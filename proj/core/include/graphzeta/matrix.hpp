#ifndef GRAPHZETA_MATRIX_HPP
#define GRAPHZETA_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphzeta {

/// Dense row-major matrix over an exact ring R (Scalar, Polynomial or
/// RationalFunction). R must provide a default constructor yielding zero,
/// static one(), is_zero(), and ring arithmetic; fields additionally
/// provide operator/.
template <typename R>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    Matrix& scale(const R& c) {
        for (auto& x : e_) x = x * c;
        return *this;
    }

    R trace() const {
        require_square();
        R t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void require_square() const {
        if (!is_square()) throw std::invalid_argument("Matrix: not square");
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<R> e_;
};

/// Entrywise conversion, e.g. Matrix<Scalar> -> Matrix<RationalFunction>.
template <typename To, typename From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
    return out;
}

template <typename R>
Matrix<R> matrix_pow(const Matrix<R>& m, unsigned e) {
    m.require_square();
    Matrix<R> acc = Matrix<R>::identity(m.rows());
    Matrix<R> base = m;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

namespace detail {

// Cofactor expansion for small matrices; no divisions at all.
template <typename R>
R det_expansion(const Matrix<R>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return R::one();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    // n == 3
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace detail

/// Exact determinant. Small sizes expand directly; larger ones run
/// fraction-free Bareiss elimination, which stays inside the ring
/// (every division is exact) and so never forms fractions of R.
template <typename R>
R determinant(Matrix<R> m) {
    m.require_square();
    const std::size_t n = m.rows();
    if (n <= 3) return detail::det_expansion(m);

    bool negate = false;
    R prev = R::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return R{};
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = R{};
        }
        prev = m(k, k);
    }
    R det = m(n - 1, n - 1);
    return negate ? R{} - det : det;
}

/// Gauss-Jordan inverse over a field (Scalar or RationalFunction).
/// Throws std::domain_error when the matrix is singular.
template <typename R>
Matrix<R> inverse(const Matrix<R>& m) {
    m.require_square();
    const std::size_t n = m.rows();
    Matrix<R> a = m;
    Matrix<R> inv = Matrix<R>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("Matrix: singular");
        if (pivot != k) {
            a.swap_rows(pivot, k);
            inv.swap_rows(pivot, k);
        }
        R scale = R::one() / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = a(k, j) * scale;
            inv(k, j) = inv(k, j) * scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            R factor = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - factor * a(k, j);
                inv(i, j) = inv(i, j) - factor * inv(k, j);
            }
        }
    }
    return inv;
}

}  // namespace graphzeta

#endif
