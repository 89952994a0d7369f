#include "graphzeta/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace graphzeta {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Scalar::zero());
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Scalar> coeffs)
    : TruncatedSeries(order) {
    const std::size_t n = std::min(coeffs.size(), coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) coeffs_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Scalar::one();
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s.coeffs_[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k));
    return s;
}

static int shared_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int K = shared_order(a, b);
    TruncatedSeries out(K);
    for (int k = 0; k <= K; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int K = shared_order(a, b);
    TruncatedSeries out(K);
    for (int k = 0; k <= K; ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int K = shared_order(a, b);
    TruncatedSeries out(K);
    for (int i = 0; i <= K; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= K; ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const {
    const int K = shared_order(*this, other);
    for (int k = 0; k <= K; ++k)
        if (coeff(k) != other.coeff(k)) return false;
    return true;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
    if (s.coeff(0).is_zero())
        throw std::domain_error("TruncatedSeries: reciprocal needs nonzero constant term");
    const int K = s.order();
    TruncatedSeries out(K);
    const Scalar c0_inv = Scalar::one() / s.coeff(0);
    out.set_coeff(0, c0_inv);
    for (int n = 1; n <= K; ++n) {
        Scalar acc;
        for (int k = 1; k <= n; ++k) acc += s.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, -acc * c0_inv);
    }
    return out;
}

TruncatedSeries exp(const TruncatedSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::domain_error("TruncatedSeries: exp needs zero constant term");
    const int K = s.order();
    TruncatedSeries out = TruncatedSeries::one(K);
    // b' = a' b  =>  n b_n = sum_{k=1..n} k a_k b_{n-k}
    for (int n = 1; n <= K; ++n) {
        Scalar acc;
        for (int k = 1; k <= n; ++k) acc += Scalar(k) * s.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, acc / Scalar(n));
    }
    return out;
}

TruncatedSeries log(const TruncatedSeries& s) {
    if (!s.coeff(0).is_one())
        throw std::domain_error("TruncatedSeries: log needs constant term 1");
    const int K = s.order();
    TruncatedSeries out(K);
    // a b' = a'  =>  n b_n = n a_n - sum_{k=1..n-1} k b_k a_{n-k}
    for (int n = 1; n <= K; ++n) {
        Scalar acc = Scalar(n) * s.coeff(n);
        for (int k = 1; k < n; ++k) acc -= Scalar(k) * out.coeff(k) * s.coeff(n - k);
        out.set_coeff(n, acc / Scalar(n));
    }
    return out;
}

std::string TruncatedSeries::str() const {
    std::string out = "O(t^" + std::to_string(order() + 1) + "): ";
    for (int k = 0; k <= order(); ++k) {
        if (k) out += ", ";
        out += coeff(k).str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

}  // namespace graphzeta
