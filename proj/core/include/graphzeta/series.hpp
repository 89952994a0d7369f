#ifndef GRAPHZETA_SERIES_HPP
#define GRAPHZETA_SERIES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "graphzeta/polynomial.hpp"
#include "graphzeta/scalar.hpp"

namespace graphzeta {

/// Formal power series truncated at a fixed order K: coefficients of
/// t^0 .. t^K, all exact. Mixed-order arithmetic truncates to the
/// smaller order.
class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(0) {}
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Scalar> coeffs);

    static TruncatedSeries one(int order);
    /// First K+1 coefficients of a polynomial.
    static TruncatedSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Scalar& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, const Scalar& c) { coeffs_[static_cast<std::size_t>(k)] = c; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// True when the two series agree on all shared coefficients.
    bool agrees_with(const TruncatedSeries& other) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

private:
    std::vector<Scalar> coeffs_;  // size order+1
};

/// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// exp of a series with constant term 0 (throws std::domain_error otherwise).
TruncatedSeries exp(const TruncatedSeries& s);

/// log of a series with constant term 1 (throws std::domain_error otherwise).
TruncatedSeries log(const TruncatedSeries& s);

}  // namespace graphzeta

#endif
