#ifndef GRAPHZETA_POLYNOMIAL_HPP
#define GRAPHZETA_POLYNOMIAL_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "graphzeta/scalar.hpp"

namespace graphzeta {

/// Dense univariate polynomial in t with exact Scalar coefficients.
/// Canonical form: no trailing zero coefficient; the zero polynomial has
/// an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Scalar& constant);
    Polynomial(long constant) : Polynomial(Scalar(constant)) {}
    explicit Polynomial(std::vector<Scalar> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Scalar::one()); }
    /// The variable t.
    static Polynomial t();
    /// c * t^k.
    static Polynomial monomial(const Scalar& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Scalar::zero();
    }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& leading() const;  // throws on zero polynomial

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const;
    /// Leading coefficient scaled to 1; zero polynomial stays zero.
    Polynomial monic() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

/// Euclidean division over the coefficient field: a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Division known to be remainder-free (Bareiss pivots, detT factors).
/// Throws std::logic_error if a remainder appears.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace graphzeta

#endif
