#ifndef GRAPHZETA_RATIONAL_FUNCTION_HPP
#define GRAPHZETA_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <string>

#include "graphzeta/polynomial.hpp"

namespace graphzeta {

/// Quotient of two polynomials in canonical form: gcd(num, den) = 1 and
/// den monic. Zero is 0/1, so equality is structural.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(const Scalar& c) : num_(c), den_(Polynomial::one()) {}
    RationalFunction(long c) : num_(Scalar(c)), den_(Polynomial::one()) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);  // normalizes; throws on den = 0

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(Polynomial::one()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);  // throws on /0

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

private:
    void normalize();
    Polynomial num_, den_;
};

inline RationalFunction exact_div(const RationalFunction& a, const RationalFunction& b) {
    return a / b;
}

}  // namespace graphzeta

#endif
