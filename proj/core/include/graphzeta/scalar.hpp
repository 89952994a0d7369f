#ifndef GRAPHZETA_SCALAR_HPP
#define GRAPHZETA_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace graphzeta {

/// Exact complex number with arbitrary-precision rational real and
/// imaginary parts. Both parts are kept in canonical reduced form
/// (coprime numerator/denominator, positive denominator), so equality
/// is structural.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class re, mpq_class im = mpq_class(0));

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  // throws std::domain_error on /0

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form: "p/q", "p/q+r/si", "r/si", "0".
    std::string str() const;

    /// Parses the str() grammar (also accepts "i", "-i", "+i").
    /// Throws std::invalid_argument on malformed input, including zero
    /// denominators.
    static Scalar parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class re_, im_;
};

/// Exact division over the field; Bareiss elimination uses this through ADL.
inline Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }

}  // namespace graphzeta

#endif
