#include "graphzeta/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace graphzeta {

Polynomial::Polynomial(const Scalar& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::t() { return monomial(Scalar::one(), 1); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t k) {
    Polynomial p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(k + 1, Scalar::zero());
    p.coeffs_[k] = c;
    return p;
}

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("Polynomial: leading() of zero");
    return coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial base = *this, acc = Polynomial::one();
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    Scalar inv = Scalar::one() / leading();
    for (auto& c : p.coeffs_) c *= inv;
    return p;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial::zero(), r};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    std::vector<Scalar> rc = r.coeffs();
    const auto& bc = b.coeffs();
    const Scalar lead_inv = Scalar::one() / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Scalar factor = rc[static_cast<std::size_t>(k) + bc.size() - 1] * lead_inv;
        q[static_cast<std::size_t>(k)] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            rc[static_cast<std::size_t>(k) + j] -= factor * bc[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rc))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("Polynomial: inexact division");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();  // normalize each step to tame coefficient growth
    }
    return x.monic();
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Scalar& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        const bool needs_parens = !c.is_real();
        if (!out.empty()) {
            if (!needs_parens && cs[0] == '-') {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        if (k == 0) {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else {
            if (cs == "1" && !needs_parens)
                ;  // bare t^k
            else if (cs == "-1" && !needs_parens)
                out += "-";
            else
                out += (needs_parens ? "(" + cs + ")" : cs) + "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace graphzeta
