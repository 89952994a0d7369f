#include "graphzeta/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace graphzeta {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0 || im_ == 0) out = re_.get_str();
    if (im_ != 0) {
        std::string ims = im_.get_str();
        if (!out.empty() && ims[0] != '-') out += '+';
        out += ims;
        out += 'i';
    }
    return out;
}

namespace {

// One signed term: [sign] digits [/ digits] [i], or a bare [sign] i.
struct Term {
    mpq_class value;
    bool imaginary = false;
};

Term parse_term(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Scalar: empty term");
    Term term;
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = (s[pos] == '-');
        ++pos;
    }
    if (pos < s.size() && s.back() == 'i') {
        term.imaginary = true;
        s = s.substr(0, s.size() - 1);
    }
    std::string_view body = s.substr(pos);
    if (body.empty()) {
        if (!term.imaginary) throw std::invalid_argument("Scalar: sign without digits");
        term.value = 1;
    } else {
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den =
            slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
        if (num.empty() || den.empty()) throw std::invalid_argument("Scalar: malformed rational");
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("Scalar: bad numerator digit");
        for (char c : den)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("Scalar: bad denominator digit");
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("Scalar: zero denominator");
        term.value = mpq_class(n, d);
        term.value.canonicalize();
    }
    if (negative) term.value = -term.value;
    return term;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw std::invalid_argument("Scalar: empty string");

    // Split into at most two terms at a '+'/'-' that is not leading.
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < compact.size(); ++p) {
        if (compact[p] == '+' || compact[p] == '-') {
            if (split != std::string::npos)
                throw std::invalid_argument("Scalar: too many terms");
            split = p;
        }
    }

    mpq_class re(0), im(0);
    auto place = [&](const Term& t) { (t.imaginary ? im : re) = t.value; };
    if (split == std::string::npos) {
        place(parse_term(compact));
    } else {
        Term first = parse_term(std::string_view(compact).substr(0, split));
        Term second = parse_term(std::string_view(compact).substr(split));
        if (first.imaginary == second.imaginary)
            throw std::invalid_argument("Scalar: duplicate term kind");
        place(first);
        place(second);
    }
    return Scalar(std::move(re), std::move(im));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace graphzeta
