#include "dend/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dend {

rational::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

rational::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

rational rational::from_string(const std::string& text) {
    // Accept exactly [-]digits[/digits]; mpq_class is laxer (whitespace, bases),
    // so validate the shape first.
    std::size_t i = 0;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos > start;
    };
    if (i < text.size() && text[i] == '-') ++i;
    if (!digits(i)) throw std::invalid_argument("rational: bad literal '" + text + "'");
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        if (!digits(i)) throw std::invalid_argument("rational: bad literal '" + text + "'");
        if (mpz_class(text.substr(den_start, i - den_start)) == 0)
            throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    }
    if (i != text.size()) throw std::invalid_argument("rational: bad literal '" + text + "'");
    rational r;
    r.v_ = mpq_class(text);
    r.v_.canonicalize();
    return r;
}

rational rational::operator-() const {
    rational r;
    r.v_ = -v_;
    return r;
}

rational& rational::operator/=(const rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

rational rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("rational: inverse of zero");
    rational r;
    r.v_ = 1 / v_;
    return r;
}

std::string rational::str() const { return v_.get_str(); }

rational abs(const rational& q) { return q.sign() < 0 ? -q : q; }

rational gcd(const rational& a, const rational& b) {
    // gcd over Q: gcd of numerators over lcm of denominators, normalized positive.
    if (a.is_zero()) return abs(b);
    if (b.is_zero()) return abs(a);
    mpz_class gn, gd, ld;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return rational(gn, ld);
}

std::ostream& operator<<(std::ostream& os, const rational& q) { return os << q.str(); }

}  // namespace dend
