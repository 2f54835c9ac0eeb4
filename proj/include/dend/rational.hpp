#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace dend {

/// Exact rational scalar backed by GMP.  Values are always canonical:
/// gcd(|num|, den) == 1 and den > 0.
class rational {
  public:
    rational() : v_(0) {}
    rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
    rational(int n) : v_(static_cast<long>(n)) {}
    rational(long num, long den);
    rational(const mpz_class& num, const mpz_class& den);
    explicit rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q" in base 10; throws std::invalid_argument otherwise.
    static rational from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    rational operator-() const;
    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o);
    rational inverse() const;

    friend rational operator+(rational a, const rational& b) { a += b; return a; }
    friend rational operator-(rational a, const rational& b) { a -= b; return a; }
    friend rational operator*(rational a, const rational& b) { a *= b; return a; }
    friend rational operator/(rational a, const rational& b) { a /= b; return a; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    /// "p" for integers, "p/q" otherwise; '-' binds to the numerator.
    std::string str() const;

  private:
    mpq_class v_;
};

rational abs(const rational& q);
rational gcd(const rational& a, const rational& b);
std::ostream& operator<<(std::ostream& os, const rational& q);

}  // namespace dend
