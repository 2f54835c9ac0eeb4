#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dend {

/// Exponent vector over a fixed number of variables.  Exponents are bounded by
/// 2^16 - 1; operations that would exceed the bound throw exponent_limit_error.
class monomial {
  public:
    static constexpr std::uint32_t max_exponent = 0xFFFF;

    monomial() = default;
    explicit monomial(std::size_t nvars) : e_(nvars, 0) {}
    static monomial unit(std::size_t nvars, std::size_t var, std::uint32_t exp = 1);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    std::uint32_t total_degree() const;
    bool is_constant() const;
    std::uint32_t degree_in(std::size_t var) const { return e_[var]; }

    monomial& set_exp(std::size_t var, std::uint32_t exp);

    monomial operator*(const monomial& o) const;
    bool divides(const monomial& o) const;
    /// Exact quotient this / o; requires o.divides-style componentwise <=.
    monomial divided_by(const monomial& o) const;
    monomial pow(std::uint32_t k) const;
    static monomial lcm(const monomial& a, const monomial& b);
    static monomial gcd(const monomial& a, const monomial& b);
    /// True when the monomials share no variable.
    static bool coprime(const monomial& a, const monomial& b);

    friend bool operator==(const monomial& a, const monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const monomial& a, const monomial& b) { return a.e_ != b.e_; }

    /// Fixed order used for canonical term storage: total degree, then the
    /// exponent vector lexicographically.  Independent of any monomial_order.
    static int cmp_storage(const monomial& a, const monomial& b);

  private:
    std::vector<std::uint16_t> e_;
};

struct monomial_storage_less {
    bool operator()(const monomial& a, const monomial& b) const {
        return monomial::cmp_storage(a, b) < 0;
    }
};

enum class order_kind { lex, grevlex };

/// Admissible monomial order: LEX or GREVLEX, refined by a variable priority
/// permutation (priority[0] is the most significant variable index).
class monomial_order {
  public:
    monomial_order(order_kind kind, std::vector<std::size_t> priority);
    static monomial_order lex(std::size_t nvars);
    static monomial_order grevlex(std::size_t nvars);

    order_kind kind() const { return kind_; }
    const std::vector<std::size_t>& priority() const { return prio_; }
    std::size_t nvars() const { return prio_.size(); }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int cmp(const monomial& a, const monomial& b) const;
    bool less(const monomial& a, const monomial& b) const { return cmp(a, b) < 0; }

  private:
    order_kind kind_;
    std::vector<std::size_t> prio_;
};

}  // namespace dend
