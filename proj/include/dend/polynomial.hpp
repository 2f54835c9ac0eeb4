#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dend/monomial.hpp"
#include "dend/rational.hpp"
#include "dend/vartable.hpp"

namespace dend {

/// Sparse multivariate polynomial with rational coefficients over a shared
/// var_table.  Terms are stored in a canonical order independent of any
/// monomial_order; stored coefficients are never zero.
class polynomial {
  public:
    using term_map = std::map<monomial, rational, monomial_storage_less>;

    polynomial() = default;  // zero over the empty table; assign before use
    explicit polynomial(var_table_ptr table) : table_(std::move(table)) {}

    static polynomial constant(var_table_ptr table, rational value);
    static polynomial variable(var_table_ptr table, std::size_t var);
    static polynomial term(var_table_ptr table, monomial m, rational coeff);

    const var_table_ptr& table() const { return table_; }
    const term_map& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const;           // 0 for the zero polynomial
    std::uint32_t degree_in(std::size_t var) const;
    bool contains_var(std::size_t var) const { return degree_in(var) > 0; }
    std::vector<std::size_t> variables() const;   // occurring variables, ascending

    rational coeff_of(const monomial& m) const;   // 0 when absent

    polynomial operator-() const;
    polynomial& operator+=(const polynomial& o);
    polynomial& operator-=(const polynomial& o);
    polynomial& operator*=(const polynomial& o);
    polynomial& operator*=(const rational& c);
    polynomial& operator/=(const rational& c);
    friend polynomial operator+(polynomial a, const polynomial& b) { a += b; return a; }
    friend polynomial operator-(polynomial a, const polynomial& b) { a -= b; return a; }
    friend polynomial operator*(polynomial a, const polynomial& b) { a *= b; return a; }
    friend polynomial operator*(polynomial a, const rational& c) { a *= c; return a; }
    friend polynomial operator*(const rational& c, polynomial a) { a *= c; return a; }
    polynomial pow(std::uint32_t k) const;

    friend bool operator==(const polynomial& a, const polynomial& b);
    friend bool operator!=(const polynomial& a, const polynomial& b) { return !(a == b); }

    /// Adds coeff * m into the polynomial, erasing the term if it cancels.
    void add_term(const monomial& m, const rational& coeff);

    const monomial& leading_monomial(const monomial_order& ord) const;  // nonzero only
    const rational& leading_coeff(const monomial_order& ord) const;
    std::pair<monomial, rational> leading_term(const monomial_order& ord) const;

    /// Simultaneous substitution var -> polynomial (values over the same table).
    polynomial substituted(const std::map<std::size_t, polynomial>& assignment) const;
    /// Substitution of rationals for a subset of variables.
    polynomial partially_evaluated(const std::map<std::size_t, rational>& point) const;
    /// Full evaluation; point is indexed by variable, all occurring variables
    /// must be assigned (missing_assignment_error otherwise).
    rational evaluated(const std::vector<rational>& point, const std::vector<bool>& assigned) const;
    rational evaluated(const std::vector<rational>& point) const;

    /// Same polynomial over another table; var_map[i] is the image of variable i.
    polynomial renamed(var_table_ptr new_table, const std::vector<std::size_t>& var_map) const;

    /// gcd of |coefficients| as in gcd(rational, rational); 0 for the zero poly.
    rational content() const;
    /// Componentwise-min monomial of all terms (the common monomial factor).
    monomial monomial_content() const;
    /// Divides the exponent vector of every term by m (must divide each term).
    polynomial without_monomial_factor(const monomial& m) const;
    /// content-free with positive leading coefficient under ord.
    polynomial primitive_positive(const monomial_order& ord) const;
    polynomial monic(const monomial_order& ord) const;

    /// Coefficient polynomials of var: result[k] multiplies var^k.
    std::vector<polynomial> coefficients_in(std::size_t var) const;

    /// Human-readable form, terms in descending GREVLEX (table order priority):
    /// explicit '*' and '^', coefficients printed as p or p/q.
    std::string str() const;

  private:
    var_table_ptr table_;
    term_map terms_;
};

std::ostream& operator<<(std::ostream& os, const polynomial& p);

/// Throws vartable_mismatch_error unless the two tables are compatible.
void require_same_table(const polynomial& a, const polynomial& b);

}  // namespace dend
