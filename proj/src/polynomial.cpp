#include "dend/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dend/errors.hpp"

namespace dend {

void require_same_table(const polynomial& a, const polynomial& b) {
    if (!var_table::compatible(a.table(), b.table())) throw vartable_mismatch_error();
}

polynomial polynomial::constant(var_table_ptr table, rational value) {
    polynomial p(std::move(table));
    if (!value.is_zero()) p.terms_.emplace(monomial(p.table_->size()), std::move(value));
    return p;
}

polynomial polynomial::variable(var_table_ptr table, std::size_t var) {
    if (var >= table->size()) throw std::out_of_range("polynomial::variable: bad index");
    polynomial p(std::move(table));
    p.terms_.emplace(monomial::unit(p.table_->size(), var), rational(1));
    return p;
}

polynomial polynomial::term(var_table_ptr table, monomial m, rational coeff) {
    if (m.nvars() != table->size())
        throw dimension_mismatch_error("monomial width vs var table");
    polynomial p(std::move(table));
    if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

rational polynomial::constant_value() const {
    if (terms_.empty()) return rational(0);
    if (!is_constant()) throw std::logic_error("polynomial: not a constant");
    return terms_.begin()->second;
}

std::uint32_t polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
    return d;
}

std::vector<std::size_t> polynomial::variables() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < (table_ ? table_->size() : 0); ++v)
        if (contains_var(v)) out.push_back(v);
    return out;
}

rational polynomial::coeff_of(const monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? rational(0) : it->second;
}

void polynomial::add_term(const monomial& m, const rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

polynomial polynomial::operator-() const {
    polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

polynomial& polynomial::operator+=(const polynomial& o) {
    require_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

polynomial& polynomial::operator-=(const polynomial& o) {
    require_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

polynomial& polynomial::operator*=(const polynomial& o) {
    require_same_table(*this, o);
    polynomial r(table_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

polynomial& polynomial::operator*=(const rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

polynomial& polynomial::operator/=(const rational& c) {
    if (c.is_zero()) throw std::invalid_argument("polynomial: division by zero scalar");
    return *this *= c.inverse();
}

polynomial polynomial::pow(std::uint32_t k) const {
    polynomial r = constant(table_, rational(1));
    for (std::uint32_t i = 0; i < k; ++i) r *= *this;
    return r;
}

bool operator==(const polynomial& a, const polynomial& b) {
    if (!var_table::compatible(a.table_, b.table_)) return false;
    return a.terms_ == b.terms_;
}

const monomial& polynomial::leading_monomial(const monomial_order& ord) const {
    if (terms_.empty()) throw zero_polynomial_error();
    const monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || ord.less(*best, m)) best = &m;
    return *best;
}

const rational& polynomial::leading_coeff(const monomial_order& ord) const {
    return terms_.at(leading_monomial(ord));
}

std::pair<monomial, rational> polynomial::leading_term(const monomial_order& ord) const {
    const monomial& m = leading_monomial(ord);
    return {m, terms_.at(m)};
}

polynomial polynomial::substituted(const std::map<std::size_t, polynomial>& assignment) const {
    for (const auto& [v, value] : assignment) {
        if (v >= table_->size()) throw std::out_of_range("substituted: bad variable index");
        require_same_table(*this, value);
    }
    polynomial out(table_);
    // Per-variable power cache shared across terms.
    std::map<std::pair<std::size_t, std::uint32_t>, polynomial> powers;
    auto power_of = [&](std::size_t v, std::uint32_t e) -> const polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, assignment.at(v).pow(e)).first;
        return it->second;
    };
    for (const auto& [m, c] : terms_) {
        monomial kept(table_->size());
        polynomial factor = constant(table_, c);
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            std::uint32_t e = m.exp(v);
            if (e == 0) continue;
            if (assignment.count(v))
                factor *= power_of(v, e);
            else
                kept.set_exp(v, e);
        }
        out += factor * term(table_, kept, rational(1));
    }
    return out;
}

polynomial polynomial::partially_evaluated(const std::map<std::size_t, rational>& point) const {
    std::map<std::size_t, polynomial> assignment;
    for (const auto& [v, val] : point) assignment.emplace(v, constant(table_, val));
    return substituted(assignment);
}

rational polynomial::evaluated(const std::vector<rational>& point,
                               const std::vector<bool>& assigned) const {
    if (point.size() != table_->size() || assigned.size() != table_->size())
        throw dimension_mismatch_error("evaluation point vs var table");
    rational acc(0);
    for (const auto& [m, c] : terms_) {
        rational t = c;
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            std::uint32_t e = m.exp(v);
            if (e == 0) continue;
            if (!assigned[v]) throw missing_assignment_error(table_->name(v));
            for (std::uint32_t i = 0; i < e; ++i) t *= point[v];
        }
        acc += t;
    }
    return acc;
}

rational polynomial::evaluated(const std::vector<rational>& point) const {
    return evaluated(point, std::vector<bool>(table_->size(), true));
}

polynomial polynomial::renamed(var_table_ptr new_table,
                               const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != table_->size())
        throw dimension_mismatch_error("variable map vs source table");
    polynomial out(new_table);
    for (const auto& [m, c] : terms_) {
        monomial image(new_table->size());
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            std::uint32_t e = m.exp(v);
            if (e == 0) continue;
            std::size_t w = var_map[v];
            if (w >= new_table->size()) throw std::out_of_range("renamed: bad image index");
            image.set_exp(w, image.exp(w) + e);
        }
        out.add_term(image, c);
    }
    return out;
}

rational polynomial::content() const {
    rational g(0);
    for (const auto& [m, c] : terms_) g = gcd(g, c);
    return g;
}

monomial polynomial::monomial_content() const {
    if (terms_.empty()) return monomial(table_ ? table_->size() : 0);
    monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) g = monomial::gcd(g, m);
    return g;
}

polynomial polynomial::without_monomial_factor(const monomial& m) const {
    polynomial out(table_);
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mm.divided_by(m), c);
    return out;
}

polynomial polynomial::primitive_positive(const monomial_order& ord) const {
    if (terms_.empty()) return *this;
    rational c = content();
    if (leading_coeff(ord).sign() < 0) c = -c;
    polynomial r(*this);
    r /= c;
    return r;
}

polynomial polynomial::monic(const monomial_order& ord) const {
    if (terms_.empty()) return *this;
    polynomial r(*this);
    r /= leading_coeff(ord);
    return r;
}

std::vector<polynomial> polynomial::coefficients_in(std::size_t var) const {
    std::vector<polynomial> out(degree_in(var) + 1, polynomial(table_));
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(var);
        monomial rest(m);
        rest.set_exp(var, 0);
        out[e].add_term(rest, c);
    }
    return out;
}

std::string polynomial::str() const {
    if (terms_.empty()) return "0";
    monomial_order ord = monomial_order::grevlex(table_->size());
    std::vector<const term_map::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](const auto* a, const auto* b) { return ord.less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        const auto& [m, c] = *t;
        rational a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool wrote_coeff = false;
        if (m.is_constant() || !a.is_one()) {
            os << a.str();
            wrote_coeff = true;
        }
        bool first_var = !wrote_coeff;
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            std::uint32_t e = m.exp(v);
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << table_->name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const polynomial& p) { return os << p.str(); }

}  // namespace dend
