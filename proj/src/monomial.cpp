#include "dend/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dend/errors.hpp"

namespace dend {

monomial monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t exp) {
    monomial m(nvars);
    m.set_exp(var, exp);
    return m;
}

std::uint32_t monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto e : e_) d += e;
    return d;
}

bool monomial::is_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint16_t e) { return e == 0; });
}

monomial& monomial::set_exp(std::size_t var, std::uint32_t exp) {
    if (exp > max_exponent) throw exponent_limit_error();
    e_[var] = static_cast<std::uint16_t>(exp);
    return *this;
}

monomial monomial::operator*(const monomial& o) const {
    monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint32_t s = std::uint32_t(e_[i]) + o.e_[i];
        if (s > max_exponent) throw exponent_limit_error();
        r.e_[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

bool monomial::divides(const monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

monomial monomial::divided_by(const monomial& o) const {
    monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial: inexact division");
        r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    }
    return r;
}

monomial monomial::pow(std::uint32_t k) const {
    monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = std::uint64_t(e_[i]) * k;
        if (s > max_exponent) throw exponent_limit_error();
        r.e_[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

monomial monomial::lcm(const monomial& a, const monomial& b) {
    monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

monomial monomial::gcd(const monomial& a, const monomial& b) {
    monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

bool monomial::coprime(const monomial& a, const monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
}

int monomial::cmp_storage(const monomial& a, const monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    return 0;
}

monomial_order::monomial_order(order_kind kind, std::vector<std::size_t> priority)
    : kind_(kind), prio_(std::move(priority)) {
    std::vector<bool> seen(prio_.size(), false);
    for (std::size_t v : prio_) {
        if (v >= prio_.size() || seen[v])
            throw std::invalid_argument("monomial_order: priority is not a permutation");
        seen[v] = true;
    }
}

monomial_order monomial_order::lex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return {order_kind::lex, std::move(p)};
}

monomial_order monomial_order::grevlex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return {order_kind::grevlex, std::move(p)};
}

int monomial_order::cmp(const monomial& a, const monomial& b) const {
    if (kind_ == order_kind::lex) {
        for (std::size_t v : prio_) {
            if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
        }
        return 0;
    }
    // GREVLEX: higher total degree wins; on ties the monomial with the smaller
    // exponent at the least significant differing variable is the larger one.
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = prio_.size(); i-- > 0;) {
        std::size_t v = prio_[i];
        if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? -1 : 1;
    }
    return 0;
}

}  // namespace dend
