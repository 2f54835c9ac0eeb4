#include "dend/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "dend/errors.hpp"
#include "dend/rng.hpp"

namespace dend {

int cmp_polynomial(const polynomial& a, const polynomial& b) {
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count() ? -1 : 1;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        int c = monomial::cmp_storage(ia->first, ib->first);
        if (c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    return 0;
}

std::optional<polynomial> divide_exact(const polynomial& p, const polynomial& d) {
    if (d.is_zero()) return std::nullopt;
    if (p.is_zero()) return polynomial(p.table());
    require_same_table(p, d);
    monomial_order ord = monomial_order::grevlex(p.table()->size());
    auto [dm, dc] = d.leading_term(ord);
    polynomial rest = p;
    polynomial quotient(p.table());
    while (!rest.is_zero()) {
        auto [rm, rc] = rest.leading_term(ord);
        if (!dm.divides(rm)) return std::nullopt;
        polynomial t = polynomial::term(p.table(), rm.divided_by(dm), rc / dc);
        quotient += t;
        rest -= t * d;
    }
    return quotient;
}

namespace {

bool poly_less(const polynomial& a, const polynomial& b) { return cmp_polynomial(a, b) < 0; }

void insert_sorted_unique(std::vector<polynomial>& v, const polynomial& p) {
    auto it = std::lower_bound(v.begin(), v.end(), p, poly_less);
    if (it == v.end() || *it != p) v.insert(it, p);
}

// Univariate polynomials as dense rational coefficient vectors (index = degree).
void uni_trim(std::vector<rational>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::vector<rational> uni_rem(std::vector<rational> a, std::vector<rational> b) {
    uni_trim(a);
    uni_trim(b);
    while (!a.empty() && a.size() >= b.size()) {
        rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        uni_trim(a);
    }
    return a;
}

std::vector<rational> uni_gcd(std::vector<rational> a, std::vector<rational> b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        auto r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Quotient of an exact division (remainder known to vanish).
std::vector<rational> uni_quot(std::vector<rational> a, std::vector<rational> b) {
    uni_trim(a);
    uni_trim(b);
    std::vector<rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        uni_trim(a);
    }
    return q;
}

// Exact k-th root of a rational, when one exists.
std::optional<rational> rational_kth_root(const rational& q, unsigned k) {
    if (q.is_zero()) return rational(0);
    if (k % 2 == 0 && q.sign() < 0) return std::nullopt;
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), q.num().get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), q.den().get_mpz_t(), k)) return std::nullopt;
    return rational(rn, rd);
}

struct split_state {
    std::vector<polynomial> eqs;                            // sorted unique, normalized
    std::map<std::size_t, polynomial> subs;                 // solved var -> value
    std::vector<std::pair<std::size_t, polynomial>> triangular;  // var, c*x + r with c != 0
    std::set<std::size_t> determined;
    std::vector<polynomial> ineqs;                          // sorted unique, normalized
    std::set<std::size_t> nonzero_vars;
    std::size_t depth = 0;
};

class splitter {
  public:
    splitter(const std::vector<polynomial>& system, std::vector<std::size_t> unknowns,
             std::vector<std::size_t> parameters, solve_limits limits)
        : unknowns_(std::move(unknowns)),
          params_(std::move(parameters)),
          lim_(limits),
          grev_(monomial_order::grevlex(0)),
          leaf_order_(monomial_order::lex(0)) {
        if (system.empty())
            throw std::invalid_argument("solve_components: empty system (no table)");
        table_ = system.front().table();
        grev_ = monomial_order::grevlex(table_->size());
        // Elimination order: unknowns dominate parameters, so leaf bases
        // triangularize unknowns over the parameters.
        std::vector<std::size_t> prio;
        std::vector<bool> placed(table_->size(), false);
        for (std::size_t v : unknowns_) {
            prio.push_back(v);
            placed[v] = true;
        }
        for (std::size_t v : params_) {
            if (placed[v]) throw std::invalid_argument("solve_components: unknown also parameter");
            prio.push_back(v);
            placed[v] = true;
        }
        for (std::size_t v = 0; v < table_->size(); ++v)
            if (!placed[v]) prio.push_back(v);
        leaf_order_ = monomial_order(order_kind::lex, std::move(prio));
        for (const auto& p : system) {
            require_same_table(system.front(), p);
            polynomial n = p.primitive_positive(grev_);
            if (n.is_zero()) continue;
            if (n.is_constant()) inconsistent_input_ = true;
            insert_sorted_unique(system_, n);
        }
    }

    std::vector<solution_component> run() {
        if (inconsistent_input_) return {};
        split_state init;
        init.eqs = system_;
        explore(std::move(init));
        for (auto& comp : leaves_) try_drop_inequations(comp);
        std::vector<solution_component> kept;
        for (auto& comp : leaves_) {
            bool duplicate = false;
            for (const auto& other : kept)
                if (same_component(comp, other)) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) kept.push_back(std::move(comp));
        }
        absorb(kept);
        return kept;
    }

  private:
    var_table_ptr table_;
    std::vector<polynomial> system_;
    std::vector<std::size_t> unknowns_, params_;
    solve_limits lim_;
    monomial_order grev_, leaf_order_;
    std::vector<solution_component> leaves_;
    bool inconsistent_input_ = false;

    static bool same_component(const solution_component& a, const solution_component& b) {
        return a.substitutions == b.substitutions &&
               a.residual_equations == b.residual_equations && a.inequations == b.inequations &&
               a.free_variables == b.free_variables;
    }

    bool add_ineq(split_state& st, const polynomial& p0) const {
        polynomial p = p0.primitive_positive(grev_);
        if (p.is_zero()) return false;
        if (p.is_constant()) return true;
        // p = m * q with m the common monomial factor: p != 0 iff every
        // variable of m is nonzero and q is nonzero.
        monomial mc = p.monomial_content();
        polynomial q = mc.is_constant() ? p : p.without_monomial_factor(mc).primitive_positive(grev_);
        for (std::size_t v = 0; v < table_->size(); ++v) {
            if (mc.exp(v) == 0) continue;
            st.nonzero_vars.insert(v);
            insert_sorted_unique(st.ineqs, polynomial::variable(table_, v));
        }
        if (!q.is_constant()) {
            if (q.term_count() == 1 && q.total_degree() == 1) st.nonzero_vars.insert(q.variables().front());
            insert_sorted_unique(st.ineqs, q);
        }
        return true;
    }

    bool known_nonzero(const split_state& st, const polynomial& p0) const {
        polynomial p = p0.primitive_positive(grev_);
        if (p.is_zero()) return false;
        if (p.is_constant()) return true;
        if (p.term_count() == 1) {
            for (std::size_t v : p.variables())
                if (!st.nonzero_vars.count(v)) return false;
            return true;
        }
        return std::binary_search(st.ineqs.begin(), st.ineqs.end(), p, poly_less);
    }

    bool apply_sub(split_state& st, std::size_t x, polynomial rhs) const {
        std::map<std::size_t, polynomial> m;
        m.emplace(x, std::move(rhs));
        for (auto& e : st.eqs) e = e.substituted(m);
        for (auto& [v, def] : st.triangular) def = def.substituted(m);
        for (auto& [v, value] : st.subs) value = value.substituted(m);
        st.subs.emplace(x, m.at(x));
        auto old_ineqs = std::move(st.ineqs);
        st.ineqs.clear();
        st.nonzero_vars.clear();
        for (const auto& q : old_ineqs)
            if (!add_ineq(st, q.substituted(m))) return false;
        std::vector<polynomial> eqs = std::move(st.eqs);
        st.eqs.clear();
        for (const auto& e : eqs) insert_sorted_unique(st.eqs, e);
        return true;
    }

    // def = c*x + r with c, r free of x and c nonzero on the branch; returns a
    // unit multiple of f modulo def that is free of x.
    polynomial pseudo_reduce(polynomial f, const polynomial& def, const polynomial& c,
                             std::size_t x) const {
        std::uint32_t d;
        while ((d = f.degree_in(x)) >= 1) {
            auto fc = f.coefficients_in(x);
            polynomial xpow =
                polynomial::term(table_, monomial::unit(table_->size(), x, d - 1), rational(1));
            f = c * f - fc[d] * xpow * def;
        }
        return f;
    }

    // Exact k-th root of a polynomial via the leading-term recurrence: start
    // from the root of the leading term and grow correction terms until
    // e - s^k vanishes.  Returns nullopt when e is not a perfect k-th power.
    std::optional<polynomial> kth_root(const polynomial& e, unsigned k) const {
        auto [lm, lc] = e.leading_term(grev_);
        monomial rm(table_->size());
        for (std::size_t v = 0; v < table_->size(); ++v) {
            if (lm.exp(v) % k) return std::nullopt;
            rm.set_exp(v, lm.exp(v) / k);
        }
        auto rc = rational_kth_root(lc, k);
        if (!rc) return std::nullopt;
        rational lead_pow = rational(static_cast<long>(k));
        for (unsigned i = 1; i < k; ++i) lead_pow *= *rc;
        polynomial s = polynomial::term(table_, rm, *rc);
        for (int guard = 0; guard < 256; ++guard) {
            polynomial sk = s;
            for (unsigned i = 1; i < k; ++i) sk *= s;
            polynomial diff = e - sk;
            if (diff.is_zero()) return s;
            auto [dm, dc] = diff.leading_term(grev_);
            monomial tm(table_->size());
            for (std::size_t v = 0; v < table_->size(); ++v) {
                std::uint32_t need = rm.exp(v) * (k - 1);
                if (dm.exp(v) < need) return std::nullopt;
                tm.set_exp(v, dm.exp(v) - need);
            }
            s += polynomial::term(table_, tm, dc / lead_pow);
        }
        return std::nullopt;
    }

    // Replaces a univariate equation by its squarefree part (same zero set):
    // (x - r)^k = 0 collapses to x - r = 0, which the linear machinery solves.
    polynomial uni_squarefree(const polynomial& e, std::size_t x) const {
        auto cs = e.coefficients_in(x);
        std::vector<rational> a(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i) a[i] = cs[i].constant_value();
        std::vector<rational> d(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * rational(static_cast<long>(i));
        auto g = uni_gcd(a, d);
        if (g.size() <= 1) return e;  // already squarefree
        auto s = uni_quot(std::move(a), std::move(g));
        polynomial out(table_);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero())
                out.add_term(monomial::unit(table_->size(), x, static_cast<std::uint32_t>(i)),
                             s[i]);
        return out;
    }

    // Drives the state to a fixpoint: normalizes, strips factors known to be
    // nonzero, applies forced (constant-coefficient) solves.  False = dead branch.
    bool simplify(split_state& st) const {
        for (;;) {
            std::vector<polynomial> eqs;
            for (const auto& e0 : st.eqs) {
                polynomial e = e0.primitive_positive(grev_);
                if (e.is_zero()) continue;
                if (e.is_constant()) return false;
                monomial mc = e.monomial_content();
                monomial strip(table_->size());
                bool any = false;
                for (std::size_t v = 0; v < table_->size(); ++v)
                    if (mc.exp(v) > 0 && st.nonzero_vars.count(v)) {
                        strip.set_exp(v, mc.exp(v));
                        any = true;
                    }
                if (any) e = e.without_monomial_factor(strip).primitive_positive(grev_);
                if (e.is_constant()) return false;  // stripped to a nonzero constant
                // Perfect powers and repeated roots have the same zero set as
                // their root/squarefree part; reducing them here lets the
                // linear machinery finish splits it otherwise could not.
                for (unsigned k : {2u, 3u})
                    if (auto root = kth_root(e, k)) {
                        e = root->primitive_positive(grev_);
                        break;
                    }
                if (auto uv = e.variables(); uv.size() == 1 && e.degree_in(uv[0]) >= 2)
                    e = uni_squarefree(e, uv[0]).primitive_positive(grev_);
                insert_sorted_unique(eqs, e);
            }
            st.eqs = std::move(eqs);

            bool restart = false;
            // Triangular definitions whose coefficient collapsed to a constant
            // become explicit substitutions.
            for (std::size_t i = 0; i < st.triangular.size() && !restart; ++i) {
                auto [x, def0] = st.triangular[i];
                polynomial def = def0.primitive_positive(grev_);
                if (def.is_zero()) {
                    st.triangular.erase(st.triangular.begin() + i);
                    st.determined.erase(x);
                    restart = true;
                } else if (def.is_constant()) {
                    return false;
                } else if (def.degree_in(x) == 0) {
                    st.triangular.erase(st.triangular.begin() + i);
                    st.determined.erase(x);
                    insert_sorted_unique(st.eqs, def);
                    restart = true;
                } else if (def.degree_in(x) == 1 && def.coefficients_in(x)[1].is_constant()) {
                    auto cs = def.coefficients_in(x);
                    polynomial rhs = cs[0] * (-cs[1].constant_value().inverse());
                    st.triangular.erase(st.triangular.begin() + i);
                    st.determined.erase(x);
                    if (!apply_sub(st, x, std::move(rhs))) return false;
                    restart = true;
                } else {
                    st.triangular[i].second = def;
                }
            }
            if (restart) continue;

            for (std::size_t ei = 0; ei < st.eqs.size() && !restart; ++ei) {
                const polynomial& e = st.eqs[ei];
                for (std::size_t x : unknowns_) {
                    if (st.subs.count(x) || st.determined.count(x)) continue;
                    if (e.degree_in(x) != 1) continue;
                    auto cs = e.coefficients_in(x);
                    if (!cs[1].is_constant()) continue;
                    polynomial rhs = cs[0] * (-cs[1].constant_value().inverse());
                    st.eqs.erase(st.eqs.begin() + ei);
                    if (!apply_sub(st, x, std::move(rhs))) return false;
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            return true;
        }
    }

    void explore(split_state st) {
        if (!simplify(st)) return;
        if (st.eqs.empty()) {
            emit(std::move(st), true);
            return;
        }
        // Prefer a variable that appears linearly; pick the candidate with the
        // simplest coefficient.
        struct candidate {
            std::uint32_t coeff_degree;
            std::size_t eq_terms;
            std::size_t x;
            std::size_t eq_index;
        };
        std::optional<candidate> best;
        for (std::size_t ei = 0; ei < st.eqs.size(); ++ei) {
            for (std::size_t x : unknowns_) {
                if (st.subs.count(x) || st.determined.count(x)) continue;
                if (st.eqs[ei].degree_in(x) != 1) continue;
                candidate c{st.eqs[ei].coefficients_in(x)[1].total_degree(),
                            st.eqs[ei].term_count(), x, ei};
                if (!best || std::tie(c.coeff_degree, c.eq_terms, c.x, c.eq_index) <
                                 std::tie(best->coeff_degree, best->eq_terms, best->x,
                                          best->eq_index))
                    best = c;
            }
        }
        if (best) {
            polynomial c = st.eqs[best->eq_index].coefficients_in(best->x)[1];
            polynomial cn = c.primitive_positive(grev_);
            if (known_nonzero(st, cn)) {
                descend_nonzero(std::move(st), best->eq_index, best->x);
                return;
            }
            if (st.depth >= lim_.max_depth) {
                emit(std::move(st), false);
                return;
            }
            {
                split_state a = st;
                a.depth++;
                if (add_ineq(a, cn)) descend_nonzero(std::move(a), best->eq_index, best->x);
            }
            // Coefficient-zero branch: with c = 0 the equation c*x + r
            // degenerates to r = 0, so replace it by the pair {c, r}.  Keeping
            // the original equation would leave the state unchanged and the
            // split would pick the same candidate forever.
            split_state b = std::move(st);
            b.depth++;
            polynomial e = b.eqs[best->eq_index];
            b.eqs.erase(b.eqs.begin() + best->eq_index);
            polynomial r = e.coefficients_in(best->x)[0];
            insert_sorted_unique(b.eqs, cn);
            if (!r.is_zero()) insert_sorted_unique(b.eqs, r.primitive_positive(grev_));
            explore(std::move(b));
            return;
        }
        // Fallback: split var = 0 / var != 0 on the lowest unknown still in play.
        std::optional<std::size_t> pick;
        for (std::size_t x : unknowns_) {
            if (st.subs.count(x) || st.determined.count(x) || st.nonzero_vars.count(x)) continue;
            for (const auto& e : st.eqs)
                if (e.contains_var(x)) {
                    pick = x;
                    break;
                }
            if (pick) break;
        }
        if (!pick || st.depth >= lim_.max_depth) {
            emit(std::move(st), false);
            return;
        }
        {
            split_state a = st;
            a.depth++;
            if (apply_sub(a, *pick, polynomial(table_))) explore(std::move(a));
        }
        split_state b = std::move(st);
        b.depth++;
        if (add_ineq(b, polynomial::variable(table_, *pick))) explore(std::move(b));
    }

    void descend_nonzero(split_state st, std::size_t eq_index, std::size_t x) {
        polynomial e = st.eqs[eq_index];
        st.eqs.erase(st.eqs.begin() + eq_index);
        auto cs = e.coefficients_in(x);
        const polynomial& c = cs[1];
        polynomial minus_r = -cs[0];
        if (auto q = divide_exact(minus_r, c)) {
            if (!apply_sub(st, x, std::move(*q))) return;
            explore(std::move(st));
            return;
        }
        // x stays implicit: eliminate it from the rest by pseudo-reduction
        // (multiplying by the nonzero c), keep the definition as a residual.
        std::vector<polynomial> eqs = std::move(st.eqs);
        st.eqs.clear();
        for (const auto& f : eqs) insert_sorted_unique(st.eqs, pseudo_reduce(f, e, c, x));
        auto old_ineqs = std::move(st.ineqs);
        st.ineqs.clear();
        st.nonzero_vars.clear();
        for (const auto& q0 : old_ineqs)
            if (!add_ineq(st, pseudo_reduce(q0, e, c, x))) return;
        st.triangular.emplace_back(x, e);
        st.determined.insert(x);
        explore(std::move(st));
    }

    bool viable(const std::vector<polynomial>& relations,
                const std::vector<polynomial>& ineqs) const {
        if (relations.empty()) return true;  // inequations alone are satisfiable
        std::vector<polynomial> gens = relations;
        var_table_ptr tab = table_;
        if (!ineqs.empty()) {
            polynomial q = polynomial::constant(table_, rational(1));
            for (const auto& p : ineqs) q *= p;
            tab = table_->extended({{table_->fresh_aux_name("s"), var_kind::unknown}});
            std::vector<std::size_t> idmap(table_->size());
            for (std::size_t i = 0; i < idmap.size(); ++i) idmap[i] = i;
            for (auto& g : gens) g = g.renamed(tab, idmap);
            polynomial s = polynomial::variable(tab, tab->size() - 1);
            gens.push_back(polynomial::constant(tab, rational(1)) - s * q.renamed(tab, idmap));
        }
        groebner_basis gb = buchberger(ideal(std::move(gens), monomial_order::grevlex(tab->size())),
                                       lim_.gb);
        return !gb.is_trivial();
    }

    void emit(split_state st, bool solved) {
        // Equations mentioning no unknown are conditions on the parameters
        // alone; a leaf whose unsolved equations are all of that form is as
        // solved as the unknown-oriented split can make it.
        if (!solved) {
            bool unknown_left = false;
            for (const auto& e : st.eqs) {
                for (std::size_t v : e.variables())
                    if (std::find(unknowns_.begin(), unknowns_.end(), v) != unknowns_.end()) {
                        unknown_left = true;
                        break;
                    }
                if (unknown_left) break;
            }
            solved = !unknown_left;
        }
        // A variable is constrained when it is explicitly substituted, is the
        // solved head of a triangular definition, or appears in a residual the
        // split could not finish.  Non-head variables of triangular
        // definitions stay free: they parametrize the component and the
        // sampler assigns them before solving the heads.
        std::set<std::size_t> constrained;
        for (const auto& [x, value] : st.subs) constrained.insert(x);
        std::vector<polynomial> residuals;
        for (auto& [x, def] : st.triangular) {
            residuals.push_back(def.primitive_positive(grev_));
            constrained.insert(x);
        }
        if (!st.eqs.empty()) {
            groebner_basis gb = buchberger(ideal(st.eqs, leaf_order_), lim_.gb);
            if (gb.is_trivial()) return;
            for (const auto& p : gb.basis) {
                residuals.push_back(p);
                for (std::size_t v : p.variables()) constrained.insert(v);
            }
        }
        std::sort(residuals.begin(), residuals.end(), poly_less);
        residuals.erase(std::unique(residuals.begin(), residuals.end()), residuals.end());
        if (!viable(residuals, st.ineqs)) return;

        solution_component comp;
        comp.table = table_;
        comp.fully_solved = solved;
        comp.substitutions.assign(st.subs.begin(), st.subs.end());
        comp.residual_equations = std::move(residuals);
        comp.inequations = std::move(st.ineqs);
        for (std::size_t v : unknowns_)
            if (!constrained.count(v)) comp.free_variables.push_back(v);
        for (std::size_t v : params_)
            if (!constrained.count(v)) comp.free_variables.push_back(v);
        std::sort(comp.free_variables.begin(), comp.free_variables.end());
        leaves_.push_back(std::move(comp));
    }

    std::vector<polynomial> relations_of(const solution_component& comp) const {
        std::vector<polynomial> rel;
        for (const auto& [x, value] : comp.substitutions)
            rel.push_back(polynomial::variable(table_, x) - value);
        for (const auto& r : comp.residual_equations) rel.push_back(r);
        return rel;
    }

    // The closure of the component (ignoring inequations) already satisfies the
    // input system -> the inequations carve nothing away and are dropped.
    void try_drop_inequations(solution_component& comp) const {
        if (comp.inequations.empty()) return;
        std::map<std::size_t, polynomial> m(comp.substitutions.begin(), comp.substitutions.end());
        std::optional<ideal> resid;
        if (!comp.residual_equations.empty()) resid.emplace(comp.residual_equations, leaf_order_);
        for (const auto& g : system_) {
            polynomial h = g.substituted(m);
            if (h.is_zero()) continue;
            if (!resid || !radical_member(h, *resid, lim_.gb)) return;
        }
        comp.inequations.clear();
    }

    // Every point of d (equations hold, inequations nonzero) lies in c.
    bool contained(const solution_component& d, const solution_component& c) const {
        std::vector<polynomial> gens = relations_of(d);
        var_table_ptr tab = table_;
        std::vector<std::size_t> idmap(table_->size());
        for (std::size_t i = 0; i < idmap.size(); ++i) idmap[i] = i;
        if (!d.inequations.empty()) {
            polynomial q = polynomial::constant(table_, rational(1));
            for (const auto& p : d.inequations) q *= p;
            tab = table_->extended({{table_->fresh_aux_name("s"), var_kind::unknown}});
            for (auto& g : gens) g = g.renamed(tab, idmap);
            polynomial s = polynomial::variable(tab, tab->size() - 1);
            gens.push_back(polynomial::constant(tab, rational(1)) - s * q.renamed(tab, idmap));
        }
        ideal domain(gens, monomial_order::grevlex(tab->size()));
        for (const auto& f : relations_of(c)) {
            polynomial fe = (tab == table_) ? f : f.renamed(tab, idmap);
            if (!radical_member(fe, domain, lim_.gb)) return false;
        }
        for (const auto& q : c.inequations) {
            std::vector<polynomial> gens2 = domain.generators;
            gens2.push_back((tab == table_) ? q : q.renamed(tab, idmap));
            if (!buchberger(ideal(std::move(gens2), domain.order), lim_.gb).is_trivial())
                return false;
        }
        return true;
    }

    void absorb(std::vector<solution_component>& comps) const {
        std::vector<char> alive(comps.size(), 1);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (i == j || !alive[j]) continue;
                // An unfinished leaf describes a superset of what its split
                // reached; letting it swallow a fully solved component would
                // trade a sampleable piece for an unsampleable catch-all.
                if (comps[i].fully_solved && !comps[j].fully_solved) continue;
                if (contained(comps[i], comps[j])) {
                    // On mutual containment keep the earlier component.
                    if (j > i && contained(comps[j], comps[i])) continue;
                    alive[i] = 0;
                    break;
                }
            }
        }
        std::vector<solution_component> kept;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (alive[i]) kept.push_back(std::move(comps[i]));
        comps = std::move(kept);
    }
};

}  // namespace

std::vector<solution_component> solve_components(const std::vector<polynomial>& system,
                                                 const std::vector<std::size_t>& unknowns,
                                                 const std::vector<std::size_t>& parameters,
                                                 const solve_limits& limits) {
    splitter s(system, unknowns, parameters, limits);
    return s.run();
}

std::vector<std::vector<rational>> component_sample(const solution_component& comp,
                                                    std::uint64_t seed, std::size_t count) {
    rng gen(seed);
    const std::size_t nvars = comp.table->size();
    std::vector<std::vector<rational>> points;
    const std::size_t budget = 200 * count + 1000;
    std::size_t attempts = 0;
    while (points.size() < count) {
        if (attempts++ >= budget) throw rejection_exhausted_error("component sampling");
        std::vector<rational> point(nvars, rational(0));
        std::vector<bool> assigned(nvars, false);
        for (std::size_t v : comp.free_variables) {
            point[v] = gen.small_rational();
            assigned[v] = true;
        }
        // Solve the residuals for their variables wherever they become linear
        // univariate under the current partial assignment.
        std::vector<polynomial> pending = comp.residual_equations;
        bool bad = false;
        bool progress = true;
        while (!pending.empty() && progress && !bad) {
            progress = false;
            std::vector<polynomial> next;
            for (const auto& f : pending) {
                std::map<std::size_t, rational> partial;
                for (std::size_t v : f.variables())
                    if (assigned[v]) partial.emplace(v, point[v]);
                polynomial fe = f.partially_evaluated(partial);
                if (fe.is_zero()) {
                    progress = true;
                    continue;
                }
                if (fe.is_constant()) {
                    bad = true;
                    break;
                }
                auto vars = fe.variables();
                if (vars.size() == 1 && fe.degree_in(vars[0]) == 1) {
                    auto cs = fe.coefficients_in(vars[0]);
                    point[vars[0]] = -(cs[0].constant_value() / cs[1].constant_value());
                    assigned[vars[0]] = true;
                    progress = true;
                } else {
                    next.push_back(f);
                }
            }
            pending = std::move(next);
        }
        if (bad || !pending.empty()) continue;
        bool sub_bad = false;
        for (const auto& [x, rhs] : comp.substitutions) {
            try {
                point[x] = rhs.evaluated(point, assigned);
            } catch (const missing_assignment_error&) {
                sub_bad = true;
                break;
            }
            assigned[x] = true;
        }
        if (sub_bad) continue;
        // Table variables the component never mentions keep their zero
        // default; the full-point validation below is what decides acceptance.
        bool valid = true;
        for (const auto& f : comp.residual_equations)
            if (!f.evaluated(point).is_zero()) {
                valid = false;
                break;
            }
        for (const auto& q : comp.inequations) {
            if (!valid) break;
            if (q.evaluated(point).is_zero()) valid = false;
        }
        if (!valid) continue;
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace dend
