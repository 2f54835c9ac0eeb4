#include "dend/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "dend/errors.hpp"

namespace dend {

polynomial reduce_modulo(const polynomial& p, const std::vector<polynomial>& basis,
                         const monomial_order& ord) {
    for (const auto& g : basis) {
        if (g.is_zero()) throw zero_polynomial_error();
        require_same_table(p, g);
    }
    polynomial rest = p;
    polynomial remainder(p.table());
    while (!rest.is_zero()) {
        auto [lm, lc] = rest.leading_term(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            const monomial& gm = g.leading_monomial(ord);
            if (!gm.divides(lm)) continue;
            rational factor = lc / g.leading_coeff(ord);
            rest -= polynomial::term(p.table(), lm.divided_by(gm), factor) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            rest.add_term(lm, -lc);
        }
    }
    return remainder;
}

polynomial s_polynomial(const polynomial& f, const polynomial& g, const monomial_order& ord) {
    if (f.is_zero() || g.is_zero()) throw zero_polynomial_error();
    require_same_table(f, g);
    auto [fm, fc] = f.leading_term(ord);
    auto [gm, gc] = g.leading_term(ord);
    monomial l = monomial::lcm(fm, gm);
    polynomial left = polynomial::term(f.table(), l.divided_by(fm), fc.inverse()) * f;
    polynomial right = polynomial::term(f.table(), l.divided_by(gm), gc.inverse()) * g;
    return left - right;
}

ideal::ideal(std::vector<polynomial> gens, monomial_order ord) : order(std::move(ord)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!generators.empty()) require_same_table(generators.front(), g);
        generators.push_back(std::move(g));
    }
}

bool groebner_basis::is_trivial() const {
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

namespace {

// Pair key: (lcm degree, lcm under storage order, i, j) — deterministic normal
// selection.
struct pair_entry {
    std::uint32_t degree;
    monomial lcm;
    std::size_t i, j;
};

struct pair_less {
    bool operator()(const pair_entry& a, const pair_entry& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = monomial::cmp_storage(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::vector<polynomial> interreduce(std::vector<polynomial> g, const monomial_order& ord) {
    // Minimalize: drop any element whose leading monomial another one divides.
    std::sort(g.begin(), g.end(), [&](const polynomial& a, const polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    std::vector<polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const monomial& mi = g[i].leading_monomial(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const monomial& mj = g[j].leading_monomial(ord);
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // Tail-reduce every element against the others until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            polynomial r = reduce_modulo(minimal[i], others, ord);
            if (r != minimal[i]) {
                changed = true;
                minimal[i] = std::move(r);
            }
        }
        minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                     [](const polynomial& p) { return p.is_zero(); }),
                      minimal.end());
    }
    for (auto& p : minimal) p = p.monic(ord);
    std::sort(minimal.begin(), minimal.end(), [&](const polynomial& a, const polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return minimal;
}

}  // namespace

groebner_basis buchberger(const ideal& input, const buchberger_limits& limits) {
    const monomial_order& ord = input.order;
    groebner_basis out{{}, ord};
    if (input.generators.empty()) return out;

    std::vector<polynomial> g;
    for (const auto& p : input.generators) {
        polynomial m = p.monic(ord);
        if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(std::move(m));
    }

    std::set<pair_entry, pair_less> queue;
    std::size_t enqueued = 0;
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            enqueued++;
            if (enqueued > limits.max_pairs)
                throw resource_limit_error("S-pair queue bound (" +
                                           std::to_string(limits.max_pairs) + ")");
            monomial l = monomial::lcm(g[i].leading_monomial(ord), g[j].leading_monomial(ord));
            queue.insert(pair_entry{l.total_degree(), std::move(l), i, j});
        }
    };
    for (std::size_t j = 1; j < g.size(); ++j) push_pairs_with(j);

    while (!queue.empty()) {
        pair_entry e = *queue.begin();
        queue.erase(queue.begin());
        const polynomial &f1 = g[e.i], &f2 = g[e.j];
        // First Buchberger criterion: coprime leading monomials reduce to zero.
        if (monomial::coprime(f1.leading_monomial(ord), f2.leading_monomial(ord))) continue;
        polynomial s = reduce_modulo(s_polynomial(f1, f2, ord), g, ord);
        if (s.is_zero()) continue;
        g.push_back(s.monic(ord));
        push_pairs_with(g.size() - 1);
    }

    out.basis = interreduce(std::move(g), ord);
    return out;
}

bool ideal_member(const polynomial& p, const groebner_basis& gb) {
    if (p.is_zero()) return true;
    if (gb.basis.empty()) return false;
    return reduce_modulo(p, gb.basis, gb.order).is_zero();
}

bool radical_member(const polynomial& p, const ideal& input, const buchberger_limits& limits) {
    if (p.is_zero()) return true;
    // Rabinowitsch: p vanishes on V(I) iff I + <1 - t*p> has no solution.
    var_table_ptr base = p.table();
    var_table_ptr ext = base->extended({{base->fresh_aux_name("t"), var_kind::unknown}});
    std::vector<std::size_t> id_map(base->size());
    for (std::size_t i = 0; i < base->size(); ++i) id_map[i] = i;

    std::vector<polynomial> gens;
    gens.reserve(input.generators.size() + 1);
    for (const auto& gpoly : input.generators) gens.push_back(gpoly.renamed(ext, id_map));
    polynomial t = polynomial::variable(ext, ext->size() - 1);
    gens.push_back(polynomial::constant(ext, rational(1)) - t * p.renamed(ext, id_map));

    ideal extended_ideal(std::move(gens), monomial_order::grevlex(ext->size()));
    return buchberger(extended_ideal, limits).is_trivial();
}

}  // namespace dend
