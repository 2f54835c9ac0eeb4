#include "dend/dendriform.hpp"

#include "dend/errors.hpp"

namespace dend {

const char* product_symbol(dend_product p) { return p == dend_product::prec ? "prec" : "succ"; }

const char* axiom_name(axiom_id a) {
    switch (a) {
        case axiom_id::left_nesting: return "left_nesting";
        case axiom_id::middle_swap: return "middle_swap";
        case axiom_id::right_nesting: return "right_nesting";
        case axiom_id::sum_associativity: return "sum_associativity";
    }
    return "?";
}

coeff_vector algebra_view::basis_vector(std::size_t i) const {
    coeff_vector v(algebra->dim, polynomial(host));
    v[i] = polynomial::constant(host, rational(1));
    return v;
}

coeff_vector algebra_view::zero_vector() const {
    return coeff_vector(algebra->dim, polynomial(host));
}

algebra_view view_in(const dendriform_algebra& algebra, var_table_ptr host) {
    algebra_view view;
    view.algebra = &algebra;
    view.host = host;
    std::vector<std::size_t> var_map(algebra.params->size());
    for (std::size_t i = 0; i < var_map.size(); ++i)
        var_map[i] = host->index_of(algebra.params->name(i));
    auto lift = [&](const std::vector<std::vector<coeff_vector>>& t) {
        std::vector<std::vector<coeff_vector>> out(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            out[i].resize(t[i].size());
            for (std::size_t j = 0; j < t[i].size(); ++j) {
                out[i][j].reserve(t[i][j].size());
                for (const auto& p : t[i][j]) out[i][j].push_back(p.renamed(host, var_map));
            }
        }
        return out;
    };
    view.prec = lift(algebra.prec);
    view.succ = lift(algebra.succ);
    return view;
}

coeff_vector bilinear_apply(const algebra_view& view, dend_product product,
                            const coeff_vector& x, const coeff_vector& y) {
    const std::size_t n = view.algebra->dim;
    if (x.size() != n || y.size() != n)
        throw dimension_mismatch_error("vector length vs algebra dimension");
    const auto& table = view.table_of(product);
    coeff_vector out = view.zero_vector();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            polynomial scale = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (table[i][j][k].is_zero()) continue;
                out[k] += scale * table[i][j][k];
            }
        }
    }
    return out;
}

namespace {

std::vector<axiom_violation> run_triples(
    const dendriform_algebra& algebra,
    const std::vector<std::pair<axiom_id,
                                coeff_vector (*)(const algebra_view&, const coeff_vector&,
                                                 const coeff_vector&, const coeff_vector&)>>&
        checks) {
    algebra_view view = view_in(algebra, algebra.params);
    std::vector<axiom_violation> violations;
    for (std::size_t i = 0; i < algebra.dim; ++i) {
        coeff_vector u = view.basis_vector(i);
        for (std::size_t j = 0; j < algebra.dim; ++j) {
            coeff_vector v = view.basis_vector(j);
            for (std::size_t k = 0; k < algebra.dim; ++k) {
                coeff_vector w = view.basis_vector(k);
                for (const auto& [id, residual_fn] : checks) {
                    coeff_vector r = residual_fn(view, u, v, w);
                    for (std::size_t coord = 0; coord < algebra.dim; ++coord) {
                        if (r[coord].is_zero()) continue;
                        violations.push_back(
                            axiom_violation{id, {i + 1, j + 1, k + 1}, coord + 1, r[coord]});
                    }
                }
            }
        }
    }
    return violations;
}

coeff_vector sub(coeff_vector a, const coeff_vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

coeff_vector add(coeff_vector a, const coeff_vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

coeff_vector left_nesting_residual(const algebra_view& vw, const coeff_vector& u,
                                   const coeff_vector& v, const coeff_vector& w) {
    using enum dend_product;
    // (u <| v) <| w - u <| (v <| w) - u <| (v |> w)
    coeff_vector lhs = bilinear_apply(vw, prec, bilinear_apply(vw, prec, u, v), w);
    coeff_vector star = add(bilinear_apply(vw, prec, v, w), bilinear_apply(vw, succ, v, w));
    return sub(lhs, bilinear_apply(vw, prec, u, star));
}

coeff_vector middle_swap_residual(const algebra_view& vw, const coeff_vector& u,
                                  const coeff_vector& v, const coeff_vector& w) {
    using enum dend_product;
    // (u |> v) <| w - u |> (v <| w)
    return sub(bilinear_apply(vw, prec, bilinear_apply(vw, succ, u, v), w),
               bilinear_apply(vw, succ, u, bilinear_apply(vw, prec, v, w)));
}

coeff_vector right_nesting_residual(const algebra_view& vw, const coeff_vector& u,
                                    const coeff_vector& v, const coeff_vector& w) {
    using enum dend_product;
    // u |> (v |> w) - (u <| v) |> w - (u |> v) |> w
    coeff_vector star = add(bilinear_apply(vw, prec, u, v), bilinear_apply(vw, succ, u, v));
    return sub(bilinear_apply(vw, succ, u, bilinear_apply(vw, succ, v, w)),
               bilinear_apply(vw, succ, star, w));
}

coeff_vector sum_assoc_residual(const algebra_view& vw, const coeff_vector& u,
                                const coeff_vector& v, const coeff_vector& w) {
    using enum dend_product;
    auto star = [&](const coeff_vector& a, const coeff_vector& b) {
        return add(bilinear_apply(vw, prec, a, b), bilinear_apply(vw, succ, a, b));
    };
    return sub(star(star(u, v), w), star(u, star(v, w)));
}

}  // namespace

std::vector<axiom_violation> check_axioms(const dendriform_algebra& algebra) {
    return run_triples(algebra, {{axiom_id::left_nesting, &left_nesting_residual},
                                 {axiom_id::middle_swap, &middle_swap_residual},
                                 {axiom_id::right_nesting, &right_nesting_residual}});
}

std::vector<axiom_violation> sum_associativity_check(const dendriform_algebra& algebra) {
    return run_triples(algebra, {{axiom_id::sum_associativity, &sum_assoc_residual}});
}

}  // namespace dend
