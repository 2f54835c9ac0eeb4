#include "dend/operator_model.hpp"

#include <sstream>

#include "dend/errors.hpp"

namespace dend {

std::string operator_kind::name() const {
    switch (fam) {
        case family::rota_baxter: return "rota_baxter";
        case family::reynolds: return "reynolds";
        case family::nijenhuis: return "nijenhuis";
        case family::averaging: return "averaging";
    }
    return "?";
}

std::string operator_kind::display_name() const {
    switch (fam) {
        case family::rota_baxter: return "Rota-Baxter of weight " + weight.str();
        case family::reynolds: return "Reynolds";
        case family::nijenhuis: return "Nijenhuis";
        case family::averaging: return "averaging";
    }
    return "?";
}

const char* convention_name(matrix_convention c) {
    return c == matrix_convention::row ? "row" : "col";
}

const char* rb_tail_name(rb_tail t) { return t == rb_tail::standard ? "standard" : "paper"; }

std::vector<identity_descriptor> kind_identities(const operator_kind& kind, rb_tail tail) {
    using enum op_arg;
    const rational one(1);
    std::vector<identity_descriptor> ids;
    auto term = [](rational c, unsigned depth, op_arg l, dend_product op, op_arg r) {
        return identity_term{std::move(c), depth, l, op, r};
    };
    for (dend_product op : {dend_product::prec, dend_product::succ}) {
        identity_descriptor id;
        id.tag = product_symbol(op);
        id.lhs = {term(one, 0, pu, op, pv)};
        switch (kind.fam) {
            case operator_kind::family::rota_baxter: {
                id.rhs = {term(one, 1, pu, op, v), term(one, 1, u, op, pv)};
                if (!kind.weight.is_zero()) {
                    dend_product weight_op =
                        (tail == rb_tail::standard) ? op : dend_product::prec;
                    id.rhs.push_back(term(kind.weight, 1, u, weight_op, v));
                }
                break;
            }
            case operator_kind::family::reynolds:
                id.rhs = {term(one, 1, u, op, pv), term(one, 1, pu, op, v),
                          term(-one, 1, pu, op, pv)};
                break;
            case operator_kind::family::nijenhuis:
                id.rhs = {term(one, 1, pu, op, v), term(one, 1, u, op, pv),
                          term(-one, 2, u, op, v)};
                break;
            case operator_kind::family::averaging: {
                // Two equations per product from the chain
                // P(u) op P(v) = P(u op P(v)) = P(P(u) op v).
                identity_descriptor first;
                first.tag = std::string(product_symbol(op)) + "1";
                first.lhs = {term(one, 0, pu, op, pv)};
                first.rhs = {term(one, 1, u, op, pv)};
                ids.push_back(std::move(first));
                identity_descriptor second;
                second.tag = std::string(product_symbol(op)) + "2";
                second.lhs = {term(one, 1, u, op, pv)};
                second.rhs = {term(one, 1, pu, op, v)};
                ids.push_back(std::move(second));
                continue;
            }
        }
        ids.push_back(std::move(id));
    }
    return ids;
}

namespace {

const char* arg_text(op_arg a) {
    switch (a) {
        case op_arg::u: return "u";
        case op_arg::pu: return "P(u)";
        case op_arg::v: return "v";
        case op_arg::pv: return "P(v)";
    }
    return "?";
}

std::string side_text(const std::vector<identity_term>& side) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : side) {
        rational a = abs(t.coeff);
        if (first) {
            if (t.coeff.sign() < 0) os << "-";
            first = false;
        } else {
            os << (t.coeff.sign() < 0 ? " - " : " + ");
        }
        if (!a.is_one()) os << a.str() << "*";
        const char* sym = t.op == dend_product::prec ? "<|" : "|>";
        std::string body =
            std::string(arg_text(t.left)) + " " + sym + " " + arg_text(t.right);
        for (unsigned d = 0; d < t.p_depth; ++d) body = "P(" + body + ")";
        os << body;
    }
    return os.str();
}

}  // namespace

std::string render_identity(const identity_descriptor& id) {
    return side_text(id.lhs) + " = " + side_text(id.rhs);
}

coeff_vector apply_matrix(const std::vector<std::vector<polynomial>>& m, matrix_convention conv,
                          const coeff_vector& x) {
    const std::size_t n = x.size();
    if (m.size() != n) throw dimension_mismatch_error("matrix rows vs vector length");
    for (const auto& row : m)
        if (row.size() != n) throw dimension_mismatch_error("matrix is not square");
    coeff_vector out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(polynomial(x[0].table()));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
            const polynomial& entry = conv == matrix_convention::row ? m[i][k] : m[k][i];
            if (entry.is_zero()) continue;
            out[k] += x[i] * entry;
        }
    }
    return out;
}

std::string equation_label::str() const {
    std::ostringstream os;
    os << identity << "(" << i << "," << j << ")/e" << coordinate;
    return os.str();
}

std::vector<polynomial> operator_system::nonzero_equations() const {
    std::vector<polynomial> out;
    for (const auto& [label, p] : equations)
        if (!p.is_zero()) out.push_back(p);
    return out;
}

std::vector<std::size_t> operator_system::unknown_vars() const {
    std::vector<std::size_t> out;
    for (const auto& row : unknown_index)
        for (std::size_t v : row) out.push_back(v);
    return out;
}

std::vector<std::size_t> operator_system::parameter_vars() const {
    std::vector<std::size_t> out = table->indices_of_kind(var_kind::parameter);
    return out;
}

operator_system build_system_over(const dendriform_algebra& algebra, const operator_kind& kind,
                                  matrix_convention conv, rb_tail tail, var_table_ptr table,
                                  std::vector<std::vector<std::size_t>> unknown_index) {
    const std::size_t n = algebra.dim;
    if (unknown_index.size() != n) throw dimension_mismatch_error("unknown index vs dimension");
    for (const auto& row : unknown_index)
        if (row.size() != n) throw dimension_mismatch_error("unknown index vs dimension");

    operator_system sys;
    sys.algebra_id = algebra.id;
    sys.kind = kind;
    sys.convention = conv;
    sys.tail = tail;
    sys.table = table;
    sys.unknown_index = std::move(unknown_index);

    algebra_view view = view_in(algebra, table);
    std::vector<std::vector<polynomial>> m(n, std::vector<polynomial>(n, polynomial(table)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = polynomial::variable(table, sys.unknown_index[i][j]);

    monomial_order grev = monomial_order::grevlex(table->size());
    auto identities = kind_identities(kind, tail);
    for (std::size_t i = 0; i < n; ++i) {
        coeff_vector u = view.basis_vector(i);
        coeff_vector pu = apply_matrix(m, conv, u);
        for (std::size_t j = 0; j < n; ++j) {
            coeff_vector v = view.basis_vector(j);
            coeff_vector pv = apply_matrix(m, conv, v);
            auto pick = [&](op_arg a) -> const coeff_vector& {
                switch (a) {
                    case op_arg::u: return u;
                    case op_arg::pu: return pu;
                    case op_arg::v: return v;
                    case op_arg::pv: return pv;
                }
                return v;
            };
            auto eval_side = [&](const std::vector<identity_term>& side) {
                coeff_vector acc = view.zero_vector();
                for (const auto& t : side) {
                    coeff_vector prod = bilinear_apply(view, t.op, pick(t.left), pick(t.right));
                    for (unsigned d = 0; d < t.p_depth; ++d) prod = apply_matrix(m, conv, prod);
                    for (std::size_t k = 0; k < n; ++k) acc[k] += t.coeff * prod[k];
                }
                return acc;
            };
            for (const auto& id : identities) {
                coeff_vector lhs = eval_side(id.lhs);
                coeff_vector rhs = eval_side(id.rhs);
                for (std::size_t k = 0; k < n; ++k) {
                    polynomial residual = (lhs[k] - rhs[k]).primitive_positive(grev);
                    sys.equations.emplace_back(equation_label{id.tag, i + 1, j + 1, k + 1},
                                               std::move(residual));
                }
            }
        }
    }
    return sys;
}

operator_system build_system(const dendriform_algebra& algebra, const operator_kind& kind,
                             matrix_convention conv, rb_tail tail) {
    const std::size_t n = algebra.dim;
    std::vector<std::pair<std::string, var_kind>> vars;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            vars.emplace_back("a" + std::to_string(i) + std::to_string(j), var_kind::unknown);
    for (std::size_t p = 0; p < algebra.params->size(); ++p)
        vars.emplace_back(algebra.params->name(p), var_kind::parameter);
    var_table_ptr table = var_table::make(std::move(vars));
    std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) idx[i][j] = i * n + j;
    return build_system_over(algebra, kind, conv, tail, std::move(table), std::move(idx));
}

}  // namespace dend
