#include "dend/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dend/errors.hpp"
#include "dend/rng.hpp"

namespace dend {

const char* verdict_name(claim_verdict::status s) {
    switch (s) {
        case claim_verdict::status::confirmed: return "CONFIRMED";
        case claim_verdict::status::conditional: return "CONDITIONAL";
        case claim_verdict::status::refuted: return "REFUTED";
    }
    return "?";
}

namespace {

/// System over a merged table: entry unknowns named __pij (reserved prefix, so
/// they can never collide with catalog parameters) followed by the claim's
/// parameter table.
struct claim_context {
    var_table_ptr table;
    operator_system system;
    std::map<std::size_t, polynomial> substitution;  // unknown -> claim entry
    std::vector<std::size_t> param_vars;
};

claim_context make_context(const family_claim& claim, const dendriform_algebra& algebra,
                           const operator_kind& kind, matrix_convention conv, rb_tail tail) {
    if (claim.algebra_id != algebra.id)
        throw algebra_mismatch_error(claim.algebra_id, algebra.id);
    const std::size_t n = algebra.dim;
    std::vector<std::pair<std::string, var_kind>> vars;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            vars.emplace_back("__p" + std::to_string(i) + std::to_string(j), var_kind::unknown);
    for (std::size_t p = 0; p < claim.params->size(); ++p)
        vars.emplace_back(claim.params->name(p), var_kind::parameter);

    claim_context ctx;
    ctx.table = var_table::make(std::move(vars));
    std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) idx[i][j] = i * n + j;
    ctx.system = build_system_over(algebra, kind, conv, tail, ctx.table, idx);

    std::vector<std::size_t> param_map(claim.params->size());
    for (std::size_t p = 0; p < claim.params->size(); ++p) param_map[p] = n * n + p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ctx.substitution.emplace(idx[i][j], claim.matrix[i][j].renamed(ctx.table, param_map));
    ctx.param_vars = ctx.table->indices_of_kind(var_kind::parameter);
    return ctx;
}

/// Deterministic witness hunt on a small grid; the residual ideal is trivial,
/// so some residual is nonzero at some point -- almost any point works.
std::optional<std::string> witness_point(
    const claim_context& ctx, const std::vector<std::pair<equation_label, polynomial>>& residuals) {
    static const rational pool[] = {rational(0), rational(1),  rational(-1), rational(2),
                                    rational(-2), rational(1, 2), rational(3)};
    constexpr std::size_t pool_size = sizeof(pool) / sizeof(pool[0]);
    const auto& params = ctx.param_vars;
    std::vector<std::size_t> digits(params.size(), 0);
    std::vector<rational> point(ctx.table->size(), rational(0));
    std::vector<bool> assigned(ctx.table->size(), false);
    for (std::size_t v : params) assigned[v] = true;
    std::size_t budget = 20000;
    for (;;) {
        if (budget-- == 0) return std::nullopt;
        for (std::size_t d = 0; d < params.size(); ++d) point[params[d]] = pool[digits[d]];
        for (const auto& [label, r] : residuals) {
            rational value = r.evaluated(point, assigned);
            if (!value.is_zero()) {
                std::ostringstream os;
                os << "at ";
                if (params.empty()) os << "the empty parameter point";
                for (std::size_t d = 0; d < params.size(); ++d)
                    os << (d ? ", " : "") << ctx.table->name(params[d]) << " = "
                       << point[params[d]];
                os << ": residual " << label.str() << " = " << value;
                return os.str();
            }
        }
        // advance the odometer
        std::size_t d = 0;
        for (; d < digits.size(); ++d) {
            if (++digits[d] < pool_size) break;
            digits[d] = 0;
        }
        if (d == digits.size()) return std::nullopt;
    }
}

claim_verdict classify(const claim_context& ctx) {
    claim_verdict verdict;
    for (const auto& [label, eq] : ctx.system.equations) {
        polynomial r = eq.substituted(ctx.substitution);
        if (!r.is_zero()) verdict.residuals.emplace_back(label, std::move(r));
    }
    if (verdict.residuals.empty()) {
        verdict.st = claim_verdict::status::confirmed;
        return verdict;
    }
    std::vector<polynomial> gens;
    gens.reserve(verdict.residuals.size());
    for (const auto& [label, r] : verdict.residuals) gens.push_back(r);
    groebner_basis gb =
        buchberger(ideal(std::move(gens), monomial_order::grevlex(ctx.table->size())));
    if (gb.is_trivial()) {
        verdict.st = claim_verdict::status::refuted;
        for (const auto& [label, r] : verdict.residuals)
            if (r.is_constant()) {
                verdict.witness = "residual " + label.str() + " = " + r.constant_value().str();
                break;
            }
        if (!verdict.witness) {
            auto w = witness_point(ctx, verdict.residuals);
            verdict.witness = w ? *w : "residual ideal is trivial";
        }
        return verdict;
    }
    verdict.st = claim_verdict::status::conditional;
    verdict.conditions = gb.basis;
    return verdict;
}

claim_verdict verify_with_kind(const family_claim& claim, const dendriform_algebra& algebra,
                               const operator_kind& kind, matrix_convention conv, rb_tail tail) {
    return classify(make_context(claim, algebra, kind, conv, tail));
}

}  // namespace

claim_verdict verify_claim(const family_claim& claim, const dendriform_algebra& algebra,
                           matrix_convention conv, rb_tail tail) {
    return verify_with_kind(claim, algebra, claim.kind, conv, tail);
}

claim_verdict weight_shift_check(const family_claim& claim, const dendriform_algebra& algebra,
                                 const rational& target_weight, matrix_convention conv,
                                 rb_tail tail) {
    if (claim.kind.fam != operator_kind::family::rota_baxter)
        throw std::invalid_argument("weight_shift_check: claim is not Rota-Baxter");
    return verify_with_kind(claim, algebra, operator_kind::rota_baxter(target_weight), conv, tail);
}

namespace {

/// Rational-arithmetic evaluation of the defining identities at one concrete
/// parameter point -- the numeric lane of the dual-engine check.  It shares
/// only the identity descriptors with the symbolic lane, not the polynomial
/// substitution machinery.
class numeric_model {
  public:
    numeric_model(const family_claim& claim, const dendriform_algebra& algebra,
                  matrix_convention conv, const std::vector<rational>& claim_param_point)
        : n_(algebra.dim), conv_(conv) {
        std::vector<rational> algebra_point(algebra.params->size());
        std::vector<bool> assigned(claim.params->size(), true);
        for (std::size_t p = 0; p < algebra.params->size(); ++p)
            algebra_point[p] =
                claim_param_point[claim.params->index_of(algebra.params->name(p))];
        auto eval_structure = [&](const std::vector<std::vector<coeff_vector>>& t) {
            std::vector<rational> flat;
            flat.reserve(n_ * n_ * n_);
            std::vector<bool> alg_assigned(algebra.params->size(), true);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    for (std::size_t k = 0; k < n_; ++k)
                        flat.push_back(t[i][j][k].evaluated(algebra_point, alg_assigned));
            return flat;
        };
        prec_ = eval_structure(algebra.prec);
        succ_ = eval_structure(algebra.succ);
        m_.resize(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                m_[i * n_ + j] = claim.matrix[i][j].evaluated(claim_param_point, assigned);
    }

    using vec = std::vector<rational>;

    vec basis(std::size_t i) const {
        vec e(n_, rational(0));
        e[i] = rational(1);
        return e;
    }

    vec apply_p(const vec& x) const {
        vec out(n_, rational(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k)
                out[k] += x[i] * (conv_ == matrix_convention::row ? m_[i * n_ + k]
                                                                  : m_[k * n_ + i]);
        return out;
    }

    vec product(dend_product op, const vec& x, const vec& y) const {
        const auto& c = op == dend_product::prec ? prec_ : succ_;
        vec out(n_, rational(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                rational s = x[i] * y[j];
                if (s.is_zero()) continue;
                for (std::size_t k = 0; k < n_; ++k) out[k] += s * c[(i * n_ + j) * n_ + k];
            }
        return out;
    }

    /// Both sides of every identity agree on all basis pairs.
    bool identities_hold(const std::vector<identity_descriptor>& ids) const {
        for (std::size_t i = 0; i < n_; ++i) {
            vec u = basis(i), pu = apply_p(u);
            for (std::size_t j = 0; j < n_; ++j) {
                vec v = basis(j), pv = apply_p(v);
                auto side = [&](const std::vector<identity_term>& terms) {
                    vec acc(n_, rational(0));
                    for (const auto& t : terms) {
                        const vec& l = t.left == op_arg::u ? u : (t.left == op_arg::pu ? pu : (t.left == op_arg::v ? v : pv));
                        const vec& r = t.right == op_arg::u ? u : (t.right == op_arg::pu ? pu : (t.right == op_arg::v ? v : pv));
                        vec prod = product(t.op, l, r);
                        for (unsigned d = 0; d < t.p_depth; ++d) prod = apply_p(prod);
                        for (std::size_t k = 0; k < n_; ++k) acc[k] += t.coeff * prod[k];
                    }
                    return acc;
                };
                for (const auto& id : ids) {
                    vec lhs = side(id.lhs), rhs = side(id.rhs);
                    for (std::size_t k = 0; k < n_; ++k)
                        if (lhs[k] != rhs[k]) return false;
                }
            }
        }
        return true;
    }

  private:
    std::size_t n_;
    matrix_convention conv_;
    std::vector<rational> prec_, succ_, m_;
};

}  // namespace

bool dual_engine_agree(const family_claim& claim, const dendriform_algebra& algebra,
                       matrix_convention conv, rb_tail tail, std::uint64_t seed,
                       std::size_t points, std::string* diagnosis) {
    claim_context ctx = make_context(claim, algebra, claim.kind, conv, tail);
    claim_verdict verdict = classify(ctx);
    auto ids = kind_identities(claim.kind, tail);

    // Point coordinates live on the claim's own parameter table.
    rng gen(rng::derive(seed, "dual/" + claim.id + "/" + convention_name(conv) + "/" +
                                  rb_tail_name(tail)));
    std::vector<bool> merged_assigned(ctx.table->size(), false);
    for (std::size_t v : ctx.param_vars) merged_assigned[v] = true;

    for (std::size_t k = 0; k < points; ++k) {
        std::vector<rational> point(claim.params->size());
        for (auto& value : point) value = gen.small_rational();

        bool numeric_ok = numeric_model(claim, algebra, conv, point).identities_hold(ids);

        bool predicted_ok;
        switch (verdict.st) {
            case claim_verdict::status::confirmed: predicted_ok = true; break;
            case claim_verdict::status::refuted: predicted_ok = false; break;
            default: {
                // Conditional: the residuals vanish exactly on the condition variety.
                std::vector<rational> merged_point(ctx.table->size(), rational(0));
                for (std::size_t p = 0; p < claim.params->size(); ++p)
                    merged_point[algebra.dim * algebra.dim + p] = point[p];
                predicted_ok = true;
                for (const auto& c : verdict.conditions)
                    if (!c.evaluated(merged_point, merged_assigned).is_zero()) {
                        predicted_ok = false;
                        break;
                    }
                break;
            }
        }
        if (numeric_ok != predicted_ok) {
            if (diagnosis) {
                std::ostringstream os;
                os << claim.id << " (" << convention_name(conv) << ", " << rb_tail_name(tail)
                   << "): symbolic verdict " << verdict_name(verdict.st) << " predicts "
                   << (predicted_ok ? "holds" : "fails") << " but numeric evaluation says "
                   << (numeric_ok ? "holds" : "fails") << " at point #" << k;
                *diagnosis = os.str();
            }
            return false;
        }
    }
    return true;
}

namespace {

std::string render_matrix_point(const std::vector<std::vector<rational>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

bool claim_covers_point(const family_claim& claim, const dendriform_algebra& algebra,
                        const std::vector<std::vector<rational>>& matrix_point,
                        const std::vector<rational>& algebra_param_values, std::uint64_t seed,
                        bool* nonlinear_skipped) {
    const std::size_t n = algebra.dim;
    const std::size_t declared = claim.declared_params.size();
    // Fix the algebra parameters inside the claim entries first.
    std::map<std::size_t, rational> algebra_point;
    for (std::size_t p = 0; p < algebra.params->size(); ++p)
        algebra_point.emplace(claim.params->index_of(algebra.params->name(p)),
                              algebra_param_values[p]);
    std::vector<std::size_t> declared_vars(declared);
    for (std::size_t p = 0; p < declared; ++p)
        declared_vars[p] = claim.params->index_of(claim.declared_params[p]);

    std::vector<polynomial> entries;
    entries.reserve(n * n);
    bool affine = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            polynomial e = claim.matrix[i][j].partially_evaluated(algebra_point);
            if (e.total_degree() > 1) affine = false;
            entries.push_back(std::move(e));
        }

    if (!affine) {
        // Nonlinear family: fall back to random membership sampling.
        if (nonlinear_skipped) *nonlinear_skipped = true;
        rng gen(rng::derive(seed, "nonlinear-membership/" + claim.id));
        for (std::size_t attempt = 0; attempt < 200; ++attempt) {
            std::vector<rational> point(claim.params->size(), rational(0));
            std::vector<bool> assigned(claim.params->size(), true);
            for (const auto& [v, value] : algebra_point) point[v] = value;
            for (std::size_t v : declared_vars) point[v] = gen.small_rational();
            bool match = true;
            for (std::size_t i = 0; i < n && match; ++i)
                for (std::size_t j = 0; j < n && match; ++j)
                    if (claim.matrix[i][j].evaluated(point, assigned) != matrix_point[i][j])
                        match = false;
            for (const auto& r : claim.restrictions) {
                if (!match) break;
                if (r.evaluated(point, assigned).is_zero()) match = false;
            }
            if (match) return true;
        }
        return false;
    }

    // Solve "entries == matrix_point" as an affine system in the declared
    // parameters by exact Gaussian elimination.
    std::vector<std::vector<rational>> rows;  // declared coefficients | rhs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const polynomial& e = entries[i * n + j];
            std::vector<rational> row(declared + 1, rational(0));
            rational constant(0);
            for (const auto& [m, c] : e.terms()) {
                if (m.is_constant()) {
                    constant = c;
                    continue;
                }
                for (std::size_t p = 0; p < declared; ++p)
                    if (m.degree_in(declared_vars[p]) == 1) row[p] = c;
            }
            row[declared] = matrix_point[i][j] - constant;
            rows.push_back(std::move(row));
        }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < declared && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        rational inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            rational f = rows[r][col];
            for (std::size_t c2 = 0; c2 <= declared; ++c2) rows[r][c2] -= f * rows[rank][c2];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][declared].is_zero()) return false;  // inconsistent

    // Express pivot parameters as affine polynomials in the free parameters,
    // then demand every restriction stays a nonzero polynomial there.
    std::map<std::size_t, polynomial> solution = [&] {
        std::map<std::size_t, polynomial> s;
        for (const auto& [v, value] : algebra_point)
            s.emplace(v, polynomial::constant(claim.params, value));
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t col = pivot_col[r];
            polynomial value = polynomial::constant(claim.params, rows[r][declared]);
            for (std::size_t c2 = 0; c2 < declared; ++c2) {
                if (c2 == col || rows[r][c2].is_zero()) continue;
                value -= rows[r][c2] * polynomial::variable(claim.params, declared_vars[c2]);
            }
            s.emplace(declared_vars[col], std::move(value));
        }
        return s;
    }();
    for (const auto& r : claim.restrictions)
        if (r.substituted(solution).is_zero()) return false;
    return true;
}

completeness_summary completeness_check(const dendriform_algebra& algebra,
                                        const operator_kind& kind,
                                        const std::vector<const family_claim*>& claims,
                                        matrix_convention conv, rb_tail tail, std::uint64_t seed,
                                        std::size_t samples_per_component,
                                        const solve_limits& limits) {
    completeness_summary summary;
    summary.algebra_id = algebra.id;
    summary.kind = kind;
    summary.convention = conv;
    summary.tail = tail;

    operator_system sys = build_system(algebra, kind, conv, tail);
    std::vector<polynomial> eqs = sys.nonzero_equations();
    if (eqs.empty()) eqs.push_back(polynomial(sys.table));  // zero system: everything solves
    auto components = solve_components(eqs, sys.unknown_vars(), sys.parameter_vars(), limits);
    summary.component_count = components.size();

    const std::size_t n = algebra.dim;
    std::vector<std::size_t> algebra_param_vars(algebra.params->size());
    for (std::size_t p = 0; p < algebra.params->size(); ++p)
        algebra_param_vars[p] = sys.table->index_of(algebra.params->name(p));

    std::string context_base = "completeness/" + algebra.id + "/" + kind.name() + "/" +
                               kind.weight.str() + "/" + convention_name(conv) + "/" +
                               rb_tail_name(tail);
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        const auto& comp = components[ci];
        if (comp.fully_solved) summary.solved_components++;
        std::vector<std::vector<rational>> points;
        try {
            points = component_sample(comp,
                                      rng::derive(seed, context_base + "/component/" +
                                                            std::to_string(ci)),
                                      samples_per_component);
        } catch (const rejection_exhausted_error&) {
            summary.unsampled_components++;
            continue;
        }
        for (const auto& point : points) {
            summary.sampled_points++;
            std::vector<std::vector<rational>> m(n, std::vector<rational>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m[i][j] = point[sys.unknown_index[i][j]];
            // Claim matrices are stated in the row convention.  A solution of
            // the column-convention system represents the same operator as its
            // transpose does under the row convention, so membership tests the
            // transposed matrix; the sweep then audits the same families under
            // either engine.
            if (conv == matrix_convention::column) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j) std::swap(m[i][j], m[j][i]);
            }
            std::vector<rational> algebra_values;
            algebra_values.reserve(algebra_param_vars.size());
            for (std::size_t v : algebra_param_vars) algebra_values.push_back(point[v]);
            bool covered = false;
            for (const auto* claim : claims)
                if (claim_covers_point(*claim, algebra, m, algebra_values, seed)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                summary.missed_points++;
                if (!summary.missed_example) {
                    std::string example = render_matrix_point(m);
                    for (std::size_t p = 0; p < algebra_param_vars.size(); ++p)
                        example += (p ? ", " : " with ") + algebra.params->name(p) + " = " +
                                   algebra_values[p].str();
                    summary.missed_example = example;
                }
            }
        }
    }

    for (const auto* claim : claims) {
        claim_coverage cov;
        cov.claim_id = claim->id;
        cov.generically_satisfies =
            verify_claim(*claim, algebra, conv, tail).st == claim_verdict::status::confirmed;
        // Flag nonlinear families once (kept visible in reports).
        for (const auto& row : claim->matrix)
            for (const auto& e : row)
                if (e.total_degree() > 1) cov.nonlinear_skipped = true;
        summary.claims.push_back(std::move(cov));
    }
    return summary;
}

}  // namespace dend
