#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dend/dendriform.hpp"
#include "dend/rational.hpp"

namespace dend {

/// Operator families under study.  The weight is meaningful for Rota-Baxter
/// only (zero elsewhere).
struct operator_kind {
    enum class family { rota_baxter, reynolds, nijenhuis, averaging };

    family fam = family::rota_baxter;
    rational weight;

    static operator_kind rota_baxter(rational w) { return {family::rota_baxter, std::move(w)}; }
    static operator_kind reynolds() { return {family::reynolds, rational(0)}; }
    static operator_kind nijenhuis() { return {family::nijenhuis, rational(0)}; }
    static operator_kind averaging() { return {family::averaging, rational(0)}; }

    bool has_weight() const { return fam == family::rota_baxter; }
    std::string name() const;         // "rota_baxter", "reynolds", ...
    std::string display_name() const; // "Rota-Baxter of weight 1", ...

    friend bool operator==(const operator_kind& a, const operator_kind& b) {
        return a.fam == b.fam && (!a.has_weight() || a.weight == b.weight);
    }
    friend bool operator!=(const operator_kind& a, const operator_kind& b) { return !(a == b); }
};

/// How a matrix acts on coordinate columns: row convention reads P(e_i) as row
/// i of the matrix, column convention as column i (the transpose action).
enum class matrix_convention { row, column };

/// Shape of the weight term in the |>-identity of a weighted Rota-Baxter
/// operator: `standard` uses lambda * (u |> v), `paper` repeats lambda * (u <| v)
/// in both identities.  The two coincide at weight 0.
enum class rb_tail { standard, paper };

const char* convention_name(matrix_convention c);
const char* rb_tail_name(rb_tail t);

/// One side of a defining identity is a sum of terms
///   coeff * P^depth( L op R ),  L, R in {u, P(u), v, P(v)}.
enum class op_arg { u, pu, v, pv };

struct identity_term {
    rational coeff;
    unsigned p_depth = 0;  // how many applications of P wrap the product
    op_arg left = op_arg::u;
    dend_product op = dend_product::prec;
    op_arg right = op_arg::v;
};

struct identity_descriptor {
    std::string tag;  // equation label stem: "prec", "succ", "prec1", ...
    std::vector<identity_term> lhs;
    std::vector<identity_term> rhs;
};

/// The defining identities of the family, one per labelled equation:
///  - Rota-Baxter(lambda): P(u) op P(v) = P(P(u) op v + u op P(v) + lambda * u op' v)
///    where op' is op for `standard` tails and <| for `paper` tails.
///  - Reynolds: P(u) op P(v) = P(u op P(v) + P(u) op v - P(u) op P(v))
///  - Nijenhuis: P(u) op P(v) = P(P(u) op v + u op P(v) - P(u op v))
///  - Averaging: P(u) op P(v) = P(u op P(v)) = P(P(u) op v) (two equations per op)
std::vector<identity_descriptor> kind_identities(const operator_kind& kind, rb_tail tail);

/// Human-readable rendering, e.g. "P(u) <| P(v) = P(P(u) <| v + u <| P(v))".
std::string render_identity(const identity_descriptor& id);

/// P applied to a coefficient vector.  Row convention: P(e_i) = sum_j m[i][j] e_j.
coeff_vector apply_matrix(const std::vector<std::vector<polynomial>>& m, matrix_convention conv,
                          const coeff_vector& x);

struct equation_label {
    std::string identity;  // descriptor tag
    std::size_t i = 0, j = 0;   // basis pair, 1-based
    std::size_t coordinate = 0; // 1-based
    std::string str() const;
};

/// The polynomial system expressing "the matrix is an operator of this kind on
/// this algebra".  Equations keep their labels and include the zero ones, so a
/// system on a 2-dimensional algebra always carries dim^2 * dim entries per
/// identity (16 for single-identity-per-product families, 32 for averaging).
struct operator_system {
    std::string algebra_id;
    operator_kind kind;
    matrix_convention convention = matrix_convention::row;
    rb_tail tail = rb_tail::standard;
    var_table_ptr table;  // entry unknowns followed by the algebra parameters
    std::vector<std::vector<std::size_t>> unknown_index;  // [i][j] -> var index
    std::vector<std::pair<equation_label, polynomial>> equations;

    std::vector<polynomial> nonzero_equations() const;
    std::vector<std::size_t> unknown_vars() const;
    std::vector<std::size_t> parameter_vars() const;
};

/// Builds the system with fresh unknowns a11..ann (row-major) followed by the
/// algebra's parameters.  Equations are content-normalized with positive
/// leading coefficient (GREVLEX).
operator_system build_system(const dendriform_algebra& algebra, const operator_kind& kind,
                             matrix_convention conv, rb_tail tail);

/// Same construction over a caller-supplied table; unknown_index[i][j] names
/// the variable standing for entry (i, j) of the matrix.
operator_system build_system_over(const dendriform_algebra& algebra, const operator_kind& kind,
                                  matrix_convention conv, rb_tail tail, var_table_ptr table,
                                  std::vector<std::vector<std::size_t>> unknown_index);

}  // namespace dend
