#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dend/polynomial.hpp"

namespace dend {

/// The two dendriform products.
enum class dend_product { prec, succ };

const char* product_symbol(dend_product p);  // "prec" / "succ"

/// Element of the algebra written in the basis: coefficient vector of length
/// dim, entries polynomial in the governing table.
using coeff_vector = std::vector<polynomial>;

/// Finite-dimensional dendriform algebra given by structure constants, which
/// may be polynomial in the algebra's own parameters (e.g. a one-parameter
/// family).  Basis indices are 1-based in all reporting.
struct dendriform_algebra {
    std::string id;
    std::size_t dim = 0;
    var_table_ptr params;  // parameter-kind variables only (may be empty)
    /// table(prec)[i][j] = coefficients of e_{i+1} <| e_{j+1}; same for succ.
    std::vector<std::vector<coeff_vector>> prec;
    std::vector<std::vector<coeff_vector>> succ;

    const std::vector<std::vector<coeff_vector>>& table_of(dend_product p) const {
        return p == dend_product::prec ? prec : succ;
    }
};

/// Structure constants of an algebra re-expressed over a host table that
/// contains the algebra's parameters by name (plus other variables, typically
/// operator unknowns).
struct algebra_view {
    const dendriform_algebra* algebra = nullptr;
    var_table_ptr host;
    std::vector<std::vector<coeff_vector>> prec;
    std::vector<std::vector<coeff_vector>> succ;

    const std::vector<std::vector<coeff_vector>>& table_of(dend_product p) const {
        return p == dend_product::prec ? prec : succ;
    }
    coeff_vector basis_vector(std::size_t i) const;  // e_{i+1}, 0-based argument
    coeff_vector zero_vector() const;
};

/// Builds the view; every algebra parameter must resolve in host by name.
algebra_view view_in(const dendriform_algebra& algebra, var_table_ptr host);

/// Bilinear extension of the chosen product to coefficient vectors over the
/// view's host table.
coeff_vector bilinear_apply(const algebra_view& view, dend_product product,
                            const coeff_vector& x, const coeff_vector& y);

enum class axiom_id { left_nesting, middle_swap, right_nesting, sum_associativity };

const char* axiom_name(axiom_id a);

/// A failed instance of one defining axiom on basis elements: the residual of
/// coordinate `coordinate` at the triple (i, j, k); indices 1-based.
struct axiom_violation {
    axiom_id identity;
    std::array<std::size_t, 3> triple;
    std::size_t coordinate;
    polynomial residual;
};

/// Checks the three dendriform axioms on all basis triples:
///   (u <| v) <| w = u <| (v <| w + v |> w)
///   (u |> v) <| w = u |> (v <| w)
///   u |> (v |> w) = (u <| v + u |> v) |> w
/// Residuals are polynomial identities in the algebra parameters.
std::vector<axiom_violation> check_axioms(const dendriform_algebra& algebra);

/// Checks that the sum product u*v = u <| v + u |> v is associative (implied
/// by the axioms; kept as an independent cross-check).
std::vector<axiom_violation> sum_associativity_check(const dendriform_algebra& algebra);

}  // namespace dend
