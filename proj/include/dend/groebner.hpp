#pragma once

#include <cstddef>
#include <vector>

#include "dend/polynomial.hpp"

namespace dend {

/// Remainder of full multivariate division of p by basis under ord: no
/// monomial of the result is divisible by any basis leading monomial.
/// Zero basis elements are not allowed; an empty basis returns p unchanged.
polynomial reduce_modulo(const polynomial& p, const std::vector<polynomial>& basis,
                         const monomial_order& ord);

/// S-polynomial of two nonzero polynomials (zero_polynomial_error otherwise).
polynomial s_polynomial(const polynomial& f, const polynomial& g, const monomial_order& ord);

/// Finitely generated ideal; generators are nonzero and share one table.
struct ideal {
    std::vector<polynomial> generators;
    monomial_order order;

    /// Keeps nonzero generators only; throws vartable_mismatch_error on mixed tables.
    ideal(std::vector<polynomial> gens, monomial_order ord);
};

struct buchberger_limits {
    std::size_t max_pairs = 100000;  // total S-pairs ever enqueued
};

/// Reduced Gröbner basis: monic, pairwise reduced, sorted ascending by leading
/// monomial.  Unique for a given ideal and order.
struct groebner_basis {
    std::vector<polynomial> basis;
    monomial_order order;

    bool is_trivial() const;  // basis == {1}
};

/// Buchberger with the coprime-leading-monomial criterion and normal (lowest
/// lcm degree) pair selection.  Throws resource_limit_error past the pair bound.
groebner_basis buchberger(const ideal& input, const buchberger_limits& limits = {});

/// p lies in the ideal with the given Groebner basis.
bool ideal_member(const polynomial& p, const groebner_basis& gb);

/// p lies in the radical of the ideal (tested with one auxiliary variable:
/// the saturated system 1 - t*p has no solution).
bool radical_member(const polynomial& p, const ideal& input, const buchberger_limits& limits = {});

}  // namespace dend
