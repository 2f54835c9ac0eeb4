#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dend/groebner.hpp"
#include "dend/polynomial.hpp"

namespace dend {

/// One branch of the solution set of a polynomial system, presented as explicit
/// substitutions for solved unknowns plus implicit residual equations, guarded
/// by inequations (!= 0 side conditions) accumulated along the case split.
struct solution_component {
    var_table_ptr table;
    /// var index -> value over the remaining variables; sorted by index.
    std::vector<std::pair<std::size_t, polynomial>> substitutions;
    /// Constraints that stay implicit: triangular definitions c*x + r with c
    /// asserted nonzero, and (for leaves the split could not finish) the
    /// reduced Groebner basis of what remained.
    std::vector<polynomial> residual_equations;
    std::vector<polynomial> inequations;
    /// Unconstrained variables (unknowns and parameters), ascending.
    std::vector<std::size_t> free_variables;
    /// False when the split hit the depth bound or could not isolate a variable.
    bool fully_solved = true;
};

struct solve_limits {
    std::size_t max_depth = 24;
    buchberger_limits gb;
};

/// Decomposes V(system) into components by branching on coefficients of
/// variables that appear linearly, falling back to var = 0 / var != 0 splits.
/// Inconsistent branches are pruned with saturated Groebner checks; branches
/// whose closure already satisfies the whole system get their inequations
/// dropped; components contained in other components are removed.
/// Unknowns are eligible for substitution, parameters never are.
std::vector<solution_component> solve_components(const std::vector<polynomial>& system,
                                                 const std::vector<std::size_t>& unknowns,
                                                 const std::vector<std::size_t>& parameters,
                                                 const solve_limits& limits = {});

/// Draws `count` rational points on the component: free variables get small
/// random rationals, constrained variables are solved from the residuals, and
/// draws violating an inequation are rejected.  Points are full assignments
/// indexed by variable.  Throws rejection_exhausted_error when the budget
/// (200 * count + 1000 attempts) runs out.
std::vector<std::vector<rational>> component_sample(const solution_component& comp,
                                                    std::uint64_t seed, std::size_t count);

/// Exact polynomial quotient p / d, or nullopt when d does not divide p.
std::optional<polynomial> divide_exact(const polynomial& p, const polynomial& d);

/// Deterministic total order on polynomials (term count, then termwise).
int cmp_polynomial(const polynomial& a, const polynomial& b);

}  // namespace dend
