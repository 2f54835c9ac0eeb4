#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dend/catalog.hpp"
#include "dend/operator_model.hpp"
#include "dend/solver.hpp"

namespace dend {

/// Outcome of substituting a claimed family into the defining system.
struct claim_verdict {
    enum class status { confirmed, conditional, refuted };

    status st = status::confirmed;
    /// Nonzero residuals in the claim parameters, system emission order.
    std::vector<std::pair<equation_label, polynomial>> residuals;
    /// For conditional: reduced Groebner basis generating the condition ideal.
    std::vector<polynomial> conditions;
    /// For refuted: a short human-readable witness (a constant residual, or a
    /// parameter point with a nonvanishing residual).
    std::optional<std::string> witness;
};

const char* verdict_name(claim_verdict::status s);

/// Substitutes the claim family into the system for (kind, convention, tail)
/// and classifies:
///   confirmed  -- every residual is identically zero;
///   refuted    -- the residual ideal is all of Q[params] (witnessed);
///   conditional-- otherwise, with the reduced basis as condition generators.
/// Restrictions never relax a confirmed verdict; they are reported alongside.
claim_verdict verify_claim(const family_claim& claim, const dendriform_algebra& algebra,
                           matrix_convention conv, rb_tail tail);

/// verify_claim against the same family but with the Rota-Baxter weight
/// replaced by target_weight (claim.kind must be rota_baxter).
claim_verdict weight_shift_check(const family_claim& claim, const dendriform_algebra& algebra,
                                 const rational& target_weight, matrix_convention conv,
                                 rb_tail tail);

/// Independent sample-based cross-check of verify_claim: draws parameter
/// points (biased toward small values), evaluates the un-normalized identity
/// residuals numerically, and compares with what the verdict predicts.
/// Returns false and fills `diagnosis` on the first disagreement.
bool dual_engine_agree(const family_claim& claim, const dendriform_algebra& algebra,
                       matrix_convention conv, rb_tail tail, std::uint64_t seed,
                       std::size_t points, std::string* diagnosis = nullptr);

/// Per-claim generic-point summary inside a completeness run.
struct claim_coverage {
    std::string claim_id;
    bool generically_satisfies = false;  // verify_claim confirmed
    bool nonlinear_skipped = false;      // membership fell back to sampling
};

/// Result of solving a full system and checking the solution set against the
/// published families.
struct completeness_summary {
    std::string algebra_id;
    operator_kind kind;
    matrix_convention convention = matrix_convention::row;
    rb_tail tail = rb_tail::standard;
    std::size_t component_count = 0;
    std::size_t solved_components = 0;   // components the split finished
    std::size_t sampled_points = 0;
    std::size_t missed_points = 0;       // sampled solutions no claim covers
    std::size_t unsampled_components = 0;
    std::vector<claim_coverage> claims;
    /// A printable example of a missed solution (matrix entries), if any.
    std::optional<std::string> missed_example;
};

/// Solves the system into components, samples each, and tests every sampled
/// operator for membership in at least one claimed family (matrix entries
/// solvable for the claim parameters with all restrictions nonvanishing).
completeness_summary completeness_check(const dendriform_algebra& algebra,
                                        const operator_kind& kind,
                                        const std::vector<const family_claim*>& claims,
                                        matrix_convention conv, rb_tail tail, std::uint64_t seed,
                                        std::size_t samples_per_component = 50,
                                        const solve_limits& limits = {});

/// True when the sampled operator matrix (plus algebra parameter values) lies
/// in the claimed family: the affine system "claim matrix = point" is solvable
/// for the claim parameters and the restrictions stay nonzero on its solution
/// space.  Nonlinear claims fall back to random membership sampling.
bool claim_covers_point(const family_claim& claim, const dendriform_algebra& algebra,
                        const std::vector<std::vector<rational>>& matrix_point,
                        const std::vector<rational>& algebra_param_values, std::uint64_t seed,
                        bool* nonlinear_skipped = nullptr);

}  // namespace dend
