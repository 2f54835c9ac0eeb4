#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dend/catalog.hpp"
#include "dend/verify.hpp"

namespace dend {

inline constexpr const char* tool_version = "dend 1.0.0";

struct verify_options {
    std::vector<matrix_convention> conventions = {matrix_convention::row};
    std::vector<rb_tail> tails = {rb_tail::standard};
    std::uint64_t seed = 0;
    std::size_t samples_per_component = 50;
    bool run_completeness = true;
    bool run_weight_shift = true;
    /// Algebra ids to restrict to (empty = all in catalog order).
    std::vector<std::string> only_algebras;
};

struct verdict_entry {
    std::string claim_id;
    std::string algebra_id;
    operator_kind kind;
    matrix_convention convention = matrix_convention::row;
    rb_tail tail = rb_tail::standard;
    std::string source;
    std::vector<std::string> matrix_text;       // row-major entries as written
    std::vector<std::string> restrictions_text;
    claim_verdict verdict;
};

struct weight_shift_entry {
    std::string claim_id;
    matrix_convention convention = matrix_convention::row;
    rb_tail tail = rb_tail::standard;
    rational from_weight, to_weight;
    claim_verdict verdict;
};

struct verification_report {
    std::string catalog_sha256;
    std::uint64_t seed = 0;
    std::string version = tool_version;
    std::vector<std::string> missing;  // builtin algebras absent from the catalog
    std::vector<verdict_entry> verdicts;
    std::vector<weight_shift_entry> weight_shift;
    std::vector<completeness_summary> completeness;

    bool has_refuted() const;
    std::size_t total_missed_points() const;
};

/// Folds the full sweep: verdict per (claim x convention x applicable tail),
/// cross-weight audits for the Rota-Baxter claims, and completeness per
/// (algebra x family x convention x applicable tail).  Deterministic for a
/// fixed catalog, options and seed.
verification_report run_verification(const catalog& cat, const verify_options& opts);

/// Tails a claim or family is actually sensitive to: both tails only matter
/// for Rota-Baxter of nonzero weight, everything else collapses to standard.
std::vector<rb_tail> applicable_tails(const operator_kind& kind,
                                      const std::vector<rb_tail>& requested);

/// Machine artifact; key-sorted, 2-space indented, newline-terminated -- byte
/// identical across runs with equal inputs.
std::string report_json(const verification_report& report);

/// Human-readable mirror of the classification tables with verdict columns.
std::string report_markdown(const verification_report& report);

/// Same rendering, fed from report_json bytes (the re-render path); throws
/// schema_error when the document does not look like a report.
std::string report_markdown_from_json(const std::string& bytes);

}  // namespace dend
