#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dend {

/// A variable name that is not present in the governing var_table.
struct unknown_variable_error : std::runtime_error {
    std::string name;
    explicit unknown_variable_error(std::string n)
        : std::runtime_error("unknown variable: " + n), name(std::move(n)) {}
};

/// Malformed polynomial text; position is a 0-based byte offset into the input.
struct syntax_error : std::runtime_error {
    std::size_t position;
    syntax_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Exponent after '^' was negative.
struct negative_exponent_error : std::runtime_error {
    std::size_t position;
    explicit negative_exponent_error(std::size_t pos)
        : std::runtime_error("negative exponent (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// An exponent exceeded the 2^16 bound.
struct exponent_limit_error : std::runtime_error {
    exponent_limit_error() : std::runtime_error("exponent exceeds 2^16 bound") {}
};

/// Two values that must share a var_table do not.
struct vartable_mismatch_error : std::runtime_error {
    vartable_mismatch_error() : std::runtime_error("operands use different variable tables") {}
};

/// poly_eval was given a point that leaves an occurring variable unassigned.
struct missing_assignment_error : std::runtime_error {
    std::string name;
    explicit missing_assignment_error(std::string n)
        : std::runtime_error("missing assignment for variable: " + n), name(std::move(n)) {}
};

/// A zero polynomial where a nonzero one is required (leading-term access, S-polynomials).
struct zero_polynomial_error : std::runtime_error {
    zero_polynomial_error() : std::runtime_error("zero polynomial not allowed here") {}
};

/// Vector/matrix shapes disagree with the algebra dimension.
struct dimension_mismatch_error : std::runtime_error {
    explicit dimension_mismatch_error(const std::string& what)
        : std::runtime_error("dimension mismatch: " + what) {}
};

/// A configurable computation bound (pair queue, split depth) was exceeded.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error("resource limit exceeded: " + what) {}
};

/// component_sample gave up after the rejection budget.
struct rejection_exhausted_error : std::runtime_error {
    explicit rejection_exhausted_error(const std::string& what)
        : std::runtime_error("sampling rejection budget exhausted: " + what) {}
};

/// Catalog document violates the schema; path locates the offending node.
struct schema_error : std::runtime_error {
    std::string path;
    schema_error(const std::string& what, std::string p)
        : std::runtime_error("schema error at " + p + ": " + what), path(std::move(p)) {}
};

/// Duplicate algebra or claim identifier in a catalog document.
struct duplicate_id_error : std::runtime_error {
    std::string id;
    explicit duplicate_id_error(std::string i)
        : std::runtime_error("duplicate id: " + i), id(std::move(i)) {}
};

/// A claim paired with an algebra whose id it does not reference.
struct algebra_mismatch_error : std::runtime_error {
    algebra_mismatch_error(const std::string& claim_alg, const std::string& alg)
        : std::runtime_error("claim targets algebra " + claim_alg + ", got " + alg) {}
};

}  // namespace dend
