#pragma once

#include <string_view>

#include "dend/polynomial.hpp"

namespace dend {

/// Parses polynomial text over the given table.
///
/// Grammar (whitespace allowed between tokens):
///   expr     := [sign] term { sign term }
///   term     := factor { '*' factor }
///   factor   := base [ '^' nat ]
///   base     := number | identifier | '(' expr ')'
///   number   := nat [ '/' nat ]        (a positive denominator)
///   sign     := '+' | '-'
///
/// Errors: syntax_error (with byte position), unknown_variable_error,
/// negative_exponent_error, exponent_limit_error.
polynomial parse_polynomial(std::string_view text, const var_table_ptr& table);

}  // namespace dend
