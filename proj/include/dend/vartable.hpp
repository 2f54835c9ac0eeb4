#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dend {

/// Role of a variable in a polynomial system.
enum class var_kind { unknown, parameter };

/// Immutable, shared registry of variable names and kinds.  Polynomials hold a
/// pointer to their table; two tables are compatible when they are the same
/// object or structurally equal.
class var_table {
  public:
    using ptr = std::shared_ptr<const var_table>;

    /// Builds a table; names must be unique identifiers ([A-Za-z_][A-Za-z0-9_]*).
    static ptr make(std::vector<std::pair<std::string, var_kind>> vars);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    var_kind kind(std::size_t i) const { return kinds_[i]; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Like find, but throws unknown_variable_error.
    std::size_t index_of(std::string_view name) const;

    std::vector<std::size_t> indices_of_kind(var_kind k) const;

    /// Structural equality: same names, same kinds, same order.
    friend bool operator==(const var_table& a, const var_table& b) {
        return a.names_ == b.names_ && a.kinds_ == b.kinds_;
    }
    friend bool operator!=(const var_table& a, const var_table& b) { return !(a == b); }

    /// New table with extra variables appended; extra names must be fresh.
    ptr extended(std::vector<std::pair<std::string, var_kind>> extra) const;

    /// A name of the form "_<stem><n>" not present in the table.
    std::string fresh_aux_name(const std::string& stem) const;

    /// True when the tables may be mixed in one expression.
    static bool compatible(const ptr& a, const ptr& b) {
        return a == b || (a && b && *a == *b);
    }

  private:
    var_table() = default;
    std::vector<std::string> names_;
    std::vector<var_kind> kinds_;
    std::unordered_map<std::string, std::size_t> index_;
};

using var_table_ptr = var_table::ptr;

/// True for [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view text);

}  // namespace dend
