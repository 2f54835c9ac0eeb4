#include "dend/vartable.hpp"

#include <cctype>
#include <stdexcept>

#include "dend/errors.hpp"

namespace dend {

bool is_identifier(std::string_view text) {
    if (text.empty()) return false;
    auto head = static_cast<unsigned char>(text[0]);
    if (!std::isalpha(head) && text[0] != '_') return false;
    for (char c : text.substr(1)) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && c != '_') return false;
    }
    return true;
}

var_table::ptr var_table::make(std::vector<std::pair<std::string, var_kind>> vars) {
    auto t = std::shared_ptr<var_table>(new var_table());
    t->names_.reserve(vars.size());
    t->kinds_.reserve(vars.size());
    for (auto& [name, kind] : vars) {
        if (!is_identifier(name))
            throw std::invalid_argument("var_table: bad variable name '" + name + "'");
        if (t->index_.count(name))
            throw std::invalid_argument("var_table: duplicate variable name '" + name + "'");
        t->index_.emplace(name, t->names_.size());
        t->names_.push_back(std::move(name));
        t->kinds_.push_back(kind);
    }
    return t;
}

std::optional<std::size_t> var_table::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t var_table::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw unknown_variable_error(std::string(name));
    return *i;
}

std::vector<std::size_t> var_table::indices_of_kind(var_kind k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kinds_.size(); ++i)
        if (kinds_[i] == k) out.push_back(i);
    return out;
}

var_table::ptr var_table::extended(std::vector<std::pair<std::string, var_kind>> extra) const {
    std::vector<std::pair<std::string, var_kind>> all;
    all.reserve(size() + extra.size());
    for (std::size_t i = 0; i < size(); ++i) all.emplace_back(names_[i], kinds_[i]);
    for (auto& e : extra) all.push_back(std::move(e));
    return make(std::move(all));
}

std::string var_table::fresh_aux_name(const std::string& stem) const {
    for (std::size_t n = 0;; ++n) {
        std::string candidate = "_" + stem + std::to_string(n);
        if (!index_.count(candidate)) return candidate;
    }
}

}  // namespace dend
