#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dend/dendriform.hpp"
#include "dend/operator_model.hpp"

namespace dend {

/// A published classification row: a parametric family of matrices claimed to
/// be exactly the operators of the given kind on the given algebra, subject to
/// the listed nonvanishing restrictions.
struct family_claim {
    std::string id;
    std::string algebra_id;
    operator_kind kind;
    /// Claim parameters (declared in the catalog) followed by the algebra's
    /// own parameters; all of kind parameter.
    var_table_ptr params;
    std::vector<std::string> declared_params;  // claim-local names, catalog order
    std::vector<std::vector<polynomial>> matrix;  // dim x dim over `params`
    std::vector<polynomial> restrictions;         // asserted != 0
    std::string source;
};

struct catalog {
    std::vector<dendriform_algebra> algebras;
    std::vector<family_claim> claims;
    std::string sha256_hex;  // hash of the raw catalog bytes

    const dendriform_algebra* find_algebra(const std::string& id) const;
    std::vector<const family_claim*> claims_for(const std::string& algebra_id,
                                                const operator_kind& kind) const;
};

/// The twelve 2-dimensional algebras every complete catalog must carry.
extern const std::array<std::string_view, 12> builtin_algebra_ids;

/// Builtin ids absent from the catalog (ordered as in the manifest).
std::vector<std::string> missing_algebras(const catalog& cat);

/// Parses and validates catalog JSON; throws schema_error (with a JSON-pointer
/// style path), duplicate_id_error, or the polynomial parsing errors.
catalog load_catalog(const std::string& bytes);
catalog load_catalog_file(const std::string& path);

}  // namespace dend
