#include "dend/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "dend/errors.hpp"
#include "dend/parse.hpp"
#include "dend/sha256.hpp"

namespace dend {

using nlohmann::json;

const std::array<std::string_view, 12> builtin_algebra_ids = {
    "Dend2_1", "Dend2_2", "Dend2_3", "Dend2_4",  "Dend2_5",  "Dend2_6",
    "Dend2_7", "Dend2_8", "Dend2_9", "Dend2_10", "Dend2_11", "Dend2_12"};

const dendriform_algebra* catalog::find_algebra(const std::string& id) const {
    for (const auto& a : algebras)
        if (a.id == id) return &a;
    return nullptr;
}

std::vector<const family_claim*> catalog::claims_for(const std::string& algebra_id,
                                                     const operator_kind& kind) const {
    std::vector<const family_claim*> out;
    for (const auto& c : claims)
        if (c.algebra_id == algebra_id && c.kind == kind) out.push_back(&c);
    return out;
}

std::vector<std::string> missing_algebras(const catalog& cat) {
    std::vector<std::string> out;
    for (auto id : builtin_algebra_ids)
        if (!cat.find_algebra(std::string(id))) out.emplace_back(id);
    return out;
}

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& path) {
    throw schema_error(what, path);
}

const json& expect(const json& node, const char* key, const std::string& path) {
    auto it = node.find(key);
    if (it == node.end()) fail(std::string("missing key '") + key + "'", path);
    return *it;
}

std::string expect_string(const json& node, const char* key, const std::string& path) {
    const json& v = expect(node, key, path);
    if (!v.is_string()) fail(std::string("'") + key + "' must be a string", path);
    return v.get<std::string>();
}

std::size_t expect_index(const json& node, const char* key, std::size_t limit,
                         const std::string& path) {
    const json& v = expect(node, key, path);
    if (!v.is_number_unsigned()) fail(std::string("'") + key + "' must be a positive integer", path);
    auto i = v.get<std::size_t>();
    if (i < 1 || i > limit) fail(std::string("'") + key + "' out of range", path);
    return i;
}

polynomial parse_entry(const json& v, const var_table_ptr& table, const std::string& path) {
    if (!v.is_string()) fail("polynomial entries must be strings", path);
    try {
        return parse_polynomial(v.get<std::string>(), table);
    } catch (const syntax_error& e) {
        fail(std::string("bad polynomial: ") + e.what(), path);
    } catch (const unknown_variable_error& e) {
        fail(std::string("bad polynomial: ") + e.what(), path);
    } catch (const negative_exponent_error& e) {
        fail(std::string("bad polynomial: ") + e.what(), path);
    }
}

std::vector<std::string> param_names(const json& node, const std::string& path) {
    std::vector<std::string> names;
    auto it = node.find("params");
    if (it == node.end()) return names;
    if (!it->is_array()) fail("'params' must be an array of strings", path);
    std::set<std::string> seen;
    for (std::size_t k = 0; k < it->size(); ++k) {
        const json& v = (*it)[k];
        std::string sub = path + "/params/" + std::to_string(k);
        if (!v.is_string()) fail("parameter names must be strings", sub);
        std::string name = v.get<std::string>();
        if (!is_identifier(name) || name[0] == '_')
            fail("parameter name must be an identifier not starting with '_'", sub);
        if (!seen.insert(name).second) fail("duplicate parameter name '" + name + "'", sub);
        names.push_back(std::move(name));
    }
    return names;
}

dendriform_algebra load_algebra(const json& node, const std::string& path) {
    if (!node.is_object()) fail("algebra must be an object", path);
    dendriform_algebra alg;
    alg.id = expect_string(node, "id", path);
    if (!is_identifier(alg.id)) fail("algebra id must be an identifier", path);
    const json& dim = expect(node, "dim", path);
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() < 1)
        fail("'dim' must be a positive integer", path);
    alg.dim = dim.get<std::size_t>();

    std::vector<std::pair<std::string, var_kind>> vars;
    for (auto& name : param_names(node, path)) vars.emplace_back(name, var_kind::parameter);
    alg.params = var_table::make(std::move(vars));

    auto load_products = [&](const char* key) {
        std::vector<std::vector<coeff_vector>> table(
            alg.dim, std::vector<coeff_vector>(
                         alg.dim, coeff_vector(alg.dim, polynomial(alg.params))));
        auto it = node.find(key);
        if (it == node.end()) return table;  // all products zero
        std::string kpath = path + "/" + key;
        if (!it->is_array()) fail("product table must be an array", kpath);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t k = 0; k < it->size(); ++k) {
            const json& cell = (*it)[k];
            std::string cpath = kpath + "/" + std::to_string(k);
            if (!cell.is_object()) fail("product entry must be an object", cpath);
            std::size_t i = expect_index(cell, "i", alg.dim, cpath);
            std::size_t j = expect_index(cell, "j", alg.dim, cpath);
            if (!seen.emplace(i, j).second) fail("duplicate product entry", cpath);
            const json& coeffs = expect(cell, "coeffs", cpath);
            if (!coeffs.is_array() || coeffs.size() != alg.dim)
                fail("'coeffs' must be an array of dim polynomials", cpath);
            for (std::size_t c = 0; c < alg.dim; ++c)
                table[i - 1][j - 1][c] =
                    parse_entry(coeffs[c], alg.params, cpath + "/coeffs/" + std::to_string(c));
        }
        return table;
    };
    alg.prec = load_products("prec");
    alg.succ = load_products("succ");
    return alg;
}

operator_kind load_kind(const json& node, const std::string& path) {
    std::string kind = expect_string(node, "kind", path);
    if (kind == "rota_baxter") {
        std::string w = expect_string(node, "weight", path);
        try {
            return operator_kind::rota_baxter(rational::from_string(w));
        } catch (const std::invalid_argument& e) {
            fail(e.what(), path + "/weight");
        }
    }
    if (node.contains("weight")) fail("'weight' is only valid for rota_baxter", path);
    if (kind == "reynolds") return operator_kind::reynolds();
    if (kind == "nijenhuis") return operator_kind::nijenhuis();
    if (kind == "averaging") return operator_kind::averaging();
    fail("unknown operator kind '" + kind + "'", path + "/kind");
}

family_claim load_claim(const json& node, const catalog& cat, const std::string& path) {
    if (!node.is_object()) fail("claim must be an object", path);
    family_claim claim;
    claim.id = expect_string(node, "id", path);
    claim.algebra_id = expect_string(node, "algebra", path);
    const dendriform_algebra* alg = cat.find_algebra(claim.algebra_id);
    if (!alg) fail("claim references unknown algebra '" + claim.algebra_id + "'", path);
    claim.kind = load_kind(node, path);
    claim.source = node.contains("source") ? expect_string(node, "source", path) : "";

    claim.declared_params = param_names(node, path);
    std::vector<std::pair<std::string, var_kind>> vars;
    for (const auto& name : claim.declared_params) {
        if (alg->params->find(name))
            fail("claim parameter '" + name + "' shadows an algebra parameter", path);
        vars.emplace_back(name, var_kind::parameter);
    }
    for (std::size_t p = 0; p < alg->params->size(); ++p)
        vars.emplace_back(alg->params->name(p), var_kind::parameter);
    claim.params = var_table::make(std::move(vars));

    const json& matrix = expect(node, "matrix", path);
    if (!matrix.is_array() || matrix.size() != alg->dim)
        fail("'matrix' must be a dim x dim array", path);
    for (std::size_t i = 0; i < alg->dim; ++i) {
        const json& row = matrix[i];
        std::string rpath = path + "/matrix/" + std::to_string(i);
        if (!row.is_array() || row.size() != alg->dim)
            fail("'matrix' must be a dim x dim array", rpath);
        claim.matrix.emplace_back();
        for (std::size_t j = 0; j < alg->dim; ++j)
            claim.matrix.back().push_back(
                parse_entry(row[j], claim.params, rpath + "/" + std::to_string(j)));
    }

    if (auto it = node.find("restrictions"); it != node.end()) {
        if (!it->is_array()) fail("'restrictions' must be an array", path);
        for (std::size_t k = 0; k < it->size(); ++k) {
            std::string rpath = path + "/restrictions/" + std::to_string(k);
            polynomial r = parse_entry((*it)[k], claim.params, rpath);
            if (r.is_zero()) fail("restriction is identically zero", rpath);
            claim.restrictions.push_back(std::move(r));
        }
    }
    return claim;
}

}  // namespace

catalog load_catalog(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        fail(e.what(), "/");
    }
    if (!doc.is_object()) fail("catalog must be a JSON object", "/");

    catalog cat;
    cat.sha256_hex = sha256_hex(bytes);

    const json& algebras = expect(doc, "algebras", "/");
    if (!algebras.is_array()) fail("'algebras' must be an array", "/algebras");
    std::set<std::string> algebra_ids;
    for (std::size_t k = 0; k < algebras.size(); ++k) {
        dendriform_algebra alg = load_algebra(algebras[k], "/algebras/" + std::to_string(k));
        if (!algebra_ids.insert(alg.id).second) throw duplicate_id_error(alg.id);
        cat.algebras.push_back(std::move(alg));
    }

    if (auto it = doc.find("claims"); it != doc.end()) {
        if (!it->is_array()) fail("'claims' must be an array", "/claims");
        std::set<std::string> claim_ids;
        for (std::size_t k = 0; k < it->size(); ++k) {
            family_claim claim = load_claim((*it)[k], cat, "/claims/" + std::to_string(k));
            if (!claim_ids.insert(claim.id).second) throw duplicate_id_error(claim.id);
            cat.claims.push_back(std::move(claim));
        }
    }
    return cat;
}

catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open catalog file '" + path + "'", "/");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_catalog(buffer.str());
}

}  // namespace dend
