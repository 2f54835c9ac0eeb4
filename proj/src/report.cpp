#include "dend/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "dend/errors.hpp"

namespace dend {

using nlohmann::json;

bool verification_report::has_refuted() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const verdict_entry& e) {
        return e.verdict.st == claim_verdict::status::refuted;
    });
}

std::size_t verification_report::total_missed_points() const {
    std::size_t n = 0;
    for (const auto& c : completeness) n += c.missed_points;
    return n;
}

std::vector<rb_tail> applicable_tails(const operator_kind& kind,
                                      const std::vector<rb_tail>& requested) {
    bool weighted = kind.has_weight() && !kind.weight.is_zero();
    std::vector<rb_tail> out;
    for (rb_tail t : requested) {
        rb_tail effective = weighted ? t : rb_tail::standard;
        if (std::find(out.begin(), out.end(), effective) == out.end()) out.push_back(effective);
    }
    if (out.empty()) out.push_back(rb_tail::standard);
    return out;
}

namespace {

int family_rank(operator_kind::family f) {
    switch (f) {
        case operator_kind::family::rota_baxter: return 0;
        case operator_kind::family::reynolds: return 1;
        case operator_kind::family::nijenhuis: return 2;
        case operator_kind::family::averaging: return 3;
    }
    return 4;
}

/// (family, weight) ordering so sweeps list Rota-Baxter by ascending weight
/// before the unweighted families.
bool kind_less(const operator_kind& a, const operator_kind& b) {
    if (family_rank(a.fam) != family_rank(b.fam)) return family_rank(a.fam) < family_rank(b.fam);
    return a.weight < b.weight;
}

std::vector<std::string> flatten_matrix(const family_claim& claim) {
    std::vector<std::string> out;
    for (const auto& row : claim.matrix)
        for (const auto& entry : row) out.push_back(entry.str());
    return out;
}

std::string matrix_inline(const std::vector<std::string>& entries) {
    std::size_t dim = 1;
    while (dim * dim < entries.size()) ++dim;
    std::string out = "[";
    for (std::size_t i = 0; i < dim; ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < dim; ++j) {
            if (j) out += ", ";
            out += entries[i * dim + j];
        }
        out += "]";
    }
    return out + "]";
}

json verdict_json(const claim_verdict& v) {
    json node = json::object();
    node["verdict"] = verdict_name(v.st);
    if (!v.conditions.empty()) {
        json conds = json::array();
        for (const auto& c : v.conditions) conds.push_back(c.str());
        node["conditions"] = std::move(conds);
    }
    if (!v.residuals.empty()) {
        json res = json::array();
        for (const auto& [label, poly] : v.residuals)
            res.push_back(json{{"label", label.str()}, {"poly", poly.str()}});
        node["residuals"] = std::move(res);
    }
    if (v.witness) node["witness"] = *v.witness;
    return node;
}

/// Markdown-table cell: conditions / witness / residual count, pipe-safe.
std::string verdict_notes(const json& entry) {
    std::string notes;
    if (auto it = entry.find("conditions"); it != entry.end()) {
        notes += "conditions: ";
        for (std::size_t i = 0; i < it->size(); ++i) {
            if (i) notes += ", ";
            notes += (*it)[i].get<std::string>();
        }
    }
    if (auto it = entry.find("witness"); it != entry.end()) {
        if (!notes.empty()) notes += "; ";
        notes += "witness: " + it->get<std::string>();
    }
    if (auto it = entry.find("residuals"); it != entry.end()) {
        if (!notes.empty()) notes += "; ";
        notes += std::to_string(it->size()) + " nonzero residual(s)";
    }
    std::string safe;
    for (char c : notes) {
        if (c == '|') safe += "\\|";
        else safe += c;
    }
    return safe;
}

std::string cell(const std::string& text) { return text.empty() ? "-" : text; }

}  // namespace

verification_report run_verification(const catalog& cat, const verify_options& opts) {
    verification_report rep;
    rep.catalog_sha256 = cat.sha256_hex;
    rep.seed = opts.seed;
    rep.missing = missing_algebras(cat);

    auto kept = [&](const std::string& algebra_id) {
        return opts.only_algebras.empty() ||
               std::find(opts.only_algebras.begin(), opts.only_algebras.end(), algebra_id) !=
                   opts.only_algebras.end();
    };

    for (const auto& algebra : cat.algebras) {
        if (!kept(algebra.id)) continue;

        // Claims of this algebra, catalog order inside each kind, kinds ranked.
        std::vector<const family_claim*> claims;
        for (const auto& claim : cat.claims)
            if (claim.algebra_id == algebra.id) claims.push_back(&claim);
        std::stable_sort(claims.begin(), claims.end(),
                         [](const family_claim* a, const family_claim* b) {
                             if (a->kind != b->kind) return kind_less(a->kind, b->kind);
                             return a->id < b->id;
                         });

        for (const family_claim* claim : claims) {
            for (matrix_convention conv : opts.conventions) {
                for (rb_tail tail : applicable_tails(claim->kind, opts.tails)) {
                    verdict_entry entry;
                    entry.claim_id = claim->id;
                    entry.algebra_id = claim->algebra_id;
                    entry.kind = claim->kind;
                    entry.convention = conv;
                    entry.tail = tail;
                    entry.source = claim->source;
                    entry.matrix_text = flatten_matrix(*claim);
                    for (const auto& r : claim->restrictions)
                        entry.restrictions_text.push_back(r.str());
                    entry.verdict = verify_claim(*claim, algebra, conv, tail);
                    rep.verdicts.push_back(std::move(entry));
                }
            }
            if (opts.run_weight_shift && claim->kind.fam == operator_kind::family::rota_baxter) {
                rational target = claim->kind.weight.is_zero() ? rational(1) : rational(0);
                for (matrix_convention conv : opts.conventions) {
                    for (rb_tail tail :
                         applicable_tails(operator_kind::rota_baxter(target), opts.tails)) {
                        weight_shift_entry entry;
                        entry.claim_id = claim->id;
                        entry.convention = conv;
                        entry.tail = tail;
                        entry.from_weight = claim->kind.weight;
                        entry.to_weight = target;
                        entry.verdict = weight_shift_check(*claim, algebra, target, conv, tail);
                        rep.weight_shift.push_back(std::move(entry));
                    }
                }
            }
        }

        if (opts.run_completeness) {
            std::vector<operator_kind> kinds;
            for (const family_claim* claim : claims)
                if (std::find(kinds.begin(), kinds.end(), claim->kind) == kinds.end())
                    kinds.push_back(claim->kind);
            for (const auto& kind : kinds) {
                auto family_claims = cat.claims_for(algebra.id, kind);
                for (matrix_convention conv : opts.conventions) {
                    for (rb_tail tail : applicable_tails(kind, opts.tails)) {
                        rep.completeness.push_back(
                            completeness_check(algebra, kind, family_claims, conv, tail,
                                               opts.seed, opts.samples_per_component));
                    }
                }
            }
        }
    }
    return rep;
}

std::string report_json(const verification_report& report) {
    json doc = json::object();

    json meta = json::object();
    meta["catalog_sha256"] = report.catalog_sha256;
    meta["seed"] = report.seed;
    meta["tool_version"] = report.version;
    meta["missing_algebras"] = report.missing;
    doc["meta"] = std::move(meta);

    json verdicts = json::array();
    for (const auto& entry : report.verdicts) {
        json node = verdict_json(entry.verdict);
        node["claim"] = entry.claim_id;
        node["algebra"] = entry.algebra_id;
        node["kind"] = entry.kind.name();
        if (entry.kind.has_weight()) node["weight"] = entry.kind.weight.str();
        node["convention"] = convention_name(entry.convention);
        node["rb_tail"] = rb_tail_name(entry.tail);
        if (!entry.source.empty()) node["source"] = entry.source;
        std::size_t dim = 1;
        while (dim * dim < entry.matrix_text.size()) ++dim;
        json matrix = json::array();
        for (std::size_t i = 0; i < dim; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < dim; ++j) row.push_back(entry.matrix_text[i * dim + j]);
            matrix.push_back(std::move(row));
        }
        node["matrix"] = std::move(matrix);
        if (!entry.restrictions_text.empty()) node["restrictions"] = entry.restrictions_text;
        verdicts.push_back(std::move(node));
    }
    doc["verdicts"] = std::move(verdicts);

    json shifts = json::array();
    for (const auto& entry : report.weight_shift) {
        json node = verdict_json(entry.verdict);
        node["claim"] = entry.claim_id;
        node["convention"] = convention_name(entry.convention);
        node["rb_tail"] = rb_tail_name(entry.tail);
        node["from_weight"] = entry.from_weight.str();
        node["to_weight"] = entry.to_weight.str();
        shifts.push_back(std::move(node));
    }
    doc["weight_shift"] = std::move(shifts);

    json completeness = json::array();
    for (const auto& c : report.completeness) {
        json node = json::object();
        node["algebra"] = c.algebra_id;
        node["kind"] = c.kind.name();
        if (c.kind.has_weight()) node["weight"] = c.kind.weight.str();
        node["convention"] = convention_name(c.convention);
        node["rb_tail"] = rb_tail_name(c.tail);
        node["components"] = c.component_count;
        node["solved_components"] = c.solved_components;
        node["sampled_points"] = c.sampled_points;
        node["missed_points"] = c.missed_points;
        node["unsampled_components"] = c.unsampled_components;
        json coverage = json::array();
        for (const auto& cc : c.claims) {
            json row = json::object();
            row["claim"] = cc.claim_id;
            row["generically_satisfies"] = cc.generically_satisfies;
            row["nonlinear_skipped"] = cc.nonlinear_skipped;
            coverage.push_back(std::move(row));
        }
        node["claims"] = std::move(coverage);
        if (c.missed_example) node["missed_example"] = *c.missed_example;
        completeness.push_back(std::move(node));
    }
    doc["completeness"] = std::move(completeness);

    return doc.dump(2) + "\n";
}

std::string report_markdown(const verification_report& report) {
    return report_markdown_from_json(report_json(report));
}

std::string report_markdown_from_json(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw schema_error(e.what(), "/");
    }
    if (!doc.is_object() || !doc.contains("meta") || !doc.contains("verdicts"))
        throw schema_error("not a verification report", "/");

    const json& meta = doc["meta"];
    std::ostringstream out;
    out << "# Operator classification audit\n\n";
    out << "- tool: " << meta.value("tool_version", std::string("?")) << "\n";
    out << "- catalog sha256: `" << meta.value("catalog_sha256", std::string("?")) << "`\n";
    out << "- seed: " << meta.value("seed", std::uint64_t{0}) << "\n";
    if (auto it = meta.find("missing_algebras"); it != meta.end() && !it->empty()) {
        out << "- missing algebras:";
        for (const auto& m : *it) out << " " << m.get<std::string>();
        out << "\n";
    }
    out << "\n";

    // Verdicts grouped by (kind, weight, convention, tail), document order.
    out << "## Verdicts\n";
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> groups;
    for (const auto& entry : doc["verdicts"]) {
        auto key = std::make_tuple(entry.value("kind", std::string()),
                                   entry.value("weight", std::string()),
                                   entry.value("convention", std::string()),
                                   entry.value("rb_tail", std::string()));
        if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
    }
    for (const auto& group : groups) {
        const auto& [kind, weight, convention, tail] = group;
        out << "\n### " << kind;
        if (!weight.empty()) out << " (weight " << weight << ")";
        out << " - convention " << convention << ", tail " << tail << "\n\n";
        out << "| Claim | Algebra | Matrix | Restrictions | Verdict | Notes |\n";
        out << "|---|---|---|---|---|---|\n";
        for (const auto& entry : doc["verdicts"]) {
            auto key = std::make_tuple(entry.value("kind", std::string()),
                                       entry.value("weight", std::string()),
                                       entry.value("convention", std::string()),
                                       entry.value("rb_tail", std::string()));
            if (key != group) continue;
            std::vector<std::string> flat;
            for (const auto& row : entry["matrix"])
                for (const auto& e : row) flat.push_back(e.get<std::string>());
            std::string restrictions;
            if (auto it = entry.find("restrictions"); it != entry.end())
                for (const auto& r : *it) {
                    if (!restrictions.empty()) restrictions += ", ";
                    restrictions += r.get<std::string>() + " != 0";
                }
            out << "| " << entry.value("claim", std::string()) << " | "
                << entry.value("algebra", std::string()) << " | `" << matrix_inline(flat)
                << "` | " << cell(restrictions) << " | " << entry.value("verdict", std::string())
                << " | " << cell(verdict_notes(entry)) << " |\n";
        }
    }

    if (auto it = doc.find("weight_shift"); it != doc.end() && !it->empty()) {
        out << "\n## Weight-shift audit\n\n";
        out << "Each Rota-Baxter family re-tested with the weight replaced by the other "
               "tabulated value.\n\n";
        out << "| Claim | From | To | Convention | Tail | Verdict | Notes |\n";
        out << "|---|---|---|---|---|---|---|\n";
        for (const auto& entry : *it) {
            out << "| " << entry.value("claim", std::string()) << " | "
                << entry.value("from_weight", std::string()) << " | "
                << entry.value("to_weight", std::string()) << " | "
                << entry.value("convention", std::string()) << " | "
                << entry.value("rb_tail", std::string()) << " | "
                << entry.value("verdict", std::string()) << " | " << cell(verdict_notes(entry))
                << " |\n";
        }
    }

    if (auto it = doc.find("completeness"); it != doc.end() && !it->empty()) {
        out << "\n## Completeness\n\n";
        out << "The full system is solved into components; sampled solutions are matched "
               "against the published families.\n\n";
        out << "| Algebra | Kind | Convention | Tail | Components | Solved | Sampled | Missed "
               "| Notes |\n";
        out << "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& entry : *it) {
            std::string kind = entry.value("kind", std::string());
            if (entry.contains("weight"))
                kind += " (weight " + entry.value("weight", std::string()) + ")";
            std::string notes;
            if (auto u = entry.find("unsampled_components");
                u != entry.end() && u->get<std::size_t>() > 0)
                notes += std::to_string(u->get<std::size_t>()) + " unsampled component(s)";
            if (auto m = entry.find("missed_example"); m != entry.end()) {
                if (!notes.empty()) notes += "; ";
                notes += "missed example: `" + m->get<std::string>() + "`";
            }
            out << "| " << entry.value("algebra", std::string()) << " | " << kind << " | "
                << entry.value("convention", std::string()) << " | "
                << entry.value("rb_tail", std::string()) << " | "
                << entry.value("components", std::size_t{0}) << " | "
                << entry.value("solved_components", std::size_t{0}) << " | "
                << entry.value("sampled_points", std::size_t{0}) << " | "
                << entry.value("missed_points", std::size_t{0}) << " | " << cell(notes)
                << " |\n";
        }
    }
    return out.str();
}

}  // namespace dend
