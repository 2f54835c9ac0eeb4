#include "dend/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dend/catalog.hpp"
#include "dend/dendriform.hpp"
#include "dend/errors.hpp"
#include "dend/operator_model.hpp"
#include "dend/report.hpp"
#include "dend/rng.hpp"
#include "dend/solver.hpp"
#include "dend/verify.hpp"

#ifndef DEND_DEFAULT_CATALOG
#define DEND_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace dend {

namespace {

using nlohmann::json;

std::vector<matrix_convention> parse_conventions(const std::string& text) {
    if (text == "row") return {matrix_convention::row};
    if (text == "col") return {matrix_convention::column};
    if (text == "both") return {matrix_convention::row, matrix_convention::column};
    throw CLI::ValidationError("--convention", "expected row, col or both");
}

std::vector<rb_tail> parse_tails(const std::string& text) {
    if (text == "standard") return {rb_tail::standard};
    if (text == "paper") return {rb_tail::paper};
    if (text == "both") return {rb_tail::standard, rb_tail::paper};
    throw CLI::ValidationError("--rb-tail", "expected standard, paper or both");
}

operator_kind make_kind(const std::string& op, const std::string& weight, bool weight_given) {
    if (op == "rota_baxter") {
        if (!weight_given)
            throw CLI::ValidationError("--weight", "rota_baxter requires --weight");
        try {
            return operator_kind::rota_baxter(rational::from_string(weight));
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("--weight", e.what());
        }
    }
    if (weight_given) throw CLI::ValidationError("--weight", "--weight is only valid for rota_baxter");
    if (op == "reynolds") return operator_kind::reynolds();
    if (op == "nijenhuis") return operator_kind::nijenhuis();
    if (op == "averaging") return operator_kind::averaging();
    throw CLI::ValidationError("--op", "expected rota_baxter, reynolds, nijenhuis or averaging");
}

const dendriform_algebra& require_algebra(const catalog& cat, const std::string& id) {
    const dendriform_algebra* alg = cat.find_algebra(id);
    if (!alg) throw schema_error("algebra '" + id + "' not in catalog", "/algebras");
    return *alg;
}

std::string point_matrix_text(const operator_system& system,
                              const std::vector<rational>& point) {
    std::string out = "[";
    for (std::size_t i = 0; i < system.unknown_index.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < system.unknown_index[i].size(); ++j) {
            if (j) out += ", ";
            out += point[system.unknown_index[i][j]].str();
        }
        out += "]";
    }
    return out + "]";
}

struct sweep_target {
    const dendriform_algebra* algebra = nullptr;
    operator_kind kind;
    matrix_convention convention = matrix_convention::row;
    rb_tail tail = rb_tail::standard;
};

/// Expands --algebra/--all x --convention x --rb-tail into concrete targets.
std::vector<sweep_target> expand_targets(const catalog& cat, const std::string& algebra_id,
                                         const operator_kind& kind,
                                         const std::vector<matrix_convention>& convs,
                                         const std::vector<rb_tail>& tails) {
    std::vector<sweep_target> out;
    const dendriform_algebra& alg = require_algebra(cat, algebra_id);
    for (matrix_convention conv : convs)
        for (rb_tail tail : applicable_tails(kind, tails))
            out.push_back({&alg, kind, conv, tail});
    return out;
}

int cmd_axioms(const catalog& cat, const std::vector<std::string>& only, bool strict,
               std::ostream& out) {
    bool all_pass = true;
    for (const auto& alg : cat.algebras) {
        if (!only.empty() &&
            std::find(only.begin(), only.end(), alg.id) == only.end())
            continue;
        auto violations = check_axioms(alg);
        auto sum_violations = sum_associativity_check(alg);
        violations.insert(violations.end(), sum_violations.begin(), sum_violations.end());
        if (violations.empty()) {
            out << "PASS " << alg.id << "\n";
            continue;
        }
        all_pass = false;
        out << "FAIL " << alg.id << "\n";
        for (const auto& v : violations)
            out << "  " << axiom_name(v.identity) << " at (" << v.triple[0] << "," << v.triple[1]
                << "," << v.triple[2] << ") coordinate e" << v.coordinate
                << ": residual " << v.residual.str() << "\n";
    }
    return (!all_pass && strict) ? 1 : 0;
}

int cmd_system(const catalog& cat, const std::string& algebra_id, const operator_kind& kind,
               const std::vector<matrix_convention>& convs, const std::vector<rb_tail>& tails,
               const std::string& format, std::ostream& out) {
    auto targets = expand_targets(cat, algebra_id, kind, convs, tails);
    if (format == "json") {
        json doc = json::array();
        for (const auto& t : targets) {
            operator_system system = build_system(*t.algebra, t.kind, t.convention, t.tail);
            json node = json::object();
            node["algebra"] = t.algebra->id;
            node["kind"] = t.kind.name();
            if (t.kind.has_weight()) node["weight"] = t.kind.weight.str();
            node["convention"] = convention_name(t.convention);
            node["rb_tail"] = rb_tail_name(t.tail);
            json eqs = json::array();
            for (const auto& [label, poly] : system.equations)
                eqs.push_back(json{{"label", label.str()}, {"poly", poly.str()}});
            node["equations"] = std::move(eqs);
            doc.push_back(std::move(node));
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    for (const auto& t : targets) {
        operator_system system = build_system(*t.algebra, t.kind, t.convention, t.tail);
        out << "# " << t.algebra->id << " " << t.kind.display_name() << ", convention "
            << convention_name(t.convention) << ", tail " << rb_tail_name(t.tail) << "\n";
        for (const auto& [label, poly] : system.equations)
            out << label.str() << ": " << poly.str() << "\n";
    }
    return 0;
}

json component_json(const solution_component& comp) {
    json node = json::object();
    json subs = json::object();
    for (const auto& [var, value] : comp.substitutions)
        subs[comp.table->name(var)] = value.str();
    node["substitutions"] = std::move(subs);
    json free = json::array();
    for (std::size_t var : comp.free_variables) free.push_back(comp.table->name(var));
    node["free"] = std::move(free);
    if (!comp.residual_equations.empty()) {
        json res = json::array();
        for (const auto& p : comp.residual_equations) res.push_back(p.str());
        node["residual_equations"] = std::move(res);
    }
    if (!comp.inequations.empty()) {
        json ineqs = json::array();
        for (const auto& p : comp.inequations) ineqs.push_back(p.str());
        node["inequations"] = std::move(ineqs);
    }
    node["fully_solved"] = comp.fully_solved;
    return node;
}

void print_component(const solution_component& comp, std::size_t index, std::ostream& out) {
    out << "component " << index << ":\n";
    for (const auto& [var, value] : comp.substitutions)
        out << "  " << comp.table->name(var) << " = " << value.str() << "\n";
    if (!comp.free_variables.empty()) {
        out << "  free:";
        for (std::size_t var : comp.free_variables) out << " " << comp.table->name(var);
        out << "\n";
    }
    for (const auto& p : comp.residual_equations) out << "  residual: " << p.str() << " = 0\n";
    for (const auto& p : comp.inequations) out << "  where " << p.str() << " != 0\n";
    if (!comp.fully_solved) out << "  (split unfinished)\n";
}

int cmd_solve(const catalog& cat, const std::string& algebra_id, const operator_kind& kind,
              const std::vector<matrix_convention>& convs, const std::vector<rb_tail>& tails,
              const std::string& format, std::ostream& out) {
    auto targets = expand_targets(cat, algebra_id, kind, convs, tails);
    json doc = json::array();
    for (const auto& t : targets) {
        operator_system system = build_system(*t.algebra, t.kind, t.convention, t.tail);
        auto components = solve_components(system.nonzero_equations(), system.unknown_vars(),
                                           system.parameter_vars());
        if (format == "json") {
            json node = json::object();
            node["algebra"] = t.algebra->id;
            node["kind"] = t.kind.name();
            if (t.kind.has_weight()) node["weight"] = t.kind.weight.str();
            node["convention"] = convention_name(t.convention);
            node["rb_tail"] = rb_tail_name(t.tail);
            json comps = json::array();
            for (const auto& comp : components) comps.push_back(component_json(comp));
            node["components"] = std::move(comps);
            doc.push_back(std::move(node));
        } else {
            out << "# " << t.algebra->id << " " << t.kind.display_name() << ", convention "
                << convention_name(t.convention) << ", tail " << rb_tail_name(t.tail) << " ("
                << components.size() << " component(s))\n";
            for (std::size_t k = 0; k < components.size(); ++k)
                print_component(components[k], k + 1, out);
        }
    }
    if (format == "json") out << doc.dump(2) << "\n";
    return 0;
}

int cmd_sample(const catalog& cat, const std::string& algebra_id, const operator_kind& kind,
               const std::vector<matrix_convention>& convs, const std::vector<rb_tail>& tails,
               std::uint64_t seed, std::size_t count, std::ostream& out) {
    auto targets = expand_targets(cat, algebra_id, kind, convs, tails);
    for (const auto& t : targets) {
        operator_system system = build_system(*t.algebra, t.kind, t.convention, t.tail);
        auto components = solve_components(system.nonzero_equations(), system.unknown_vars(),
                                           system.parameter_vars());
        out << "# " << t.algebra->id << " " << t.kind.display_name() << ", convention "
            << convention_name(t.convention) << ", tail " << rb_tail_name(t.tail) << "\n";
        for (std::size_t k = 0; k < components.size(); ++k) {
            out << "component " << k + 1 << ":\n";
            auto points = component_sample(components[k],
                                           rng::derive(seed, "cli/sample/" + std::to_string(k)),
                                           count);
            for (const auto& point : points) {
                out << "  " << point_matrix_text(system, point);
                std::string params;
                for (std::size_t var : system.parameter_vars()) {
                    if (!params.empty()) params += ", ";
                    params += system.table->name(var) + " = " + point[var].str();
                }
                if (!params.empty()) out << "  (" << params << ")";
                out << "\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const catalog& cat, const std::string& catalog_path, const verify_options& opts,
               const std::string& out_dir, bool strict, std::ostream& out) {
    verification_report rep = run_verification(cat, opts);

    std::size_t confirmed = 0, conditional = 0, refuted = 0;
    for (const auto& entry : rep.verdicts) {
        switch (entry.verdict.st) {
            case claim_verdict::status::confirmed: ++confirmed; break;
            case claim_verdict::status::conditional: ++conditional; break;
            case claim_verdict::status::refuted: ++refuted; break;
        }
    }

    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    std::string json_bytes = report_json(rep);
    {
        std::ofstream file(dir / "report.json", std::ios::binary);
        file << json_bytes;
    }
    {
        std::ofstream file(dir / "report.md", std::ios::binary);
        file << report_markdown_from_json(json_bytes);
    }

    out << "catalog: " << catalog_path << " (sha256 " << rep.catalog_sha256 << ")\n";
    out << "algebras: " << cat.algebras.size();
    if (!rep.missing.empty()) {
        out << " (missing:";
        for (const auto& id : rep.missing) out << " " << id;
        out << ")";
    }
    out << "\n";
    out << "verdicts: " << rep.verdicts.size() << " (" << confirmed << " CONFIRMED, "
        << conditional << " CONDITIONAL, " << refuted << " REFUTED)\n";
    out << "weight-shift audits: " << rep.weight_shift.size() << "\n";
    std::size_t missed = rep.total_missed_points();
    out << "completeness: " << rep.completeness.size() << " sweep(s), " << missed
        << " missed point(s)\n";
    out << "wrote " << (dir / "report.json").string() << "\n";
    out << "wrote " << (dir / "report.md").string() << "\n";

    if (strict && (rep.has_refuted() || missed > 0)) return 1;
    return 0;
}

int cmd_report(const std::string& out_dir, std::ostream& out) {
    std::filesystem::path dir(out_dir);
    std::ifstream in(dir / "report.json", std::ios::binary);
    if (!in) throw schema_error("cannot open " + (dir / "report.json").string(), "/");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string markdown = report_markdown_from_json(buffer.str());
    {
        std::ofstream file(dir / "report.md", std::ios::binary);
        file << markdown;
    }
    out << markdown;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact audit of Rota-type operator classifications on the two-dimensional "
                 "dendriform algebras"};
    app.name("dend");
    app.require_subcommand(1);

    std::string catalog_path = DEND_DEFAULT_CATALOG;
    std::string algebra_id, op_name, weight_text, convention_text = "row",
                tail_text = "standard", format = "text", out_dir = ".";
    std::vector<std::string> algebra_list;
    std::uint64_t seed = 42;
    std::size_t count = 5;
    bool all = false, strict = false;

    auto add_catalog = [&](CLI::App* cmd) {
        cmd->add_option("--catalog", catalog_path, "catalog JSON path")
            ->capture_default_str();
    };
    auto add_target = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra_id, "algebra id")->required();
        cmd->add_option("--op", op_name,
                        "operator kind: rota_baxter, reynolds, nijenhuis, averaging")
            ->required();
        cmd->add_option("--weight", weight_text, "Rota-Baxter weight (rational)");
        cmd->add_option("--convention,--conventions", convention_text, "row, col or both")
            ->capture_default_str();
        cmd->add_option("--rb-tail", tail_text, "standard, paper or both")
            ->capture_default_str();
    };

    CLI::App* axioms = app.add_subcommand("axioms", "check the dendriform axioms");
    add_catalog(axioms);
    axioms->add_option("--algebra", algebra_list, "restrict to these algebra ids");
    axioms->add_flag("--all", all, "check every algebra (default)");
    axioms->add_flag("--strict", strict, "exit 1 on any violation");

    CLI::App* system = app.add_subcommand("system", "emit the defining polynomial system");
    add_catalog(system);
    add_target(system);
    system->add_option("--format", format, "text or json")->capture_default_str();

    CLI::App* solve = app.add_subcommand("solve", "decompose the solution set into components");
    add_catalog(solve);
    add_target(solve);
    solve->add_option("--format", format, "text or json")->capture_default_str();

    CLI::App* sample = app.add_subcommand("sample", "draw rational sample operators per component");
    add_catalog(sample);
    add_target(sample);
    sample->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sample->add_option("--count", count, "samples per component")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "audit catalog claims and write the report");
    add_catalog(verify);
    verify->add_option("--algebra", algebra_list, "restrict to these algebra ids");
    verify->add_flag("--all", all, "audit every algebra (default)");
    verify->add_option("--convention,--conventions", convention_text, "row, col or both")
        ->capture_default_str();
    verify->add_option("--rb-tail", tail_text, "standard, paper or both")
        ->capture_default_str();
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->add_option("--count", count, "sample points per solution component")
        ->capture_default_str();
    verify->add_option("--out", out_dir, "directory for report.json / report.md")
        ->capture_default_str();
    verify->add_flag("--strict", strict, "exit 1 on REFUTED verdicts or missed points");

    CLI::App* report = app.add_subcommand("report", "re-render report.json to markdown");
    report->add_option("--out", out_dir, "directory holding report.json")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("dend");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (report->parsed()) return cmd_report(out_dir, out);

        catalog cat = load_catalog_file(catalog_path);
        if (axioms->parsed()) return cmd_axioms(cat, algebra_list, strict, out);

        if (verify->parsed()) {
            verify_options opts;
            opts.conventions = parse_conventions(convention_text);
            opts.tails = parse_tails(tail_text);
            opts.seed = seed;
            if (verify->count("--count") > 0) opts.samples_per_component = count;
            opts.only_algebras = algebra_list;
            return cmd_verify(cat, catalog_path, opts, out_dir, strict, out);
        }

        operator_kind kind = make_kind(op_name, weight_text, !weight_text.empty());
        auto convs = parse_conventions(convention_text);
        auto tails = parse_tails(tail_text);
        if (system->parsed())
            return cmd_system(cat, algebra_id, kind, convs, tails, format, out);
        if (solve->parsed()) return cmd_solve(cat, algebra_id, kind, convs, tails, format, out);
        if (sample->parsed())
            return cmd_sample(cat, algebra_id, kind, convs, tails, seed, count, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const rejection_exhausted_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dend
