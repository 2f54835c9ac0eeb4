// Acceptance gate: exercises the eight shipping criteria end to end against
// the shipped catalog and prints one [PASS]/[FAIL] line per criterion.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dend/catalog.hpp"
#include "dend/cli.hpp"
#include "dend/groebner.hpp"
#include "dend/operator_model.hpp"
#include "dend/report.hpp"
#include "dend/solver.hpp"
#include "dend/verify.hpp"

#include "json.hpp"

using namespace dend;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

bool all_ok = true;

void line(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) all_ok = false;
}

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

family_claim constant_claim(const dendriform_algebra& alg, operator_kind kind,
                            const rational& diag, const rational& off) {
    family_claim fc;
    fc.id = "synthetic";
    fc.algebra_id = alg.id;
    fc.kind = std::move(kind);
    std::vector<std::pair<std::string, var_kind>> vars;
    for (std::size_t i = 0; i < alg.params->size(); ++i)
        vars.emplace_back(alg.params->name(i), var_kind::parameter);
    fc.params = var_table::make(std::move(vars));
    fc.matrix.resize(alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            fc.matrix[i].push_back(polynomial::constant(fc.params, i == j ? diag : off));
    return fc;
}

claim_verdict::status status_of(const dendriform_algebra& alg, const operator_kind& kind,
                                const rational& diag) {
    auto fc = constant_claim(alg, kind, diag, rational(0));
    return verify_claim(fc, alg, matrix_convention::row, rb_tail::standard).st;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const family_claim* find_claim(const catalog& cat, const std::string& id) {
    for (const auto& c : cat.claims)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

int main() {
    catalog cat;
    try {
        cat = load_catalog_file(DEND_CATALOG_PATH);
    } catch (const std::exception& e) {
        std::cout << "[FAIL] criterion 0: catalog loads -- " << e.what() << "\n";
        return 1;
    }

    // ---- criterion 1: axiom suite ------------------------------------------
    {
        auto start = clock_type::now();
        std::string detail;
        bool ok = cat.algebras.size() == 12;
        if (!ok) detail = "expected 12 algebras";
        for (const auto& alg : cat.algebras) {
            auto violations = check_axioms(alg);
            if (!violations.empty()) {
                ok = false;
                detail = alg.id + ": " + axiom_name(violations[0].identity) + " fails";
                break;
            }
        }
        double elapsed = ms_since(start);
        if (ok && elapsed >= 1000.0) {
            ok = false;
            detail = "took " + std::to_string(elapsed) + " ms";
        }
        std::ostringstream what;
        what << "all 12 algebras satisfy the dendriform axioms ("
             << static_cast<int>(elapsed) << " ms)";
        line(1, what.str(), ok, detail);
    }

    // ---- criterion 2: split associativity ----------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const auto& alg : cat.algebras) {
            if (!sum_associativity_check(alg).empty()) {
                ok = false;
                detail = alg.id;
                break;
            }
        }
        line(2, "the sum product is associative on all 12 algebras", ok, detail);
    }

    // ---- criterion 3: theorem reproduction ---------------------------------
    {
        bool ok = true;
        std::string detail;
        const auto* alg = cat.find_algebra("Dend2_1");
        if (!alg) {
            ok = false;
            detail = "Dend2_1 missing";
        } else {
            auto sys = build_system(*alg, operator_kind::rota_baxter(rational(0)),
                                    matrix_convention::row, rb_tail::standard);
            auto comps = solve_components(sys.nonzero_equations(), sys.unknown_vars(),
                                          sys.parameter_vars());
            if (comps.size() != 1) {
                ok = false;
                detail = "expected 1 component, got " + std::to_string(comps.size());
            } else {
                const auto& c = comps[0];
                auto name = [&](std::size_t v) { return sys.table->name(v); };
                std::set<std::string> zeroed;
                for (const auto& [var, value] : c.substitutions)
                    if (value.is_zero()) zeroed.insert(name(var));
                bool shape = c.fully_solved && c.residual_equations.empty() &&
                             c.inequations.empty() && c.substitutions.size() == 3 &&
                             zeroed == std::set<std::string>{"a11", "a21", "a22"} &&
                             c.free_variables.size() == 1 && name(c.free_variables[0]) == "a12";
                if (!shape) {
                    ok = false;
                    detail = "component shape differs from {a11=a21=a22=0, a12 free}";
                }
            }
            const family_claim* p1 = find_claim(cat, "Dend2_1.rb0.P1");
            if (ok && (!p1 || verify_claim(*p1, *alg, matrix_convention::row,
                                           rb_tail::standard)
                                      .st != claim_verdict::status::confirmed)) {
                ok = false;
                detail = "published family not confirmed";
            }
        }
        line(3, "weight-0 classification on Dend2_1 is reproduced exactly", ok, detail);
    }

    // ---- criterion 4: trivial operators ------------------------------------
    {
        bool ok = true;
        std::string detail;
        std::vector<operator_kind> kinds{
            operator_kind::rota_baxter(rational(0)), operator_kind::rota_baxter(rational(1)),
            operator_kind::reynolds(), operator_kind::nijenhuis(), operator_kind::averaging()};
        std::size_t checks = 0;
        for (const auto& alg : cat.algebras) {
            for (const auto& kind : kinds) {
                ++checks;
                if (status_of(alg, kind, rational(0)) != claim_verdict::status::confirmed) {
                    ok = false;
                    detail = "zero matrix not confirmed: " + alg.id + " " + kind.display_name();
                }
            }
            for (const auto& kind : {operator_kind::reynolds(), operator_kind::nijenhuis(),
                                     operator_kind::averaging(),
                                     operator_kind::rota_baxter(rational(-1))}) {
                ++checks;
                if (status_of(alg, kind, rational(1)) != claim_verdict::status::confirmed) {
                    ok = false;
                    detail = "identity not confirmed: " + alg.id + " " + kind.display_name();
                }
            }
            for (const auto& w : {rational(0), rational(1)}) {
                ++checks;
                if (status_of(alg, operator_kind::rota_baxter(w), rational(1)) ==
                    claim_verdict::status::confirmed) {
                    ok = false;
                    detail = "identity wrongly confirmed: " + alg.id + " weight " + w.str();
                }
            }
        }
        std::ostringstream what;
        what << "trivial operators classify exactly (" << checks << " checks)";
        line(4, what.str(), ok, detail);
    }

    // ---- criterion 5: dual-engine agreement --------------------------------
    {
        bool ok = true;
        std::string detail;
        std::size_t cases = 0;
        for (const auto& claim : cat.claims) {
            const auto* alg = cat.find_algebra(claim.algebra_id);
            for (auto conv : {matrix_convention::row, matrix_convention::column}) {
                for (auto tail :
                     applicable_tails(claim.kind, {rb_tail::standard, rb_tail::paper})) {
                    ++cases;
                    std::string diagnosis;
                    if (!dual_engine_agree(claim, *alg, conv, tail, 42, 200, &diagnosis)) {
                        ok = false;
                        if (detail.empty()) detail = claim.id + ": " + diagnosis;
                    }
                }
            }
        }
        std::ostringstream what;
        what << "symbolic verdicts match exact evaluation at 200 seeded points (" << cases
             << " claim sweeps)";
        line(5, what.str(), ok, detail);
    }

    // ---- criterion 6: Groebner oracles -------------------------------------
    {
        bool ok = true;
        std::string detail;
        auto t = var_table::make({{"x", var_kind::unknown}, {"y", var_kind::unknown}});
        polynomial x = polynomial::variable(t, 0), y = polynomial::variable(t, 1);
        polynomial one = polynomial::constant(t, rational(1));
        auto gb = buchberger(ideal({x * x - one, x * y - one}, monomial_order::lex(2)));
        std::set<std::string> got;
        for (const auto& p : gb.basis) got.insert(p.str());
        if (got != std::set<std::string>{"x - y", "y^2 - 1"}) {
            ok = false;
            detail = "textbook basis mismatch";
        }

        const auto* alg = cat.find_algebra("Dend2_1");
        auto sys = build_system(*alg, operator_kind::rota_baxter(rational(0)),
                                matrix_convention::row, rb_tail::standard);
        ideal system_ideal(sys.nonzero_equations(), monomial_order::grevlex(sys.table->size()));
        auto system_gb = buchberger(system_ideal);
        polynomial a11 = polynomial::variable(sys.table, sys.unknown_index[0][0]);
        if (ideal_member(a11, system_gb)) {
            ok = false;
            detail = "a11 reported inside the ideal";
        }
        if (!radical_member(a11, system_ideal)) {
            ok = false;
            detail = "a11 not in the radical";
        }
        line(6, "Groebner unit oracles (textbook basis, ideal vs radical membership)", ok,
             detail);
    }

    // ---- criterion 8 runs first so criterion 7 can inspect its report ------
    fs::path dir_a = fs::temp_directory_path() / "dend_acceptance_a";
    fs::path dir_b = fs::temp_directory_path() / "dend_acceptance_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    double run_ms[2] = {0, 0};
    int run_code[2] = {-1, -1};
    for (int k = 0; k < 2; ++k) {
        std::ostringstream out, err;
        auto start = clock_type::now();
        run_code[k] = run_cli({"verify", "--all", "--conventions", "both", "--rb-tail", "both",
                               "--seed", "42", "--catalog", DEND_CATALOG_PATH, "--out",
                               (k == 0 ? dir_a : dir_b).string()},
                              out, err);
        run_ms[k] = ms_since(start);
    }
    std::string bytes_a = slurp(dir_a / "report.json");
    std::string bytes_b = slurp(dir_b / "report.json");

    // ---- criterion 7: weight-shift audit ------------------------------------
    {
        bool ok = true;
        std::string detail;
        const auto* alg = cat.find_algebra("Dend2_1");
        const family_claim* p1 = find_claim(cat, "Dend2_1.rb0.P1");
        auto shifted = weight_shift_check(*p1, *alg, rational(1), matrix_convention::row,
                                          rb_tail::standard);
        if (shifted.st != claim_verdict::status::conditional || shifted.conditions.size() != 1 ||
            shifted.conditions[0].str() != "a12") {
            ok = false;
            detail = "direct check did not yield the conditional ideal <a12>";
        }

        bool recorded = false;
        try {
            auto doc = nlohmann::json::parse(bytes_a);
            for (const auto& ws : doc.at("weight_shift")) {
                if (ws.at("claim") == "Dend2_1.rb0.P1" && ws.at("to_weight") == "1" &&
                    ws.at("verdict") == "CONDITIONAL") {
                    for (const auto& cond : ws.at("conditions"))
                        if (cond.get<std::string>() == "a12") recorded = true;
                }
            }
        } catch (const std::exception& e) {
            detail = std::string("report parse: ") + e.what();
        }
        if (!recorded) {
            ok = false;
            if (detail.empty()) detail = "finding missing from report.json";
        }
        line(7, "weight-0 family fails at weight 1 exactly on <a12>, and the report records it",
             ok, detail);
    }

    // ---- criterion 8: determinism and scale ---------------------------------
    {
        bool ok = true;
        std::string detail;
        if (run_code[0] != 0 || run_code[1] != 0) {
            ok = false;
            detail = "verify exited " + std::to_string(run_code[0]) + "/" +
                     std::to_string(run_code[1]);
        } else if (run_ms[0] >= 60000.0 || run_ms[1] >= 60000.0) {
            ok = false;
            detail = "runs took " + std::to_string(run_ms[0]) + " / " +
                     std::to_string(run_ms[1]) + " ms";
        } else if (bytes_a.empty() || bytes_a != bytes_b) {
            ok = false;
            detail = "report.json differs between runs";
        }
        std::ostringstream what;
        what << "full audit is deterministic and fast (" << static_cast<int>(run_ms[0]) << " ms, "
             << bytes_a.size() << " bytes)";
        line(8, what.str(), ok, detail);
    }

    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    std::cout << (all_ok ? "ACCEPTANCE: all criteria passed\n"
                         : "ACCEPTANCE: failures detected\n");
    return all_ok ? 0 : 1;
}
