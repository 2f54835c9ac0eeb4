#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>

#include "dend/catalog.hpp"
#include "dend/operator_model.hpp"
#include "dend/parse.hpp"
#include "dend/solver.hpp"

using namespace dend;

namespace {

const catalog& shipped_catalog() {
    static catalog cat = load_catalog_file(DEND_CATALOG_PATH);
    return cat;
}

const dendriform_algebra& algebra(const std::string& id) {
    const auto* a = shipped_catalog().find_algebra(id);
    REQUIRE(a != nullptr);
    return *a;
}

const polynomial* find_equation(const operator_system& sys, const std::string& label) {
    for (const auto& [lab, poly] : sys.equations)
        if (lab.str() == label) return &poly;
    return nullptr;
}

}  // namespace

TEST_CASE("kind_identities shapes and rendering") {
    auto rb0 = kind_identities(operator_kind::rota_baxter(rational(0)), rb_tail::standard);
    REQUIRE(rb0.size() == 2);
    CHECK(rb0[0].tag == "prec");
    CHECK(rb0[1].tag == "succ");
    CHECK(render_identity(rb0[0]) == "P(u) <| P(v) = P(P(u) <| v) + P(u <| P(v))");

    auto rb1s = kind_identities(operator_kind::rota_baxter(rational(1)), rb_tail::standard);
    CHECK(render_identity(rb1s[1]) == "P(u) |> P(v) = P(P(u) |> v) + P(u |> P(v)) + P(u |> v)");
    auto rb1p = kind_identities(operator_kind::rota_baxter(rational(1)), rb_tail::paper);
    CHECK(render_identity(rb1p[1]) == "P(u) |> P(v) = P(P(u) |> v) + P(u |> P(v)) + P(u <| v)");
    // The <|-identity is tail-independent.
    CHECK(render_identity(rb1s[0]) == render_identity(rb1p[0]));

    auto nj = kind_identities(operator_kind::nijenhuis(), rb_tail::standard);
    REQUIRE(nj.size() == 2);
    CHECK(render_identity(nj[0]) ==
          "P(u) <| P(v) = P(P(u) <| v) + P(u <| P(v)) - P(P(u <| v))");

    auto re = kind_identities(operator_kind::reynolds(), rb_tail::standard);
    CHECK(render_identity(re[0]) ==
          "P(u) <| P(v) = P(u <| P(v)) + P(P(u) <| v) - P(P(u) <| P(v))");

    auto av = kind_identities(operator_kind::averaging(), rb_tail::standard);
    REQUIRE(av.size() == 4);
    CHECK(av[0].tag == "prec1");
    CHECK(av[1].tag == "prec2");
    CHECK(av[2].tag == "succ1");
    CHECK(av[3].tag == "succ2");
    CHECK(render_identity(av[0]) == "P(u) <| P(v) = P(u <| P(v))");
    CHECK(render_identity(av[1]) == "P(u <| P(v)) = P(P(u) <| v)");
}

TEST_CASE("operator_kind equality ignores weight off the weighted family") {
    CHECK(operator_kind::rota_baxter(rational(0)) != operator_kind::rota_baxter(rational(1)));
    CHECK(operator_kind::reynolds() == operator_kind::reynolds());
    CHECK(operator_kind::reynolds() != operator_kind::nijenhuis());
    CHECK(operator_kind::rota_baxter(rational(1)).display_name() == "Rota-Baxter of weight 1");
    CHECK(operator_kind::averaging().has_weight() == false);
}

TEST_CASE("apply_matrix row and column conventions") {
    auto t = var_table::make({{"a", var_kind::unknown},
                              {"b", var_kind::unknown},
                              {"c", var_kind::unknown},
                              {"d", var_kind::unknown}});
    std::vector<std::vector<polynomial>> m{
        {polynomial::variable(t, 0), polynomial::variable(t, 1)},
        {polynomial::variable(t, 2), polynomial::variable(t, 3)}};
    coeff_vector e1{polynomial::constant(t, rational(1)), polynomial(t)};

    auto row = apply_matrix(m, matrix_convention::row, e1);
    CHECK(row[0] == polynomial::variable(t, 0));  // a
    CHECK(row[1] == polynomial::variable(t, 1));  // b

    auto col = apply_matrix(m, matrix_convention::column, e1);
    CHECK(col[0] == polynomial::variable(t, 0));  // a
    CHECK(col[1] == polynomial::variable(t, 2));  // c
}

TEST_CASE("build_system basic shape") {
    auto sys = build_system(algebra("Dend2_1"), operator_kind::rota_baxter(rational(0)),
                            matrix_convention::row, rb_tail::standard);
    CHECK(sys.algebra_id == "Dend2_1");
    CHECK(sys.equations.size() == 16);  // 2 identities * 4 basis pairs * 2 coordinates
    CHECK(sys.table->size() == 4);      // a11, a12, a21, a22; no algebra parameters
    CHECK(sys.table->name(sys.unknown_index[0][0]) == "a11");
    CHECK(sys.table->name(sys.unknown_index[0][1]) == "a12");
    CHECK(sys.table->name(sys.unknown_index[1][0]) == "a21");
    CHECK(sys.table->name(sys.unknown_index[1][1]) == "a22");
    CHECK(sys.unknown_vars().size() == 4);
    CHECK(sys.parameter_vars().empty());

    auto av = build_system(algebra("Dend2_1"), operator_kind::averaging(),
                           matrix_convention::row, rb_tail::standard);
    CHECK(av.equations.size() == 32);

    auto fam = build_system(algebra("Dend2_2"), operator_kind::reynolds(),
                            matrix_convention::row, rb_tail::standard);
    CHECK(fam.table->size() == 5);
    CHECK(fam.parameter_vars().size() == 1);
    CHECK(fam.table->name(fam.parameter_vars()[0]) == "alpha");
}

TEST_CASE("hand-computed equation: prec(2,2)/e1 on Dend2_1 at weight 0") {
    auto sys = build_system(algebra("Dend2_1"), operator_kind::rota_baxter(rational(0)),
                            matrix_convention::row, rb_tail::standard);
    const polynomial* eq = find_equation(sys, "prec(2,2)/e1");
    REQUIRE(eq != nullptr);
    CHECK(*eq == parse_polynomial("a21^2", sys.table));
    // Both coordinates of the pair are present; the e2 coordinate vanishes.
    const polynomial* zero_eq = find_equation(sys, "prec(2,2)/e2");
    REQUIRE(zero_eq != nullptr);
    CHECK(zero_eq->is_zero());
    // nonzero_equations drops it.
    auto nz = sys.nonzero_equations();
    CHECK(nz.size() < sys.equations.size());
    for (const auto& p : nz) CHECK_FALSE(p.is_zero());
}

TEST_CASE("weight-0 systems are tail-independent, weighted ones are not") {
    const auto& alg = algebra("Dend2_1");
    auto s0 = build_system(alg, operator_kind::rota_baxter(rational(0)), matrix_convention::row,
                           rb_tail::standard);
    auto p0 = build_system(alg, operator_kind::rota_baxter(rational(0)), matrix_convention::row,
                           rb_tail::paper);
    REQUIRE(s0.equations.size() == p0.equations.size());
    for (std::size_t k = 0; k < s0.equations.size(); ++k) {
        CHECK(s0.equations[k].first.str() == p0.equations[k].first.str());
        CHECK(s0.equations[k].second == p0.equations[k].second);
    }

    auto s1 = build_system(alg, operator_kind::rota_baxter(rational(1)), matrix_convention::row,
                           rb_tail::standard);
    auto p1 = build_system(alg, operator_kind::rota_baxter(rational(1)), matrix_convention::row,
                           rb_tail::paper);
    bool any_difference = false;
    for (std::size_t k = 0; k < s1.equations.size(); ++k)
        if (s1.equations[k].second != p1.equations[k].second) any_difference = true;
    CHECK(any_difference);
}

TEST_CASE("row and column systems are transposes of each other") {
    const auto& alg = algebra("Dend2_4");
    auto row_sys = build_system(alg, operator_kind::rota_baxter(rational(1)),
                                matrix_convention::row, rb_tail::standard);
    auto col_sys = build_system(alg, operator_kind::rota_baxter(rational(1)),
                                matrix_convention::column, rb_tail::standard);
    // Same labels in the same order; equations related by swapping a12 <-> a21.
    REQUIRE(row_sys.equations.size() == col_sys.equations.size());
    REQUIRE(*row_sys.table == *col_sys.table);
    std::vector<std::size_t> swap_map{0, 2, 1, 3};  // a11, a21, a12, a22
    for (std::size_t k = 0; k < row_sys.equations.size(); ++k) {
        CHECK(row_sys.equations[k].first.str() == col_sys.equations[k].first.str());
        // Sign normalization may flip under the variable swap, so compare up to sign.
        polynomial swapped = row_sys.equations[k].second.renamed(row_sys.table, swap_map);
        const polynomial& col_eq = col_sys.equations[k].second;
        CHECK((swapped == col_eq || swapped == -col_eq));
    }
}

TEST_CASE("solving the weight-0 system on the first algebra pins the classified family") {
    auto sys = build_system(algebra("Dend2_1"), operator_kind::rota_baxter(rational(0)),
                            matrix_convention::row, rb_tail::standard);
    auto comps =
        solve_components(sys.nonzero_equations(), sys.unknown_vars(), sys.parameter_vars());
    REQUIRE(comps.size() == 1);
    const auto& c = comps[0];
    CHECK(c.fully_solved);
    CHECK(c.residual_equations.empty());
    CHECK(c.inequations.empty());

    std::map<std::string, polynomial> solved;
    for (const auto& [var, value] : c.substitutions) solved[sys.table->name(var)] = value;
    REQUIRE(solved.size() == 3);
    CHECK(solved.at("a11").is_zero());
    CHECK(solved.at("a21").is_zero());
    CHECK(solved.at("a22").is_zero());
    REQUIRE(c.free_variables.size() == 1);
    CHECK(sys.table->name(c.free_variables[0]) == "a12");
}
