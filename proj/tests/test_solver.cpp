#include "doctest.h"

#include <set>

#include "dend/errors.hpp"
#include "dend/parse.hpp"
#include "dend/solver.hpp"

using namespace dend;

namespace {

var_table_ptr xyz_table() {
    return var_table::make({{"x", var_kind::unknown},
                            {"y", var_kind::unknown},
                            {"z", var_kind::unknown}});
}

/// Every equation vanishes and every inequation is nonzero at the point.
bool point_satisfies(const std::vector<polynomial>& eqs, const solution_component& comp,
                     const std::vector<rational>& point) {
    for (const auto& eq : eqs)
        if (!eq.evaluated(point).is_zero()) return false;
    for (const auto& ineq : comp.inequations)
        if (ineq.evaluated(point).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("forced linear solve: single point") {
    auto t = xyz_table();
    std::vector<polynomial> sys{parse_polynomial("x - 2", t), parse_polynomial("y + x", t),
                                parse_polynomial("z - x*y", t)};
    auto comps = solve_components(sys, {0, 1, 2}, {});
    REQUIRE(comps.size() == 1);
    const auto& c = comps[0];
    CHECK(c.fully_solved);
    CHECK(c.free_variables.empty());
    CHECK(c.residual_equations.empty());
    REQUIRE(c.substitutions.size() == 3);
    CHECK(c.substitutions[0].second == polynomial::constant(t, rational(2)));    // x
    CHECK(c.substitutions[1].second == polynomial::constant(t, rational(-2)));   // y
    CHECK(c.substitutions[2].second == polynomial::constant(t, rational(-4)));   // z
}

TEST_CASE("x^2 = 0 forces x = 0 with no spurious branch") {
    auto t = xyz_table();
    auto comps = solve_components({parse_polynomial("x^2", t)}, {0, 1, 2}, {});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].substitutions ==
          std::vector<std::pair<std::size_t, polynomial>>{{0, polynomial(t)}});
    CHECK(comps[0].free_variables == std::vector<std::size_t>{1, 2});
    CHECK(comps[0].inequations.empty());
}

TEST_CASE("repeated-root univariate equations collapse to their squarefree part") {
    auto t = xyz_table();
    // (x - 1)^2 = 0 has the single solution x = 1.
    auto comps = solve_components({parse_polynomial("x^2 - 2*x + 1", t)}, {0, 1, 2}, {});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].fully_solved);
    CHECK(comps[0].substitutions ==
          std::vector<std::pair<std::size_t, polynomial>>{
              {0, polynomial::constant(t, rational(1))}});
    CHECK(comps[0].free_variables == std::vector<std::size_t>{1, 2});

    // (x - 2)^3 = 0 likewise pins x = 2 even with another unknown around.
    auto cubic = solve_components(
        {parse_polynomial("x^3 - 6*x^2 + 12*x - 8", t), parse_polynomial("y - x", t)}, {0, 1}, {});
    REQUIRE(cubic.size() == 1);
    CHECK(cubic[0].fully_solved);
    REQUIRE(cubic[0].substitutions.size() == 2);
    CHECK(cubic[0].substitutions[0].second == polynomial::constant(t, rational(2)));
    CHECK(cubic[0].substitutions[1].second == polynomial::constant(t, rational(2)));
}

TEST_CASE("hyperbola x*y = 1 keeps the nonzero guard") {
    auto t = xyz_table();
    std::vector<polynomial> sys{parse_polynomial("x*y - 1", t)};
    auto comps = solve_components(sys, {0, 1}, {2});
    REQUIRE(comps.size() == 1);
    // Samples satisfy the equation and avoid the excluded locus.
    auto points = component_sample(comps[0], 7, 20);
    CHECK(points.size() == 20);
    for (const auto& p : points) {
        CHECK(point_satisfies(sys, comps[0], p));
        CHECK_FALSE(p[0].is_zero());
    }
}

TEST_CASE("union of two lines splits into two components") {
    auto t = xyz_table();
    // x*y = 0, solutions are the two coordinate lines {x=0} and {y=0}.
    std::vector<polynomial> sys{parse_polynomial("x*y", t)};
    auto comps = solve_components(sys, {0, 1}, {2});
    REQUIRE(comps.size() == 2);
    for (const auto& comp : comps) {
        auto points = component_sample(comp, 11, 10);
        for (const auto& p : points) CHECK(point_satisfies(sys, comp, p));
    }
    // Every solution of the system lies in some component: spot-check (0, 5).
    bool covered = false;
    for (const auto& comp : comps) {
        for (const auto& p : component_sample(comp, 3, 40))
            if (p[0].is_zero() && p[1] == rational(5)) covered = true;
    }
    (void)covered;  // sampling need not hit it; coverage is checked structurally below
    std::set<std::size_t> solved;
    for (const auto& comp : comps)
        for (const auto& [var, value] : comp.substitutions)
            if (value.is_zero()) solved.insert(var);
    CHECK(solved == std::set<std::size_t>{0, 1});
}

TEST_CASE("inconsistent system yields no components") {
    auto t = xyz_table();
    CHECK(solve_components({parse_polynomial("x", t), parse_polynomial("x - 1", t)}, {0, 1, 2},
                           {})
              .empty());
    CHECK(solve_components({parse_polynomial("1", t)}, {0, 1, 2}, {}).empty());
}

TEST_CASE("parameters are never substituted") {
    auto t = var_table::make({{"x", var_kind::unknown}, {"p", var_kind::parameter}});
    // x - p = 0 with p a parameter: x gets solved, p stays free.
    auto comps = solve_components({parse_polynomial("x - p", t)}, {0}, {1});
    REQUIRE(comps.size() == 1);
    REQUIRE(comps[0].substitutions.size() == 1);
    CHECK(comps[0].substitutions[0].first == 0);
    CHECK(comps[0].substitutions[0].second == parse_polynomial("p", t));
    CHECK(comps[0].free_variables == std::vector<std::size_t>{1});
}

TEST_CASE("component_sample is deterministic and respects inequations") {
    auto t = xyz_table();
    auto comps = solve_components({parse_polynomial("x*y - 1", t)}, {0, 1}, {});
    REQUIRE(comps.size() == 1);
    auto a = component_sample(comps[0], 42, 25);
    auto b = component_sample(comps[0], 42, 25);
    CHECK(a == b);
    auto c = component_sample(comps[0], 43, 25);
    CHECK(a != c);  // astronomically unlikely to coincide
}

TEST_CASE("depth limit marks components unfinished instead of looping") {
    auto t = xyz_table();
    solve_limits limits;
    limits.max_depth = 0;
    auto comps = solve_components({parse_polynomial("x*y - 1", t)}, {0, 1}, {}, limits);
    bool any_unfinished = false;
    for (const auto& comp : comps)
        if (!comp.fully_solved) any_unfinished = true;
    CHECK((any_unfinished || comps.empty() || comps[0].residual_equations.empty()));
}

TEST_CASE("divide_exact") {
    auto t = xyz_table();
    polynomial a = parse_polynomial("x^2 - y^2", t);
    polynomial b = parse_polynomial("x - y", t);
    auto q = divide_exact(a, b);
    REQUIRE(q.has_value());
    CHECK(*q == parse_polynomial("x + y", t));
    CHECK_FALSE(divide_exact(parse_polynomial("x^2 + 1", t), b).has_value());
    CHECK(divide_exact(polynomial(t), b).has_value());
}

TEST_CASE("cmp_polynomial is a deterministic total order") {
    auto t = xyz_table();
    polynomial a = parse_polynomial("x + 1", t);
    polynomial b = parse_polynomial("x + 2", t);
    polynomial c = parse_polynomial("x^2", t);
    CHECK(cmp_polynomial(a, a) == 0);
    CHECK(cmp_polynomial(a, b) != 0);
    CHECK(cmp_polynomial(a, b) == -cmp_polynomial(b, a));
    CHECK(cmp_polynomial(c, c) == 0);
}
