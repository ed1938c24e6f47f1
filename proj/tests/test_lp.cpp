#include <doctest.h>

#include "genproj/lp.hpp"

using namespace genproj;
using namespace genproj::lp;

TEST_CASE("equality-constrained minimum") {
    Problem p;
    int a = p.add_var(), b = p.add_var();
    p.set_objective(a, rat(1));
    p.add_row({{a, rat(1)}, {b, rat(1)}}, Rel::EQ, rat(1));
    auto sol = solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.value == 0);
    CHECK(sol.x[0] == 0);
    CHECK(sol.x[1] == 1);
}

TEST_CASE("two absolute deviations over a free variable") {
    // min |2-y| + |1-y|; scanning y over quarters on [-1,4] gives 1
    Problem p;
    int y = p.add_var(true);
    int s1 = p.add_var(), s2 = p.add_var();
    p.set_objective(s1, rat(1));
    p.set_objective(s2, rat(1));
    p.add_row({{s1, rat(1)}, {y, rat(1)}}, Rel::GE, rat(2));
    p.add_row({{s1, rat(1)}, {y, rat(-1)}}, Rel::GE, rat(-2));
    p.add_row({{s2, rat(1)}, {y, rat(1)}}, Rel::GE, rat(1));
    p.add_row({{s2, rat(1)}, {y, rat(-1)}}, Rel::GE, rat(-1));
    auto sol = solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.value == 1);
    CHECK(sol.x[0] >= 1);
    CHECK(sol.x[0] <= 2);
}

TEST_CASE("support of the cross-polytope") {
    // max y1 + y2 over ||y|| <= 1 equals 1
    Problem p;
    int y1 = p.add_var(true), y2 = p.add_var(true);
    int u1 = p.add_var(), u2 = p.add_var();
    p.set_objective(y1, rat(-1));
    p.set_objective(y2, rat(-1));
    for (auto [u, y] : {std::pair{u1, y1}, std::pair{u2, y2}}) {
        p.add_row({{u, rat(1)}, {y, rat(-1)}}, Rel::GE, rat(0));
        p.add_row({{u, rat(1)}, {y, rat(1)}}, Rel::GE, rat(0));
    }
    p.add_row({{u1, rat(1)}, {u2, rat(1)}}, Rel::LE, rat(1));
    auto sol = solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.value == -1);
}

TEST_CASE("unbounded ray certificate") {
    Problem p;
    int y = p.add_var(true);
    int z = p.add_var();
    p.set_objective(y, rat(1));
    p.add_row({{y, rat(1)}, {z, rat(-1)}}, Rel::LE, rat(0));  // y <= z
    auto sol = solve(p);
    REQUIRE(sol.status == Status::Unbounded);
    REQUIRE(sol.ray.size() == 2);
    // the ray improves the objective and preserves feasibility
    Rational drop = sol.ray[0] * rat(1);
    CHECK(drop < 0);
    CHECK(sol.ray[0] - sol.ray[1] <= 0);
    CHECK(sol.ray[1] >= 0);
}

TEST_CASE("infeasibility certificate") {
    Problem p;
    int y = p.add_var();
    int r1 = p.add_row({{y, rat(1)}}, Rel::LE, rat(-1));
    auto sol = solve(p);
    REQUIRE(sol.status == Status::Infeasible);
    REQUIRE(sol.farkas.size() == 1);
    // y_LE <= 0 and the combined inequality is contradictory:
    // farkas * (row) gives (farkas * a) y >= farkas * b with farkas * a <= 0
    // on nonnegative variables and farkas * b > 0
    CHECK(sol.farkas[static_cast<size_t>(r1)] <= 0);
    CHECK(sol.farkas[static_cast<size_t>(r1)] * rat(1) <= 0);
    CHECK(sol.farkas[static_cast<size_t>(r1)] * rat(-1) > 0);
}

TEST_CASE("infeasibility certificate across two rows") {
    Problem p;
    int y = p.add_var(true);
    int r1 = p.add_row({{y, rat(1)}}, Rel::GE, rat(2));
    int r2 = p.add_row({{y, rat(1)}}, Rel::LE, rat(1));
    auto sol = solve(p);
    REQUIRE(sol.status == Status::Infeasible);
    const Rational& f1 = sol.farkas[static_cast<size_t>(r1)];
    const Rational& f2 = sol.farkas[static_cast<size_t>(r2)];
    CHECK(f1 >= 0);
    CHECK(f2 <= 0);
    CHECK(f1 + f2 == 0);           // the variable cancels (it is free)
    CHECK(f1 * 2 + f2 * 1 > 0);    // but the right-hand sides do not
}

TEST_CASE("parametric piece of a capped minimization") {
    // g(t) = min { -y : 0 <= y <= 2, y <= t }
    auto build = [] {
        Problem p;
        int y = p.add_var();
        p.set_objective(y, rat(-1));
        p.add_row({{y, rat(1)}}, Rel::LE, rat(2));
        p.add_row({{y, rat(1)}}, Rel::LE, rat(0));  // rhs replaced by t
        return p;
    };
    auto piece1 = solve_parametric(build(), 1, rat(1));
    REQUIRE(piece1.status == Status::Optimal);
    CHECK(piece1.value == -1);
    CHECK(piece1.slope == -1);
    CHECK(piece1.lo <= 1);
    CHECK(piece1.hi == 2);

    auto piece2 = solve_parametric(build(), 1, rat(3));
    REQUIRE(piece2.status == Status::Optimal);
    CHECK(piece2.value == -2);
    CHECK(piece2.slope == 0);
    CHECK(piece2.lo == 2);
    CHECK(piece2.hi_open);
}

TEST_CASE("degenerate parametric point keeps a valid subgradient") {
    // at t = 2 both rows bind; any reported slope must support g
    auto build = [] {
        Problem p;
        int y = p.add_var();
        p.set_objective(y, rat(-1));
        p.add_row({{y, rat(1)}}, Rel::LE, rat(2));
        p.add_row({{y, rat(1)}}, Rel::LE, rat(0));
        return p;
    };
    auto piece = solve_parametric(build(), 1, rat(2));
    REQUIRE(piece.status == Status::Optimal);
    CHECK(piece.value == -2);
    CHECK(piece.slope <= 0);
    CHECK(piece.slope >= -1);
}
