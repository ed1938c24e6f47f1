#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "genproj/chebyshev.hpp"
#include "genproj/expr.hpp"

using namespace genproj;
using namespace genproj::cheb;

TEST_CASE("maximizing sets") {
    auto id = GridFunction::sample([](double t) { return t; });
    auto m1 = maximizing_set(id);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == doctest::Approx(1.0));

    auto bump = GridFunction::sample([](double t) { return t * (1 - t); });
    auto m2 = maximizing_set(bump);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == doctest::Approx(0.5));

    auto osc = GridFunction::sample([](double t) { return std::cos(4 * M_PI * t); });
    auto m3 = maximizing_set(osc);
    REQUIRE(m3.size() == 5);
    for (size_t i = 0; i < 5; ++i) CHECK(m3[i] == doctest::Approx(0.25 * i).epsilon(1e-6));

    CHECK_THROWS_AS(maximizing_set(GridFunction::sample([](double) { return 0.0; })),
                    std::invalid_argument);
}

TEST_CASE("atomic duality measures") {
    auto id = GridFunction::sample([](double t) { return t; });
    auto mu = duality_measure(id, {1.0}, {1.0});
    REQUIRE(mu.atoms.size() == 1);
    CHECK(mu.atoms[0].t == doctest::Approx(1.0));
    CHECK(mu.atoms[0].mass == doctest::Approx(1.0));

    auto osc = GridFunction::sample([](double t) { return std::cos(4 * M_PI * t); });
    auto mu2 = duality_measure(osc, {0.0, 0.25}, {0.5, 0.5});
    CHECK(mu2.atoms[0].mass == doctest::Approx(0.5));
    CHECK(mu2.atoms[1].mass == doctest::Approx(-0.5));

    auto line = GridFunction::sample([](double t) { return 1 - 2 * t; });
    auto mu3 = duality_measure(line, {0.0, 1.0}, {0.5, 0.5});
    CHECK(mu3.atoms[0].mass == doctest::Approx(0.5));
    CHECK(mu3.atoms[1].mass == doctest::Approx(-0.5));
    CHECK(mu3.total_variation() == doctest::Approx(1.0));

    // atoms must sit inside the maximizing set
    CHECK_THROWS_AS(duality_measure(id, {0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(duality_measure(id, {1.0}, {0.5}), std::invalid_argument);
}

TEST_CASE("exchange algorithm levels") {
    auto sq = GridFunction::sample([](double t) { return t * t; });
    auto [p1, c1] = remez(sq, 1);
    CHECK(c1.converged);
    CHECK(std::fabs(c1.level - 0.125) < 1e-9);
    CHECK(p1.coeffs[1] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(p1.coeffs[0] == doctest::Approx(-0.125).epsilon(1e-6));
    CHECK(equioscillation_verify(sq, p1, 1));
    REQUIRE(c1.points.size() == 3);

    auto id = GridFunction::sample([](double t) { return t; });
    auto [p2, c2] = remez(id, 0);
    CHECK(std::fabs(c2.level - 0.5) < 1e-9);
    CHECK(p2.coeffs[0] == doctest::Approx(0.5));

    auto [p3, c3] = remez(id, 1);
    CHECK(c3.level < 1e-9);

    // a non-optimal polynomial fails the alternation count
    CHECK_FALSE(equioscillation_verify(sq, Polynomial{{0.0, 1.0}}, 1));
}

TEST_CASE("membership in the polynomial projection") {
    auto id = GridFunction::sample([](double t) { return t; });
    CHECK(gmp_membership(id, Polynomial{{1.0}}));
    CHECK_FALSE(gmp_membership(id, Polynomial{{0.0}}));
    CHECK(gmp_membership(id, Polynomial{{0.0, 1.0}}));
    // equal norm but no shared maximizing point
    CHECK_FALSE(gmp_membership(id, Polynomial{{1.0, -1.0}}));
}

TEST_CASE("member families") {
    auto id = GridFunction::sample([](double t) { return t; });
    auto lines = gmp_families(id, 1, 5);
    REQUIRE(lines.size() == 5);
    for (const auto& q : lines) {
        CHECK(gmp_membership(id, q));
        CHECK(q(1.0) == doctest::Approx(1.0));
    }
    auto consts = gmp_families(id, 0, 3);
    REQUIRE(consts.size() == 1);
    CHECK(consts[0].coeffs[0] == doctest::Approx(1.0));

    auto bump = GridFunction::sample([](double t) { return 4 * t * (1 - t); });
    auto quads = gmp_families(bump, 2, 4);
    REQUIRE(quads.size() == 4);
    for (const auto& q : quads) {
        CHECK(gmp_membership(bump, q));
        CHECK(q(0.5) == doctest::Approx(1.0));
    }
}

TEST_CASE("rescaling route") {
    auto id = GridFunction::sample([](double t) { return t; });
    auto s1 = gmp_scaled(id, Polynomial{{0.0, 2.0}});
    REQUIRE(s1.has_value());
    CHECK(s1->coeffs[1] == doctest::Approx(1.0));

    auto s2 = gmp_scaled(id, Polynomial{{0.0, -3.0}});
    REQUIRE(s2.has_value());
    CHECK(s2->coeffs[1] == doctest::Approx(1.0));

    CHECK_FALSE(gmp_scaled(id, Polynomial{{0.0, 1.0, -1.0}}).has_value());
    CHECK_THROWS_AS(gmp_scaled(id, Polynomial{{0.0}}), std::invalid_argument);
}

TEST_CASE("agreement sets") {
    auto id = GridFunction::sample([](double t) { return t; });
    auto self = agreement_set(id, id);
    REQUIRE(self.size() == 1);
    CHECK(self[0] == doctest::Approx(1.0));

    auto one = GridFunction::sample([](double) { return 1.0; });
    auto with_const = agreement_set(id, one);
    REQUIRE(with_const.size() == 1);
    CHECK(with_const[0] == doctest::Approx(1.0));

    auto neg = GridFunction::sample([](double t) { return -t; });
    CHECK(agreement_set(id, neg).empty());
}

TEST_CASE("polynomial norms on the refined grid") {
    CHECK(Polynomial{{-1.0, 2.0}}.norm() == doctest::Approx(1.0));
    CHECK(Polynomial{{0.0, 4.0, -4.0}}.norm() == doctest::Approx(1.0));
}

TEST_CASE("expression parser") {
    auto f = parse_expression("t^2");
    CHECK(f(0.5) == doctest::Approx(0.25));
    auto g = parse_expression("cos(4*pi*t)");
    CHECK(g(0.25) == doctest::Approx(-1.0));
    auto h = parse_expression("1/2 + t*(1 - t) - abs(t - 1/2)");
    CHECK(h(0.5) == doctest::Approx(0.75));
    auto k = parse_expression("pow(t, 3) + exp(0) - sin(0)");
    CHECK(k(1.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(parse_expression("t +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("foo(t)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("(t"), std::invalid_argument);
}
