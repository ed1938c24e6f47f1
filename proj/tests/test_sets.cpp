#include <doctest.h>

#include "genproj/oracle.hpp"
#include "genproj/sampling.hpp"
#include "genproj/sets.hpp"

using namespace genproj;

TEST_CASE("membership per variant") {
    auto T1 = ConvexSetDesc::hyperplane(rat(1));
    CHECK(membership(T1, atom(1, rat(1))));
    FinSeq half = FinSeq::of({{1, rat(1, 2)}, {2, rat(1, 2)}});
    CHECK(membership(T1, half));
    CHECK(membership(ConvexSetDesc::simplex(rat(1)), half));
    CHECK_FALSE(membership(ConvexSetDesc::ball(rat(1)), atom(1, rat(2))));
    CHECK(membership(ConvexSetDesc::nonneg_cone(), atom(3, rat(5))));
    CHECK_FALSE(membership(ConvexSetDesc::nonneg_cone(), atom(3, rat(-5))));
    CHECK(membership(ConvexSetDesc::nonpos_cone(), FinSeq()));
}

TEST_CASE("hull membership is decided exactly") {
    auto hull = ConvexSetDesc::hull({atom(1, rat(2)), atom(2, rat(2))});
    CHECK(membership(hull, FinSeq::of({{1, rat(1)}, {2, rat(1)}})));
    CHECK(membership(hull, atom(1, rat(2))));
    CHECK_FALSE(membership(hull, atom(1, rat(1))));
    CHECK_FALSE(membership(hull, FinSeq::of({{1, rat(2)}, {2, rat(2)}})));
}

TEST_CASE("vertex enumeration") {
    auto verts = vertices(ConvexSetDesc::simplex(rat(1)), 3);
    REQUIRE(verts.size() == 3);
    for (const auto& v : verts) CHECK(norm_l1(v) == 1);

    auto ball = vertices(ConvexSetDesc::ball(rat(1)), 2);
    CHECK(ball.size() == 4);

    // interior generators are pruned
    auto hull = ConvexSetDesc::hull(
        {atom(1, rat(2)), atom(2, rat(2)), FinSeq::of({{1, rat(1)}, {2, rat(1)}})});
    CHECK(vertices(hull, 2).size() == 2);

    CHECK_THROWS_AS(vertices(ConvexSetDesc::hyperplane(rat(1)), 3), std::invalid_argument);
    CHECK_THROWS_AS(vertices(ConvexSetDesc::nonneg_cone(), 3), std::invalid_argument);
}

TEST_CASE("every vertex is a member; members are hulls of vertices") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        auto set = (t % 2 == 0) ? ConvexSetDesc::ball(rand_positive_rational(rng, 3))
                                : ConvexSetDesc::simplex(rand_positive_rational(rng, 3));
        auto verts = vertices(set, 3);
        for (const auto& v : verts) CHECK(membership(set, v));
        FinSeq m = (set.kind == SetKind::Ball)
                       ? rand_simplex_point(rng, set.radius, 3).scaled(rat(1, 2))
                       : rand_simplex_point(rng, set.radius, 3);
        CHECK(membership(ConvexSetDesc::hull(verts), m));
    }
}

TEST_CASE("support values and unboundedness") {
    TailSeq gamma({rat(3), rat(1)}, rat(0));
    auto sb = support(ConvexSetDesc::ball(rat(1)), gamma);
    CHECK_FALSE(sb.unbounded);
    CHECK(sb.value == 3);

    auto st = support(ConvexSetDesc::hyperplane(rat(1)), TailSeq::constant(rat(1)));
    CHECK_FALSE(st.unbounded);
    CHECK(st.value == 1);

    CHECK(support(ConvexSetDesc::hyperplane(rat(1)), gamma).unbounded);
    CHECK(support(ConvexSetDesc::nonneg_cone(), gamma).unbounded);
    auto sc = support(ConvexSetDesc::nonneg_cone(), TailSeq({rat(-1)}, rat(-2)));
    CHECK_FALSE(sc.unbounded);
    CHECK(sc.value == 0);
    auto ss = support(ConvexSetDesc::simplex(rat(2)), gamma);
    CHECK(ss.value == 6);
}

TEST_CASE("polyhedral decompositions regenerate their sets") {
    auto decomp = polyhedral_decomposition(ConvexSetDesc::hyperplane(rat(1)), 3);
    REQUIRE(decomp.points.size() == 1);
    CHECK(decomp.rays.size() == 4);
    for (const auto& r : decomp.rays) {
        Rational s = 0;
        for (const auto& [i, v] : r.entries()) s += v;
        CHECK(s == 0);  // rays stay inside the hyperplane's direction space
    }
    auto cone = polyhedral_decomposition(ConvexSetDesc::nonneg_cone(), 3);
    CHECK(cone.points.size() == 1);
    CHECK(cone.rays.size() == 3);
}

TEST_CASE("c0 predicate sets") {
    auto sball = ConvexSetDesc::sball(rat(1));
    auto zset = ConvexSetDesc::zset(rat(1));
    CHECK(membership_c0(sball, TailSeq()));
    CHECK(membership_c0(sball, TailSeq({rat(2)}, rat(0))));
    CHECK_FALSE(membership_c0(sball, TailSeq({rat(3)}, rat(0))));
    CHECK_FALSE(membership_c0(sball, TailSeq({rat(-1, 2)}, rat(0))));
    CHECK(membership_c0(zset, TailSeq({rat(0), rat(1)}, rat(0))));
    CHECK_FALSE(membership_c0(zset, TailSeq({rat(1, 2)}, rat(0))));
    CHECK_FALSE(membership_c0(zset, TailSeq({rat(1)}, rat(2))));  // not in c0
    CHECK_THROWS_AS(membership(sball, FinSeq()), std::invalid_argument);
}

TEST_CASE("grid oracle agrees with closed-form minima") {
    // distance from (3,0,...) to the hyperplane is 2, attained on the grid
    auto m = oracle::min_metric(ConvexSetDesc::hyperplane(rat(1)), atom(1, rat(3)), 3);
    REQUIRE(m.has_value());
    CHECK(m->value == 2);
    // V-minimum of the all-ones dual over the hyperplane is 0
    auto v = oracle::min_v(ConvexSetDesc::hyperplane(rat(1)), TailSeq::constant(rat(1)), 3);
    REQUIRE(v.has_value());
    CHECK(v->value == 0);
    // hull scan hits the closest generator
    auto h = oracle::min_metric(ConvexSetDesc::hull({atom(1, rat(2)), atom(2, rat(1))}),
                                FinSeq(), 2);
    REQUIRE(h.has_value());
    CHECK(h->value == 1);
}
