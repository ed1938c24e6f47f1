#include <doctest.h>

#include "genproj/projections.hpp"
#include "genproj/sampling.hpp"
#include "genproj/variational.hpp"

using namespace genproj;

TEST_CASE("sufficiency check on the worked instances") {
    auto T1 = ConvexSetDesc::hyperplane(rat(1));
    TailSeq gamma({rat(3), rat(1)}, rat(0));
    FinSeq z = atom(1, rat(1));
    auto rep = vi_sufficiency(T1, gamma, z, 4);
    CHECK_FALSE(rep.holds);
    CHECK(rep.violating_y.has_value());

    // nonpositive dual over the nonnegative cone holds at the origin
    auto cone = vi_sufficiency(ConvexSetDesc::nonneg_cone(), TailSeq({rat(-1)}, rat(-2)),
                               FinSeq(), 3);
    CHECK(cone.holds);

    // a dual element of J(z) always certifies z on a set containing z
    auto simplex = vi_sufficiency(ConvexSetDesc::simplex(rat(1)), TailSeq::constant(rat(1)),
                                  atom(2, rat(1)), 3);
    CHECK(simplex.holds);
    REQUIRE(simplex.witness.has_value());
    CHECK(duality_contains(duality_l1(atom(2, rat(1))), *simplex.witness));

    CHECK_THROWS_AS(vi_sufficiency(T1, gamma, atom(1, rat(2)), 4), std::invalid_argument);
}

TEST_CASE("witness satisfies the inequality it claims") {
    Rng rng(29);
    int held = 0;
    for (int t = 0; t < 200; ++t) {
        auto set = (t % 2 == 0) ? ConvexSetDesc::simplex(rat(1)) : ConvexSetDesc::ball(rat(1));
        FinSeq z = rand_simplex_point(rng, rat(1), 3);
        TailSeq phi = rand_tailseq(rng, 3, 2);
        auto rep = vi_sufficiency(set, phi, z, 3);
        if (!rep.holds) continue;
        ++held;
        // verify the infimum over the vertices directly
        for (const auto& v : vertices(set, 3)) {
            Rational lhs = pair(phi, z.minus(v)) - pair(*rep.witness, z.minus(v));
            CHECK(lhs >= 0);
        }
        CHECK(solution_set_contains(set, phi, z, 3));
    }
    CHECK(held > 0);
}

TEST_CASE("universal violation search") {
    auto T1 = ConvexSetDesc::hyperplane(rat(1));
    TailSeq gamma({rat(3), rat(1)}, rat(0));
    FinSeq z = atom(1, rat(1));
    auto ce = vi_counterexample(T1, gamma, z, 4);
    REQUIRE(ce.has_value());
    CHECK(*ce == atom(1, rat(2)).minus(atom(3, rat(1))));

    // the all-ones dual is repaired by itself on the simplex: no violation
    auto none = vi_counterexample(ConvexSetDesc::simplex(rat(1)), TailSeq::constant(rat(1)),
                                  atom(1, rat(1)), 4);
    CHECK_FALSE(none.has_value());
}

TEST_CASE("metric variational characterization") {
    auto T1 = ConvexSetDesc::hyperplane(rat(1));
    FinSeq x = atom(1, rat(3));
    CHECK(metric_vi_check(T1, x, atom(1, rat(1)), 4).holds);
    CHECK_FALSE(metric_vi_check(T1, x, atom(2, rat(1)), 4).holds);

    auto ball = metric_vi_check(ConvexSetDesc::ball(rat(1)), atom(1, rat(2)), atom(1, rat(1)), 2);
    CHECK(ball.holds);
    REQUIRE(ball.witness.has_value());
    CHECK(ball.witness->value(1) == 1);

    CHECK_THROWS_AS(metric_vi_check(T1, atom(1, rat(1)), atom(1, rat(1)), 4),
                    std::invalid_argument);
}

TEST_CASE("metric check equals metric optimality on random instances") {
    Rng rng(31);
    int outside = 0;
    for (int t = 0; t < 150; ++t) {
        auto set = (t % 2 == 0) ? ConvexSetDesc::ball(rat(1)) : ConvexSetDesc::simplex(rat(1));
        FinSeq x = rand_finseq(rng, 3, 3);
        if (membership(set, x)) continue;
        ++outside;
        auto pm = metric_project(set, x, 3);
        CHECK(metric_vi_check(set, x, *pm.minimizer, 3).holds);
        FinSeq other = rand_simplex_point(rng, rat(1), 3);
        if (set.kind == SetKind::Ball) other = other.scaled(rat(1, 2));
        bool vi = metric_vi_check(set, x, other, 3).holds;
        CHECK(vi == (norm_l1(x.minus(other)) == pm.optimal_value));
    }
    CHECK(outside > 60);
}

TEST_CASE("corner audit reports the finite inner values") {
    auto rep = vi_sufficiency(ConvexSetDesc::simplex(rat(1)), TailSeq::constant(rat(1)),
                              atom(1, rat(1)), 3);
    REQUIRE_FALSE(rep.corner_values.empty());
    bool some_zero = false;
    for (const auto& iv : rep.corner_values) {
        REQUIRE(iv.finite);
        some_zero = some_zero || iv.value == 0;
    }
    CHECK(some_zero);
}
