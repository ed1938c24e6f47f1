#include <doctest.h>

#include "genproj/duality.hpp"
#include "genproj/sampling.hpp"

using namespace genproj;

TEST_CASE("duality box of the l1 model") {
    auto box = duality_l1(atom(1, rat(1)));
    CHECK(box.norm_value == 1);
    REQUIRE(box.fixed.size() == 1);
    CHECK(box.fixed.at(1) == 1);
    CHECK(duality_contains(box, TailSeq::constant(rat(1))));
    CHECK_FALSE(duality_contains(box, TailSeq({rat(1), rat(2)}, rat(0))));

    auto zero = duality_l1(FinSeq());
    CHECK(zero.is_zero());
    CHECK(duality_contains(zero, TailSeq()));
    CHECK_FALSE(duality_contains(zero, TailSeq::constant(rat(1))));

    // gamma_m = (3, 0, ..., -3 at m) lies in J((3,0,...))
    auto box3 = duality_l1(atom(1, rat(3)));
    for (int m = 2; m <= 5; ++m) {
        std::vector<Rational> pre(static_cast<size_t>(m), rat(0));
        pre[0] = rat(3);
        pre[static_cast<size_t>(m) - 1] = rat(-3);
        CHECK(duality_contains(box3, TailSeq(std::move(pre), rat(0))));
    }
    CHECK_THROWS_AS(duality_l1(atom(0, rat(1))), std::invalid_argument);
}

TEST_CASE("box elements satisfy the defining identities") {
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        FinSeq x = rand_finseq(rng, 5);
        auto box = duality_l1(x);
        for (const auto& phi : box_vertices(box, 5)) {
            CHECK(norm_sup(phi) == box.norm_value);
            CHECK(pair(phi, x) == box.norm_value * box.norm_value);
        }
    }
}

TEST_CASE("c-model duality of the constant sequences") {
    auto dr = duality_c(TailSeq::constant(rat(2)));
    CHECK(dr.kind == SetKind::Simplex);
    CHECK(dr.zero_slot);
    CHECK(dr.radius == 2);
    CHECK(membership(dr, atom(0, rat(2))));
    CHECK(membership(dr, FinSeq::of({{0, rat(1)}, {4, rat(1)}})));
    CHECK_FALSE(membership(dr, FinSeq::of({{0, rat(3)}, {4, rat(-1)}})));
    CHECK_THROWS_AS(duality_c(TailSeq({rat(1)}, rat(2))), std::invalid_argument);
    CHECK_THROWS_AS(duality_c(TailSeq::constant(rat(-1))), std::invalid_argument);
}

TEST_CASE("inverse duality of the constant dual") {
    auto d1 = inverse_duality_solve_beta(rat(1));
    CHECK(membership(d1, FinSeq::of({{1, rat(1, 2)}, {2, rat(1, 2)}})));
    CHECK(membership(inverse_duality_solve_beta(rat(2)), atom(1, rat(2))));
    CHECK_THROWS_AS(inverse_duality_solve_beta(rat(0)), std::invalid_argument);

    CHECK(inverse_duality_contains(TailSeq::constant(rat(1)), atom(2, rat(1))));
    CHECK_FALSE(inverse_duality_contains(TailSeq::constant(rat(1)),
                                         FinSeq::of({{1, rat(3, 2)}, {2, rat(-1, 2)}})));
    CHECK(inverse_duality_contains(TailSeq(), FinSeq()));
}

TEST_CASE("generalized identical points") {
    FinSeq e1 = atom(1, rat(1)), e2 = atom(2, rat(1));
    CHECK(identical_points(e1, e2));
    CHECK_FALSE(identical_points(e1, atom(1, rat(2))));
    CHECK(identical_points(FinSeq(), FinSeq()));
    CHECK_FALSE(identical_points(e1, atom(1, rat(-1))));

    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        FinSeq x = rand_finseq(rng, 4);
        FinSeq y = rand_finseq(rng, 4);
        CHECK(identical_points(x, x));
        CHECK(identical_points(x, y) == identical_points(y, x));
        if (identical_points(x, y)) {
            CHECK(norm_l1(x) == norm_l1(y));
            auto w = identical_points_witness(x, y);
            REQUIRE(w.has_value());
            CHECK(duality_contains(duality_l1(x), *w));
            CHECK(duality_contains(duality_l1(y), *w));
        }
    }
}

TEST_CASE("Hilbert model collapses to equality") {
    FinSeq a = atom(1, rat(1));
    CHECK(duality_l2(a) == a);
    CHECK(identical_points_l2(a, a));
    CHECK_FALSE(identical_points_l2(a, atom(2, rat(1))));
}

TEST_CASE("corner enumeration respects the cap") {
    auto box = duality_l1(atom(1, rat(1)));
    CHECK(box_vertices(box, 3).size() == 4);
    CHECK_THROWS_AS(box_vertices(box, 30, 16), std::length_error);
    CHECK(box_center(box, 3).value(1) == 1);
    CHECK(box_center(box, 3).value(2) == 0);
}
