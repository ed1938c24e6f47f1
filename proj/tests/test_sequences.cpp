#include <doctest.h>

#include "genproj/sampling.hpp"
#include "genproj/sequences.hpp"

using namespace genproj;

TEST_CASE("l1 norm on finitely supported sequences") {
    CHECK(norm_l1(atom(1, rat(1))) == 1);
    CHECK(norm_l1(atom(1, rat(2)).minus(atom(5, rat(1)))) == 3);
    CHECK(norm_l1(FinSeq::of({{1, rat(3)}, {2, rat(1)}})) == 4);
    // the 0 slot never contributes to the plain norm
    FinSeq with_slot = FinSeq::of({{0, rat(7)}, {1, rat(2)}});
    CHECK(norm_l1(with_slot) == 2);
    CHECK(norm_l1_cdual(with_slot) == 9);
}

TEST_CASE("sup norm on eventually constant sequences") {
    CHECK(norm_sup(TailSeq::constant(rat(5, 2))) == rat(5, 2));
    CHECK(norm_sup(TailSeq({rat(3), rat(1)}, rat(0))) == 3);
    CHECK(norm_sup(TailSeq()) == 0);
    CHECK(norm_sup(TailSeq({rat(-4)}, rat(1))) == 4);
}

TEST_CASE("pairing against finite support") {
    TailSeq gamma({rat(3), rat(1)}, rat(0));
    CHECK(pair(gamma, atom(1, rat(1))) == 3);
    CHECK(pair(TailSeq::constant(rat(1)), FinSeq::of({{2, rat(1, 2)}, {7, rat(1, 2)}})) == 1);
    CHECK(pair(gamma, FinSeq()) == 0);
    CHECK_THROWS_AS(pair(gamma, atom(0, rat(1))), std::invalid_argument);
}

TEST_CASE("c pairing uses the limit slot") {
    CHECK(pair_c(atom(1, rat(1)), TailSeq({rat(5)}, rat(2))) == 5);
    CHECK(pair_c(atom(0, rat(1)), TailSeq({}, rat(7))) == 7);
    // slotted simplex member against the constant dual: full mass times r
    FinSeq y = FinSeq::of({{0, rat(1, 2)}, {1, rat(1)}, {3, rat(1, 2)}});
    CHECK(pair_c(y, TailSeq::constant(rat(2))) == 4);
}

TEST_CASE("representation normalization") {
    // prefix entries equal to the tail fold away
    TailSeq a({rat(2), rat(2), rat(2)}, rat(2));
    CHECK(a == TailSeq::constant(rat(2)));
    CHECK(a.prefix_len() == 0);
    TailSeq b({rat(1), rat(2), rat(2)}, rat(2));
    CHECK(b.prefix_len() == 1);
    // zero values never occupy entries
    FinSeq x;
    x.set(3, rat(1));
    x.set(3, rat(0));
    CHECK(x.is_zero());
}

TEST_CASE("value access past the prefix returns the tail") {
    TailSeq t({rat(3), rat(1)}, rat(-2));
    CHECK(t.value(1) == 3);
    CHECK(t.value(2) == 1);
    CHECK(t.value(3) == -2);
    CHECK(t.value(100) == -2);
    CHECK_THROWS_AS(t.value(0), std::invalid_argument);
}

TEST_CASE("triangle inequality and Hoelder bound, randomized") {
    Rng rng(7);
    for (int t = 0; t < 1000; ++t) {
        FinSeq x = rand_finseq(rng, 6);
        FinSeq y = rand_finseq(rng, 6);
        CHECK(norm_l1(x.plus(y)) <= norm_l1(x) + norm_l1(y));

        TailSeq p = rand_tailseq(rng, 5);
        TailSeq q = rand_tailseq(rng, 5);
        CHECK(norm_sup(p.minus(q)) <= norm_sup(p) + norm_sup(q));
        CHECK(rabs(pair(p, x)) <= norm_sup(p) * norm_l1(x));
    }
}
