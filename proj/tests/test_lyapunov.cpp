#include <doctest.h>

#include "genproj/lyapunov.hpp"
#include "genproj/sampling.hpp"

using namespace genproj;

TEST_CASE("functional values from the worked instances") {
    TailSeq gamma({rat(3), rat(1)}, rat(0));
    FinSeq z = atom(1, rat(1));
    CHECK(v_eval(gamma, z).value == 4);

    FinSeq d = FinSeq::of({{1, rat(1, 3)}, {2, rat(1, 3)}, {3, rat(1, 3)}});
    CHECK(v_eval(TailSeq::constant(rat(1)), d).value == 0);

    FinSeq x = FinSeq::of({{2, rat(-2)}, {5, rat(1)}});
    CHECK(v_eval(TailSeq(), x).value == 9);
}

TEST_CASE("zero set matches the duality box") {
    TailSeq ones = TailSeq::constant(rat(1));
    CHECK(v_zero_iff_duality(ones, atom(1, rat(1))));
    CHECK_FALSE(v_zero_iff_duality(TailSeq({rat(3), rat(1)}, rat(0)), atom(1, rat(1))));
    CHECK(v_zero_iff_duality(TailSeq(), FinSeq()));
}

TEST_CASE("c-model functional") {
    Rational r = rat(2);
    // atom at index 1 against the zero sequence
    CHECK(v_eval_c(atom(1, r), TailSeq()).value == r * r);
    // slotted member against a flat pattern covering part of the mass
    FinSeq g = FinSeq::of({{0, rat(1, 2)}, {1, rat(1)}, {2, rat(1, 2)}});
    TailSeq e2({r, r}, rat(0));
    CHECK(v_eval_c(g, e2).value == r * r - 2 * r * (rat(1) + rat(1, 2)) + r * r);
    // slot-free member with the support covered: exact zero
    CHECK(v_eval_c(FinSeq::of({{1, rat(1)}, {2, rat(1)}}), e2).value == 0);
}

TEST_CASE("bounds and convexity, randomized") {
    Rng rng(13);
    const Rational lams[] = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
    for (int t = 0; t < 500; ++t) {
        FinSeq x = rand_finseq(rng, 5);
        FinSeq x2 = rand_finseq(rng, 5);
        TailSeq p = rand_tailseq(rng, 4);
        auto lv = v_eval(p, x);
        CHECK(lv.lower_bound <= lv.value);
        CHECK(lv.value <= lv.upper_bound);
        CHECK(lv.value >= 0);
        for (const auto& lam : lams) {
            FinSeq mix = x.scaled(lam).plus(x2.scaled(1 - lam));
            CHECK(v_eval(p, mix).value <=
                  lam * v_eval(p, x).value + (1 - lam) * v_eval(p, x2).value);
        }
    }
}
