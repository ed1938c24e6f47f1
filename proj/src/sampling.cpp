#include "genproj/sampling.hpp"

namespace genproj {

Rational rand_rational(Rng& rng, int lo, int hi, int max_den) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return rat(num(rng), den(rng));
}

Rational rand_positive_rational(Rng& rng, int hi, int max_den) {
    std::uniform_int_distribution<int> num(1, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return rat(num(rng), den(rng));
}

FinSeq rand_finseq(Rng& rng, int dim, int hi) {
    std::uniform_int_distribution<int> count(0, dim);
    std::uniform_int_distribution<int> index(1, dim);
    FinSeq x;
    int k = count(rng);
    for (int j = 0; j < k; ++j) x.set(index(rng), rand_rational(rng, -hi, hi));
    return x;
}

FinSeq rand_simplex_point(Rng& rng, const Rational& r, int dim, bool with_zero_slot) {
    std::uniform_int_distribution<int> num(0, 8);
    int lo = with_zero_slot ? 0 : 1;
    std::vector<Rational> raw;
    Rational total = 0;
    for (int i = lo; i <= dim; ++i) {
        Rational v(num(rng));
        raw.push_back(v);
        total += v;
    }
    FinSeq x;
    if (total == 0) {
        x.set(lo, r);
        return x;
    }
    for (int i = lo; i <= dim; ++i) {
        Rational v = raw[static_cast<size_t>(i - lo)] * r / total;
        if (v != 0) x.set(i, v);
    }
    return x;
}

FinSeq rand_hyperplane_point_off_simplex(Rng& rng, int dim) {
    FinSeq y = rand_simplex_point(rng, Rational(1), dim);
    // push mass up on one coordinate and the same amount below zero on
    // another; the sum stays 1 while the norm exceeds 1
    std::uniform_int_distribution<int> index(1, dim);
    int up = index(rng);
    int down = index(rng);
    while (down == up) down = index(rng);
    Rational bump = rand_positive_rational(rng, 3);
    y.set(up, y.value(up) + bump + 1);
    y.set(down, y.value(down) - bump - 1);
    return y;
}

TailSeq rand_tailseq(Rng& rng, int plen, int hi, bool force_c0) {
    std::uniform_int_distribution<int> count(0, plen);
    int k = count(rng);
    std::vector<Rational> prefix;
    for (int j = 0; j < k; ++j) prefix.push_back(rand_rational(rng, -hi, hi));
    Rational tail = force_c0 ? Rational(0) : rand_rational(rng, -hi, hi);
    return TailSeq(std::move(prefix), tail);
}

TailSeq rand_nonpositive_tailseq(Rng& rng, int plen, int hi) {
    std::uniform_int_distribution<int> count(0, plen);
    int k = count(rng);
    std::vector<Rational> prefix;
    for (int j = 0; j < k; ++j) prefix.push_back(rand_rational(rng, -hi, 0));
    return TailSeq(std::move(prefix), rand_rational(rng, -hi, 0));
}

}  // namespace genproj
