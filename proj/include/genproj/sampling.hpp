#pragma once

#include <random>

#include "genproj/sequences.hpp"

namespace genproj {

using Rng = std::mt19937_64;

// Seeded generators used by the randomized suites; all values are small
// rationals so downstream LP pivots stay cheap.
Rational rand_rational(Rng& rng, int lo, int hi, int max_den = 6);
Rational rand_positive_rational(Rng& rng, int hi, int max_den = 6);

// Finitely supported vector with entries in [-hi, hi], support inside 1..dim.
FinSeq rand_finseq(Rng& rng, int dim, int hi = 3);

// Point of D(r): nonnegative entries with exact sum r.
FinSeq rand_simplex_point(Rng& rng, const Rational& r, int dim, bool with_zero_slot = false);

// Point of T(1) with ||y|| > 1 (so outside D).
FinSeq rand_hyperplane_point_off_simplex(Rng& rng, int dim);

// Eventually constant sequence with prefix length <= plen.
TailSeq rand_tailseq(Rng& rng, int plen, int hi = 3, bool force_c0 = false);

// Nonpositive dual element.
TailSeq rand_nonpositive_tailseq(Rng& rng, int plen, int hi = 3);

}  // namespace genproj
