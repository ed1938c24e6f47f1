#pragma once

#include "genproj/sequences.hpp"
#include "genproj/sets.hpp"

namespace genproj {

// Squared-Euclidean projection onto the realized set, exact over rationals.
// Complete active-set enumeration, so it is meant for small budgets (<= 3
// coordinates for the ball). In the Hilbert model the three projection maps
// coincide, so this one solver serves all of them.
struct L2Result {
    Rational value_sq;  // squared distance
    FinSeq minimizer;
};

L2Result l2_project(const ConvexSetDesc& set, const FinSeq& x, int budget);

}  // namespace genproj
