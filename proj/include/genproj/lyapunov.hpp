#pragma once

#include "genproj/duality.hpp"
#include "genproj/sequences.hpp"

namespace genproj {

// V(phi, x) together with its two-sided norm bounds.
struct LyapunovValue {
    Rational value;
    Rational lower_bound;  // (||phi|| - ||x||)^2
    Rational upper_bound;  // (||phi|| + ||x||)^2
};

// V(phi, x) = ||phi||^2 - 2<phi, x> + ||x||^2 in the l_infty/l1 duality.
LyapunovValue v_eval(const TailSeq& phi, const FinSeq& x);

// V(phi, x) == 0 iff phi in J(x). Evaluates both sides and insists they
// agree; a mismatch would be an internal solver fault.
bool v_zero_iff_duality(const TailSeq& phi, const FinSeq& x);

// The c*/c variant: g in l1 = c*, t in c, pairing pair_c, sup norm on t.
LyapunovValue v_eval_c(const FinSeq& g, const TailSeq& t);

}  // namespace genproj
