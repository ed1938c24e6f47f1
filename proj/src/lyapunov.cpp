#include "genproj/lyapunov.hpp"

#include <stdexcept>

namespace genproj {

namespace {

LyapunovValue assemble(const Rational& norm_phi, const Rational& norm_x,
                       const Rational& pairing) {
    LyapunovValue out;
    out.value = norm_phi * norm_phi - 2 * pairing + norm_x * norm_x;
    Rational diff = norm_phi - norm_x;
    Rational sum = norm_phi + norm_x;
    out.lower_bound = diff * diff;
    out.upper_bound = sum * sum;
    return out;
}

}  // namespace

LyapunovValue v_eval(const TailSeq& phi, const FinSeq& x) {
    return assemble(norm_sup(phi), norm_l1(x), pair(phi, x));
}

bool v_zero_iff_duality(const TailSeq& phi, const FinSeq& x) {
    bool by_value = v_eval(phi, x).value == 0;
    bool by_box = duality_contains(duality_l1(x), phi);
    if (by_value != by_box)
        throw std::logic_error("V(phi,x)=0 disagrees with the duality box test");
    return by_value;
}

LyapunovValue v_eval_c(const FinSeq& g, const TailSeq& t) {
    return assemble(norm_l1_cdual(g), norm_sup(t), pair_c(g, t));
}

}  // namespace genproj
