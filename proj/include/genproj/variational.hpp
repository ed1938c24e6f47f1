#pragma once

#include <optional>
#include <vector>

#include "genproj/duality.hpp"
#include "genproj/sets.hpp"

namespace genproj {

// Audit entry: the exact inner value inf_{y in set} <phi - jz, z - y> at one
// corner of the duality box; finite == false means the infimum is -infinity
// along a recession direction.
struct InnerValue {
    TailSeq corner;
    bool finite = true;
    Rational value;
};

struct VIReport {
    bool holds = false;                 // some jz in Jz satisfies the inequality on the set
    std::optional<TailSeq> witness;     // such a jz, when holds
    std::optional<FinSeq> violating_y;  // a y violating it for every jz, when found
    std::vector<InnerValue> corner_values;
};

// Existence of jz in Jz with <phi - jz, z - y> >= 0 for all y in the
// realized set. The conditions are linear in jz (one row per generator
// point, one per recession ray), so the search over the box is a single
// exact feasibility program.
VIReport vi_sufficiency(const ConvexSetDesc& set, const TailSeq& phi, const FinSeq& z,
                        int budget);

// Searches for y-bar in the set with max_{jz in Jz} <phi - jz, z - y-bar> < 0,
// i.e. a violation no duality selection can repair. Scans z + k(e_i - e_m)
// shifts and the set's generator points. The maximum over the box is closed
// form since the box is axis aligned.
std::optional<FinSeq> vi_counterexample(const ConvexSetDesc& set, const TailSeq& phi,
                                        const FinSeq& z, int budget);

// Metric variant: existence of j in J(x - z) with <j, z - y> >= 0 on the
// set. Requires z in the set and x outside it.
VIReport metric_vi_check(const ConvexSetDesc& set, const FinSeq& x, const FinSeq& z,
                         int budget);

}  // namespace genproj
