#pragma once

#include <optional>
#include <utility>

#include "genproj/duality.hpp"
#include "genproj/lyapunov.hpp"
#include "genproj/sets.hpp"

namespace genproj::oracle {

// Brute-force rational-grid scans, kept independent of the LP path: they
// enumerate feasible points directly (coordinate grid with definitional
// membership, or a combination grid for hulls) and take exact minima. Only
// meaningful at small budgets; exact whenever the true minimizer lies on
// the grid.
struct GridSpec {
    int denom = 4;  // coordinates move in steps of 1/denom
    int lo = -3;    // coordinate range [lo, hi]
    int hi = 3;
};

struct ScanResult {
    Rational value;
    FinSeq argmin;
};

std::optional<ScanResult> min_metric(const ConvexSetDesc& set, const FinSeq& x, int budget,
                                     const GridSpec& grid = {});
std::optional<ScanResult> min_v(const ConvexSetDesc& set, const TailSeq& phi, int budget,
                                const GridSpec& grid = {});
// min over the corners of J(x) of the V-minimum (the gen-metric value)
std::optional<ScanResult> min_v_over_box(const ConvexSetDesc& set, const FinSeq& x,
                                         int budget, const GridSpec& grid = {});
std::optional<ScanResult> min_l2(const ConvexSetDesc& set, const FinSeq& x, int budget,
                                 const GridSpec& grid = {});

}  // namespace genproj::oracle
