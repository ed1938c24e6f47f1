#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genproj/duality.hpp"
#include "genproj/lyapunov.hpp"
#include "genproj/sets.hpp"

namespace genproj {

struct ProjectionResult {
    Rational optimal_value;
    std::optional<FinSeq> minimizer;
    bool attained = true;
    std::string set_tag;          // recognized closed form, e.g. "D(1)"; empty otherwise
    int budget_used = 0;
    bool truncation_stable = true;  // value unchanged under an enlarged budget
};

// Nearest point in the l1 distance, by exact LP.
ProjectionResult metric_project(const ConvexSetDesc& set, const FinSeq& x, int budget);

// Minimizer of V(phi, .) over the set. The inner problem
//   g(t) = min { -2<phi,y> : y in set, ||y|| <= t }
// is piecewise linear and convex in t; the solver walks its exact pieces to
// minimize t^2 + g(t) + ||phi||^2 and then recovers a minimizer.
ProjectionResult gen_project(const ConvexSetDesc& set, const TailSeq& phi, int budget);

// Minimum of gen_project over J(x), evaluated at the corners of the duality
// box plus its interior representative; the corner restriction is exact for
// the optimal value since the objective is affine in jx.
ProjectionResult gen_metric_project(const ConvexSetDesc& set, const FinSeq& x, int budget);

// Membership oracles for the (set-valued) solution sets.
bool solution_set_contains(const ConvexSetDesc& set, const TailSeq& phi, const FinSeq& y,
                           int budget);
bool solution_set_contains(const ConvexSetDesc& set, const TailSeq& phi, const FinSeq& y,
                           int budget, const Rational& known_value);
bool metric_solution_contains(const ConvexSetDesc& set, const FinSeq& x, const FinSeq& y,
                              int budget);
bool metric_solution_contains(const ConvexSetDesc& set, const FinSeq& x, const FinSeq& y,
                              int budget, const Rational& known_value);
// Union-of-pieces oracle for gen_metric_project: first tries a shared
// duality-box element of x and y, then the corner representatives.
bool gen_metric_solution_contains(const ConvexSetDesc& set, const FinSeq& x, const FinSeq& y,
                                  int budget);

// Runs gen_metric_project across budgets and reports the value trend; a
// strictly decreasing trend is the non-attainment signal.
struct ProbeReport {
    std::vector<std::pair<int, Rational>> values;
    std::vector<FinSeq> minimizers;  // per budget; the non-attainment witnesses
    bool strictly_decreasing = false;
    bool attained = true;
};
ProbeReport proximality_probe(const ConvexSetDesc& set, const FinSeq& x,
                              const std::vector<int>& budgets);

// Classification of s in c0 against the two projection sets of beta_r:
// in_P  <=>  0 <= s_n <= 2r for all n;  in_Pi  <=>  some s_n equals r.
std::pair<bool, bool> c0_projections(const Rational& r, const TailSeq& s);

// Non-attainment demo in the c/c0 duality with the geometric-tail element
// x = (0; 1, 1/2, 1/4, ...). binary64 evaluation: V(x, w_m) for the flat
// witnesses w_m = (2,...,2,0,...) against a sampled infimum over c0.
struct C0NonattainmentReport {
    std::vector<double> witness_values;
    double sampled_infimum = 0;
    bool attained = false;
};
C0NonattainmentReport c0_geometric_tail_probe(int m_max, int samples, unsigned seed);

}  // namespace genproj
