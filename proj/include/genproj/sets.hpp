#pragma once

#include <vector>

#include "genproj/lp.hpp"
#include "genproj/sequences.hpp"

namespace genproj {

// The feasible sets used throughout: the l1 ball S(r), the simplex D(r)
// (optionally with the index-0 slot of the c-dual model), the hyperplane
// T(k), the sign cones, hulls of finitely many points, and the two c0
// predicate sets S(beta_r) and Z(r).
enum class SetKind { Ball, Simplex, Hyperplane, NonnegCone, NonposCone, Hull, SBall, ZSet };

struct ConvexSetDesc {
    SetKind kind = SetKind::Ball;
    Rational radius;              // Ball/Simplex/SBall/ZSet parameter r
    Rational level;               // Hyperplane parameter k
    bool zero_slot = false;       // Simplex in the c-dual role
    std::vector<FinSeq> points;   // Hull generators
    int dim = 4;                  // default dimension budget

    static ConvexSetDesc ball(const Rational& r, int dim = 4);
    static ConvexSetDesc simplex(const Rational& r, int dim = 4, bool zero_slot = false);
    static ConvexSetDesc hyperplane(const Rational& k, int dim = 4);
    static ConvexSetDesc nonneg_cone(int dim = 4);
    static ConvexSetDesc nonpos_cone(int dim = 4);
    static ConvexSetDesc hull(std::vector<FinSeq> pts);
    static ConvexSetDesc sball(const Rational& r);
    static ConvexSetDesc zset(const Rational& r);
};

bool is_bounded(SetKind kind);
bool is_c0_kind(SetKind kind);

// Exact membership per the set's defining conditions (budget independent).
bool membership(const ConvexSetDesc& set, const FinSeq& y);

// Membership for the c0 predicate sets; s must have tail 0 to belong.
bool membership_c0(const ConvexSetDesc& set, const TailSeq& s);

struct SupportValue {
    bool unbounded = false;
    Rational value;  // sup <phi, y> over the set, valid when !unbounded
};
SupportValue support(const ConvexSetDesc& set, const TailSeq& phi);

// Exact vertex list of a bounded set realized at the given budget.
// Throws for unbounded kinds.
std::vector<FinSeq> vertices(const ConvexSetDesc& set, int budget);

// Finite generator description of the realized set: every member is a
// convex combination of `points` plus a nonnegative combination of `rays`.
struct Decomposition {
    std::vector<FinSeq> points;
    std::vector<FinSeq> rays;
};
Decomposition polyhedral_decomposition(const ConvexSetDesc& set, int budget);

// Hull generators whose support fits inside the budget.
std::vector<FinSeq> realized_hull_points(const ConvexSetDesc& set, int budget);

// Adds rows constraining (yvars[0] .. yvars[n-1]) = (y_1 .. y_n) to lie in
// the realized set. yvars must be free LP variables.
void add_set_constraints(lp::Problem& prob, const ConvexSetDesc& set,
                         const std::vector<int>& yvars, int budget);

int effective_budget(const ConvexSetDesc& set, int requested, int input_max_index);

}  // namespace genproj
