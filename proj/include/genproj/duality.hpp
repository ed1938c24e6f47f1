#pragma once

#include <map>
#include <optional>
#include <vector>

#include "genproj/sequences.hpp"
#include "genproj/sets.hpp"

namespace genproj {

// Exact description of J(x) for x in the l1 model: the support coordinates
// are pinned to ||x|| * sign(x_i), every other coordinate and the constant
// tail range freely over [-||x||, ||x||]. An axis-aligned box, so all the
// set operations below are coordinate-wise.
struct DualityBox {
    Rational norm_value;
    std::map<int, Rational> fixed;
    Rational free_bound;  // equals norm_value

    bool is_zero() const { return norm_value == 0; }
};

DualityBox duality_l1(const FinSeq& x);
bool duality_contains(const DualityBox& box, const TailSeq& phi);

// Hilbert model: J is the identity.
FinSeq duality_l2(const FinSeq& x);

// J(beta_r) inside c* = l1 (members carry the index-0 slot): the simplex of
// nonnegative vectors with full sum r. Only the constant sequences beta_r
// have a closed form here; anything else is rejected.
ConvexSetDesc duality_c(const TailSeq& beta);

bool inverse_duality_contains(const TailSeq& phi, const FinSeq& x);

// J^{-1}(beta_r) = D(r) in the plain l1 model.
ConvexSetDesc inverse_duality_solve_beta(const Rational& r);

// Whether J(x) and J(y) intersect, decided coordinate-wise on the boxes.
bool identical_points(const FinSeq& x, const FinSeq& y);

// A common element of J(x) and J(y) when one exists.
std::optional<TailSeq> identical_points_witness(const FinSeq& x, const FinSeq& y);

bool identical_points_l2(const FinSeq& x, const FinSeq& y);

// Corners of the box over coordinates 1..budget (tail pinned to 0, which is
// always admissible and never pairs against finite support).
std::vector<TailSeq> box_vertices(const DualityBox& box, int budget, size_t cap = 4096);

// Interior representative: free coordinates at 0.
TailSeq box_center(const DualityBox& box, int budget);

}  // namespace genproj
