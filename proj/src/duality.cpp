#include "genproj/duality.hpp"

#include <algorithm>
#include <stdexcept>

namespace genproj {

DualityBox duality_l1(const FinSeq& x) {
    if (x.has_zero_slot())
        throw std::invalid_argument("duality_l1: x carries a 0 slot; the l1 model is 1-indexed");
    DualityBox box;
    box.norm_value = norm_l1(x);
    box.free_bound = box.norm_value;
    for (const auto& [i, v] : x.entries())
        box.fixed[i] = rsign(v) > 0 ? box.norm_value : Rational(-box.norm_value);
    return box;
}

bool duality_contains(const DualityBox& box, const TailSeq& phi) {
    if (norm_sup(phi) != box.norm_value) return false;
    int top = phi.prefix_len();
    if (!box.fixed.empty()) top = std::max(top, box.fixed.rbegin()->first);
    for (int i = 1; i <= top; ++i) {
        Rational v = phi.value(i);
        auto it = box.fixed.find(i);
        if (it != box.fixed.end()) {
            if (v != it->second) return false;
        } else if (rabs(v) > box.free_bound) {
            return false;
        }
    }
    return rabs(phi.tail()) <= box.free_bound;
}

FinSeq duality_l2(const FinSeq& x) { return x; }

ConvexSetDesc duality_c(const TailSeq& beta) {
    if (!beta.is_constant() || beta.tail() <= 0)
        throw std::invalid_argument(
            "duality_c: closed form is available for the constant sequences beta_r, r > 0");
    return ConvexSetDesc::simplex(beta.tail(), 4, /*zero_slot=*/true);
}

bool inverse_duality_contains(const TailSeq& phi, const FinSeq& x) {
    return duality_contains(duality_l1(x), phi);
}

ConvexSetDesc inverse_duality_solve_beta(const Rational& r) {
    if (r <= 0) throw std::invalid_argument("inverse_duality_solve_beta needs r > 0");
    return ConvexSetDesc::simplex(r);
}

bool identical_points(const FinSeq& x, const FinSeq& y) {
    if (x.has_zero_slot() || y.has_zero_slot())
        throw std::invalid_argument("identical_points works in the 1-indexed l1 model");
    Rational nx = norm_l1(x);
    if (nx != norm_l1(y)) return false;
    if (nx == 0) return true;
    // the boxes share their norm; only opposite pinned signs can separate them
    for (const auto& [i, v] : x.entries()) {
        Rational w = y.value(i);
        if (w != 0 && rsign(v) != rsign(w)) return false;
    }
    return true;
}

std::optional<TailSeq> identical_points_witness(const FinSeq& x, const FinSeq& y) {
    if (!identical_points(x, y)) return std::nullopt;
    Rational n = norm_l1(x);
    if (n == 0) return TailSeq();
    int top = std::max(x.max_index(), y.max_index());
    std::vector<Rational> prefix(static_cast<size_t>(top), Rational(0));
    for (const auto& [i, v] : x.entries())
        prefix[static_cast<size_t>(i) - 1] = rsign(v) > 0 ? n : Rational(-n);
    for (const auto& [i, v] : y.entries())
        prefix[static_cast<size_t>(i) - 1] = rsign(v) > 0 ? n : Rational(-n);
    return TailSeq(std::move(prefix), Rational(0));
}

bool identical_points_l2(const FinSeq& x, const FinSeq& y) { return x == y; }

std::vector<TailSeq> box_vertices(const DualityBox& box, int budget, size_t cap) {
    if (box.is_zero()) return {TailSeq()};
    std::vector<int> free_idx;
    for (int i = 1; i <= budget; ++i)
        if (!box.fixed.count(i)) free_idx.push_back(i);
    if (free_idx.size() >= 8 * sizeof(size_t) || (size_t{1} << free_idx.size()) > cap)
        throw std::length_error("duality box vertex enumeration exceeds the cap");
    int top = budget;
    if (!box.fixed.empty()) top = std::max(top, box.fixed.rbegin()->first);
    std::vector<TailSeq> out;
    size_t count = size_t{1} << free_idx.size();
    for (size_t mask = 0; mask < count; ++mask) {
        std::vector<Rational> prefix(static_cast<size_t>(top), Rational(0));
        for (const auto& [i, v] : box.fixed) prefix[static_cast<size_t>(i) - 1] = v;
        for (size_t b = 0; b < free_idx.size(); ++b)
            prefix[static_cast<size_t>(free_idx[b]) - 1] =
                (mask >> b) & 1 ? Rational(-box.norm_value) : box.norm_value;
        out.emplace_back(std::move(prefix), Rational(0));
    }
    return out;
}

TailSeq box_center(const DualityBox& box, int budget) {
    if (box.is_zero()) return TailSeq();
    int top = budget;
    if (!box.fixed.empty()) top = std::max(top, box.fixed.rbegin()->first);
    std::vector<Rational> prefix(static_cast<size_t>(top), Rational(0));
    for (const auto& [i, v] : box.fixed) prefix[static_cast<size_t>(i) - 1] = v;
    return TailSeq(std::move(prefix), Rational(0));
}

}  // namespace genproj
