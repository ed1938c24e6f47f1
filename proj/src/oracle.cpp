#include "genproj/oracle.hpp"

#include <functional>
#include <vector>

namespace genproj::oracle {

namespace {

// Scans run on raw coordinate vectors; sequences are only materialized for
// the reported argmin.
using Coords = std::vector<Rational>;

FinSeq to_finseq(const Coords& y) {
    FinSeq out;
    for (size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0) out.set(static_cast<int>(i) + 1, y[i]);
    return out;
}

bool definitional_member(const ConvexSetDesc& set, const Coords& y) {
    switch (set.kind) {
        case SetKind::Ball: {
            Rational n = 0;
            for (const auto& v : y) n += rabs(v);
            return n <= set.radius;
        }
        case SetKind::Simplex: {
            Rational s = 0;
            for (const auto& v : y) {
                if (v < 0) return false;
                s += v;
            }
            return s == set.radius;
        }
        case SetKind::Hyperplane: {
            Rational s = 0;
            for (const auto& v : y) s += v;
            return s == set.level;
        }
        case SetKind::NonnegCone:
            for (const auto& v : y)
                if (v < 0) return false;
            return true;
        case SetKind::NonposCone:
            for (const auto& v : y)
                if (v > 0) return false;
            return true;
        default:
            return false;
    }
}

// Enumerates feasible grid points and folds the objective over them.
void scan_feasible(const ConvexSetDesc& set, int budget, const GridSpec& grid,
                   const std::function<void(const Coords&)>& visit) {
    if (set.kind == SetKind::Hull) {
        auto pts = realized_hull_points(set, budget);
        if (pts.empty()) return;
        int top = budget;
        for (const auto& p : pts) top = std::max(top, p.max_index());
        // combination weights on a simplex grid with step 1/denom
        int q = grid.denom;
        std::vector<int> w(pts.size(), 0);
        Coords y(static_cast<size_t>(top), Rational(0));
        std::function<void(size_t, int)> rec = [&](size_t j, int left) {
            if (j + 1 == w.size()) {
                w[j] = left;
                for (auto& v : y) v = 0;
                for (size_t l = 0; l < pts.size(); ++l) {
                    if (w[l] == 0) continue;
                    Rational lam = rat(w[l], q);
                    for (const auto& [i, v] : pts[l].entries())
                        y[static_cast<size_t>(i) - 1] += lam * v;
                }
                visit(y);
                return;
            }
            for (int take = 0; take <= left; ++take) {
                w[j] = take;
                rec(j + 1, left - take);
            }
        };
        rec(0, q);
        return;
    }

    int steps = (grid.hi - grid.lo) * grid.denom;
    std::vector<Rational> ladder(static_cast<size_t>(steps) + 1);
    for (int s = 0; s <= steps; ++s) ladder[static_cast<size_t>(s)] = rat(grid.lo) + rat(s, grid.denom);
    Coords y(static_cast<size_t>(budget), Rational(0));
    std::function<void(int)> rec = [&](int coord) {
        if (coord == budget) {
            if (definitional_member(set, y)) visit(y);
            return;
        }
        for (int s = 0; s <= steps; ++s) {
            y[static_cast<size_t>(coord)] = ladder[static_cast<size_t>(s)];
            rec(coord + 1);
        }
    };
    rec(0);
}

}  // namespace

std::optional<ScanResult> min_metric(const ConvexSetDesc& set, const FinSeq& x, int budget,
                                     const GridSpec& grid) {
    std::optional<std::pair<Rational, Coords>> best;
    Coords xv(static_cast<size_t>(budget), Rational(0));
    for (const auto& [i, v] : x.entries())
        if (i >= 1 && i <= budget) xv[static_cast<size_t>(i) - 1] = v;
    Rational x_outside = 0;  // mass of x beyond the budget still counts
    for (const auto& [i, v] : x.entries())
        if (i > budget) x_outside += rabs(v);
    scan_feasible(set, budget, grid, [&](const Coords& y) {
        Rational d = x_outside;
        for (size_t i = 0; i < y.size(); ++i)
            d += rabs((i < xv.size() ? xv[i] : Rational(0)) - y[i]);
        if (!best || d < best->first) best = {d, y};
    });
    if (!best) return std::nullopt;
    return ScanResult{best->first, to_finseq(best->second)};
}

std::optional<ScanResult> min_v(const ConvexSetDesc& set, const TailSeq& phi, int budget,
                                const GridSpec& grid) {
    std::optional<std::pair<Rational, Coords>> best;
    Rational np = norm_sup(phi);
    Rational base = np * np;
    std::vector<Rational> pv;
    scan_feasible(set, budget, grid, [&](const Coords& y) {
        if (pv.size() < y.size())
            for (size_t i = pv.size(); i < y.size(); ++i)
                pv.push_back(phi.value(static_cast<int>(i) + 1));
        Rational pairing = 0, n = 0;
        for (size_t i = 0; i < y.size(); ++i) {
            if (y[i] == 0) continue;
            pairing += pv[i] * y[i];
            n += rabs(y[i]);
        }
        Rational v = base - 2 * pairing + n * n;
        if (!best || v < best->first) best = {v, y};
    });
    if (!best) return std::nullopt;
    return ScanResult{best->first, to_finseq(best->second)};
}

std::optional<ScanResult> min_v_over_box(const ConvexSetDesc& set, const FinSeq& x,
                                         int budget, const GridSpec& grid) {
    std::optional<ScanResult> best;
    for (const auto& jx : box_vertices(duality_l1(x), budget)) {
        auto inner = min_v(set, jx, budget, grid);
        if (inner && (!best || inner->value < best->value)) best = inner;
    }
    return best;
}

std::optional<ScanResult> min_l2(const ConvexSetDesc& set, const FinSeq& x, int budget,
                                 const GridSpec& grid) {
    std::optional<std::pair<Rational, Coords>> best;
    Coords xv(static_cast<size_t>(budget), Rational(0));
    for (const auto& [i, v] : x.entries())
        if (i >= 1 && i <= budget) xv[static_cast<size_t>(i) - 1] = v;
    scan_feasible(set, budget, grid, [&](const Coords& y) {
        Rational d = 0;
        for (size_t i = 0; i < y.size(); ++i) {
            Rational diff = (i < xv.size() ? xv[i] : Rational(0)) - y[i];
            d += diff * diff;
        }
        if (!best || d < best->first) best = {d, y};
    });
    if (!best) return std::nullopt;
    return ScanResult{best->first, to_finseq(best->second)};
}

}  // namespace genproj::oracle
