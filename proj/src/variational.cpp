#include "genproj/variational.hpp"

#include <algorithm>
#include <stdexcept>

namespace genproj {

namespace {

// max over the box of <jz, w> for finitely supported w (tail never pairs).
Rational box_max_pairing(const DualityBox& box, const FinSeq& w) {
    Rational s = 0;
    for (const auto& [i, v] : w.entries()) {
        auto it = box.fixed.find(i);
        if (it != box.fixed.end())
            s += it->second * v;
        else
            s += box.free_bound * rabs(v);
    }
    return s;
}

Rational box_min_pairing(const DualityBox& box, const FinSeq& w) {
    return -box_max_pairing(box, w.scaled(Rational(-1)));
}

// Feasibility of: j in box, <j, z - p> >= lhs_shift(p) for generator points,
// <j, d> <= ray_shift(d) for rays. Shifts are the phi pairings; the metric
// variant passes zero shifts.
struct BoxFeasibility {
    lp::Problem prob;
    std::vector<int> jvars;
    int top = 0;

    BoxFeasibility(const DualityBox& box, int n) {
        top = n;
        if (!box.fixed.empty()) top = std::max(top, box.fixed.rbegin()->first);
        for (int i = 1; i <= top; ++i) {
            int j = prob.add_var(/*is_free=*/true);
            jvars.push_back(j);
            auto it = box.fixed.find(i);
            if (it != box.fixed.end()) {
                prob.add_row({{j, Rational(1)}}, lp::Rel::EQ, it->second);
            } else {
                prob.add_row({{j, Rational(1)}}, lp::Rel::LE, box.free_bound);
                prob.add_row({{j, Rational(1)}}, lp::Rel::GE, -box.free_bound);
            }
        }
    }

    void require_pairing_ge(const FinSeq& w, const Rational& rhs) {
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [i, v] : w.entries())
            if (i >= 1 && i <= top) row.emplace_back(jvars[static_cast<size_t>(i) - 1], v);
        prob.add_row(row, lp::Rel::GE, rhs);
    }

    void require_pairing_le(const FinSeq& w, const Rational& rhs) {
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [i, v] : w.entries())
            if (i >= 1 && i <= top) row.emplace_back(jvars[static_cast<size_t>(i) - 1], v);
        prob.add_row(row, lp::Rel::LE, rhs);
    }

    std::optional<TailSeq> solve() {
        auto sol = lp::solve(prob);
        if (sol.status != lp::Status::Optimal) return std::nullopt;
        std::vector<Rational> prefix(static_cast<size_t>(top));
        for (int i = 0; i < top; ++i)
            prefix[static_cast<size_t>(i)] = sol.x[static_cast<size_t>(jvars[static_cast<size_t>(i)])];
        return TailSeq(std::move(prefix), Rational(0));
    }
};

// Corner audit for the functional <phi + j_sign * jz, .>: the generalized
// inequality uses phi - jz, the metric one uses +j alone.
std::vector<InnerValue> audit_corners(const DualityBox& box, const ConvexSetDesc& set,
                                      const TailSeq* phi, int j_sign, const FinSeq& z,
                                      int n) {
    std::vector<InnerValue> out;
    std::vector<TailSeq> corners;
    try {
        corners = box_vertices(box, n, 64);
    } catch (const std::length_error&) {
        return out;  // audit skipped for very wide boxes
    }
    auto decomp = polyhedral_decomposition(set, n);
    for (const auto& jz : corners) {
        InnerValue iv;
        iv.corner = jz;
        bool first = true;
        for (const auto& d : decomp.rays) {
            Rational along = (phi ? pair(*phi, d) : Rational(0)) + j_sign * pair(jz, d);
            if (along > 0) {
                iv.finite = false;
                break;
            }
        }
        if (iv.finite) {
            for (const auto& p : decomp.points) {
                FinSeq w = z.minus(p);
                Rational v = (phi ? pair(*phi, w) : Rational(0)) + j_sign * pair(jz, w);
                if (first || v < iv.value) iv.value = v;
                first = false;
            }
        }
        out.push_back(std::move(iv));
    }
    return out;
}

}  // namespace

VIReport vi_sufficiency(const ConvexSetDesc& set, const TailSeq& phi, const FinSeq& z,
                        int budget) {
    if (!membership(set, z))
        throw std::invalid_argument("vi_sufficiency: z must belong to the set");
    int n = effective_budget(set, budget, std::max(z.max_index(), phi.prefix_len() + 1));
    DualityBox box = duality_l1(z);
    auto decomp = polyhedral_decomposition(set, n);

    BoxFeasibility feas(box, n);
    for (const auto& p : decomp.points) {
        FinSeq w = z.minus(p);
        // <phi - jz, z - p> >= 0  <=>  <jz, z - p> <= <phi, z - p>
        feas.require_pairing_le(w, pair(phi, w));
    }
    for (const auto& d : decomp.rays) {
        // <phi - jz, d> <= 0 keeps the infimum finite along the ray
        feas.require_pairing_ge(d, pair(phi, d));
    }

    VIReport report;
    report.witness = feas.solve();
    report.holds = report.witness.has_value();
    report.corner_values = audit_corners(box, set, &phi, -1, z, n);
    if (!report.holds) report.violating_y = vi_counterexample(set, phi, z, budget);
    return report;
}

std::optional<FinSeq> vi_counterexample(const ConvexSetDesc& set, const TailSeq& phi,
                                        const FinSeq& z, int budget) {
    if (!membership(set, z))
        throw std::invalid_argument("vi_counterexample: z must belong to the set");
    int n = effective_budget(set, budget, std::max(z.max_index(), phi.prefix_len() + 1));
    DualityBox box = duality_l1(z);

    auto universal_violation = [&](const FinSeq& ybar) {
        // max over the box of <phi - jz, z - ybar>, closed form on the box
        FinSeq w = z.minus(ybar);
        Rational m = pair(phi, w) - box_min_pairing(box, w);
        return m < 0;
    };

    std::vector<FinSeq> candidates;
    for (const Rational& k : {Rational(1), Rational(2)}) {
        for (int i = 1; i <= 2 && i <= n; ++i)
            for (int m = 2; m <= n; ++m) {
                if (m == i) continue;
                FinSeq shift = atom(i, k).minus(atom(m, k));
                candidates.push_back(z.plus(shift));
            }
    }
    auto decomp = polyhedral_decomposition(set, n);
    for (const auto& p : decomp.points) candidates.push_back(p);

    for (const auto& ybar : candidates) {
        if (ybar == z || !membership(set, ybar)) continue;
        if (universal_violation(ybar)) return ybar;
    }
    return std::nullopt;
}

VIReport metric_vi_check(const ConvexSetDesc& set, const FinSeq& x, const FinSeq& z,
                         int budget) {
    if (!membership(set, z))
        throw std::invalid_argument("metric_vi_check: z must belong to the set");
    if (membership(set, x))
        throw std::invalid_argument("metric_vi_check: x must lie outside the set");
    int n = effective_budget(set, budget, std::max(x.max_index(), z.max_index()));
    DualityBox box = duality_l1(x.minus(z));
    auto decomp = polyhedral_decomposition(set, n);

    BoxFeasibility feas(box, n);
    for (const auto& p : decomp.points) {
        // <j, z - p> >= 0
        feas.require_pairing_ge(z.minus(p), Rational(0));
    }
    for (const auto& d : decomp.rays) {
        // <j, d> <= 0
        feas.require_pairing_le(d, Rational(0));
    }

    VIReport report;
    report.witness = feas.solve();
    report.holds = report.witness.has_value();
    report.corner_values = audit_corners(box, set, nullptr, +1, z, n);
    return report;
}

}  // namespace genproj
