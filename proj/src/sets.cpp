#include "genproj/sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace genproj {

ConvexSetDesc ConvexSetDesc::ball(const Rational& r, int dim) {
    if (r <= 0) throw std::invalid_argument("ball radius must be positive");
    ConvexSetDesc s;
    s.kind = SetKind::Ball;
    s.radius = r;
    s.dim = dim;
    return s;
}

ConvexSetDesc ConvexSetDesc::simplex(const Rational& r, int dim, bool zero_slot) {
    if (r <= 0) throw std::invalid_argument("simplex radius must be positive");
    ConvexSetDesc s;
    s.kind = SetKind::Simplex;
    s.radius = r;
    s.dim = dim;
    s.zero_slot = zero_slot;
    return s;
}

ConvexSetDesc ConvexSetDesc::hyperplane(const Rational& k, int dim) {
    ConvexSetDesc s;
    s.kind = SetKind::Hyperplane;
    s.level = k;
    s.dim = dim;
    return s;
}

ConvexSetDesc ConvexSetDesc::nonneg_cone(int dim) {
    ConvexSetDesc s;
    s.kind = SetKind::NonnegCone;
    s.dim = dim;
    return s;
}

ConvexSetDesc ConvexSetDesc::nonpos_cone(int dim) {
    ConvexSetDesc s;
    s.kind = SetKind::NonposCone;
    s.dim = dim;
    return s;
}

ConvexSetDesc ConvexSetDesc::hull(std::vector<FinSeq> pts) {
    if (pts.empty()) throw std::invalid_argument("hull needs at least one point");
    ConvexSetDesc s;
    s.kind = SetKind::Hull;
    s.points = std::move(pts);
    int d = 1;
    for (const auto& p : s.points) d = std::max(d, p.max_index());
    s.dim = d;
    return s;
}

ConvexSetDesc ConvexSetDesc::sball(const Rational& r) {
    if (r <= 0) throw std::invalid_argument("level must be positive");
    ConvexSetDesc s;
    s.kind = SetKind::SBall;
    s.radius = r;
    return s;
}

ConvexSetDesc ConvexSetDesc::zset(const Rational& r) {
    if (r <= 0) throw std::invalid_argument("level must be positive");
    ConvexSetDesc s;
    s.kind = SetKind::ZSet;
    s.radius = r;
    return s;
}

bool is_bounded(SetKind kind) {
    return kind == SetKind::Ball || kind == SetKind::Simplex || kind == SetKind::Hull;
}

bool is_c0_kind(SetKind kind) { return kind == SetKind::SBall || kind == SetKind::ZSet; }

namespace {

bool all_nonneg(const FinSeq& y) {
    for (const auto& [i, v] : y.entries())
        if (v < 0) return false;
    return true;
}

Rational plain_sum(const FinSeq& y) {
    Rational s = 0;
    for (const auto& [i, v] : y.entries())
        if (i >= 1) s += v;
    return s;
}

Rational full_sum(const FinSeq& y) {
    Rational s = 0;
    for (const auto& [i, v] : y.entries()) s += v;
    return s;
}

}  // namespace

bool membership(const ConvexSetDesc& set, const FinSeq& y) {
    if (is_c0_kind(set.kind))
        throw std::invalid_argument("c0 predicate sets take eventually-zero sequences");
    if (y.has_zero_slot() && !(set.kind == SetKind::Simplex && set.zero_slot))
        return false;  // the 0 slot only exists in the c-dual simplex model
    switch (set.kind) {
        case SetKind::Ball:
            return norm_l1(y) <= set.radius;
        case SetKind::Simplex:
            if (set.zero_slot) return all_nonneg(y) && full_sum(y) == set.radius;
            return all_nonneg(y) && norm_l1(y) == set.radius;
        case SetKind::Hyperplane:
            return plain_sum(y) == set.level;
        case SetKind::NonnegCone:
            return all_nonneg(y);
        case SetKind::NonposCone:
            for (const auto& [i, v] : y.entries())
                if (v > 0) return false;
            return true;
        case SetKind::Hull: {
            // y in co(points) <=> the combination LP is feasible
            lp::Problem prob;
            std::vector<int> lambda;
            for (size_t j = 0; j < set.points.size(); ++j) lambda.push_back(prob.add_var());
            std::vector<std::pair<int, Rational>> ones;
            for (int l : lambda) ones.emplace_back(l, Rational(1));
            prob.add_row(ones, lp::Rel::EQ, Rational(1));
            int n = std::max(y.max_index(), ConvexSetDesc::hull(set.points).dim);
            for (int i = 1; i <= n; ++i) {
                std::vector<std::pair<int, Rational>> row;
                for (size_t j = 0; j < set.points.size(); ++j) {
                    Rational c = set.points[j].value(i);
                    if (c != 0) row.emplace_back(lambda[j], c);
                }
                if (row.empty() && y.value(i) == 0) continue;
                prob.add_row(row, lp::Rel::EQ, y.value(i));
            }
            return lp::solve(prob).status == lp::Status::Optimal;
        }
        default:
            return false;
    }
}

bool membership_c0(const ConvexSetDesc& set, const TailSeq& s) {
    if (!is_c0_kind(set.kind))
        throw std::invalid_argument("membership_c0 is for the c0 predicate sets");
    if (!s.in_c0()) return false;
    if (set.kind == SetKind::SBall) {
        Rational hi = 2 * set.radius;
        for (const auto& v : s.prefix())
            if (v < 0 || v > hi) return false;
        return true;
    }
    for (const auto& v : s.prefix())
        if (v == set.radius) return true;
    return false;
}

SupportValue support(const ConvexSetDesc& set, const TailSeq& phi) {
    SupportValue out;
    switch (set.kind) {
        case SetKind::Ball:
            out.value = set.radius * norm_sup(phi);
            return out;
        case SetKind::Simplex: {
            Rational m = phi.tail();
            for (const auto& v : phi.prefix())
                if (v > m) m = v;
            out.value = set.radius * m;
            return out;
        }
        case SetKind::Hyperplane:
            if (!phi.is_constant()) {
                out.unbounded = true;
                return out;
            }
            out.value = set.level * phi.tail();
            return out;
        case SetKind::NonnegCone: {
            bool ok = phi.tail() <= 0;
            for (const auto& v : phi.prefix()) ok = ok && v <= 0;
            if (!ok) {
                out.unbounded = true;
                return out;
            }
            out.value = 0;
            return out;
        }
        case SetKind::NonposCone: {
            bool ok = phi.tail() >= 0;
            for (const auto& v : phi.prefix()) ok = ok && v >= 0;
            if (!ok) {
                out.unbounded = true;
                return out;
            }
            out.value = 0;
            return out;
        }
        case SetKind::Hull: {
            bool first = true;
            for (const auto& p : set.points) {
                Rational v = pair(phi, p);
                if (first || v > out.value) out.value = v;
                first = false;
            }
            return out;
        }
        default:
            throw std::invalid_argument("support is not defined for c0 predicate sets");
    }
}

std::vector<FinSeq> realized_hull_points(const ConvexSetDesc& set, int budget) {
    std::vector<FinSeq> pts;
    for (const auto& p : set.points)
        if (p.max_index() <= budget) pts.push_back(p);
    return pts;
}

std::vector<FinSeq> vertices(const ConvexSetDesc& set, int budget) {
    std::vector<FinSeq> out;
    switch (set.kind) {
        case SetKind::Ball:
            for (int i = 1; i <= budget; ++i) {
                out.push_back(atom(i, set.radius));
                out.push_back(atom(i, -set.radius));
            }
            return out;
        case SetKind::Simplex:
            for (int i = set.zero_slot ? 0 : 1; i <= budget; ++i)
                out.push_back(atom(i, set.radius));
            return out;
        case SetKind::Hull: {
            auto pts = realized_hull_points(set, budget);
            // prune points expressible as combinations of the others
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            for (size_t j = 0; j < pts.size(); ++j) {
                std::vector<FinSeq> others;
                for (size_t l = 0; l < pts.size(); ++l)
                    if (l != j) others.push_back(pts[l]);
                if (others.empty() || !membership(ConvexSetDesc::hull(others), pts[j]))
                    out.push_back(pts[j]);
            }
            return out;
        }
        default:
            throw std::invalid_argument("vertex enumeration needs a bounded set");
    }
}

Decomposition polyhedral_decomposition(const ConvexSetDesc& set, int budget) {
    Decomposition d;
    switch (set.kind) {
        case SetKind::Ball:
        case SetKind::Simplex:
        case SetKind::Hull:
            d.points = vertices(set, budget);
            return d;
        case SetKind::Hyperplane:
            d.points.push_back(atom(1, set.level));
            for (int m = 2; m <= budget; ++m) {
                FinSeq dir = atom(1, Rational(1)).minus(atom(m, Rational(1)));
                d.rays.push_back(dir);
                d.rays.push_back(dir.scaled(Rational(-1)));
            }
            return d;
        case SetKind::NonnegCone:
            d.points.emplace_back();
            for (int i = 1; i <= budget; ++i) d.rays.push_back(atom(i, Rational(1)));
            return d;
        case SetKind::NonposCone:
            d.points.emplace_back();
            for (int i = 1; i <= budget; ++i) d.rays.push_back(atom(i, Rational(-1)));
            return d;
        default:
            throw std::invalid_argument("no polyhedral decomposition for c0 predicate sets");
    }
}

void add_set_constraints(lp::Problem& prob, const ConvexSetDesc& set,
                         const std::vector<int>& yvars, int budget) {
    int n = static_cast<int>(yvars.size());
    switch (set.kind) {
        case SetKind::Ball: {
            std::vector<std::pair<int, Rational>> total;
            for (int i = 0; i < n; ++i) {
                int u = prob.add_var();
                prob.add_row({{u, Rational(1)}, {yvars[static_cast<size_t>(i)], Rational(-1)}},
                             lp::Rel::GE, Rational(0));
                prob.add_row({{u, Rational(1)}, {yvars[static_cast<size_t>(i)], Rational(1)}},
                             lp::Rel::GE, Rational(0));
                total.emplace_back(u, Rational(1));
            }
            prob.add_row(total, lp::Rel::LE, set.radius);
            return;
        }
        case SetKind::Simplex: {
            std::vector<std::pair<int, Rational>> total;
            for (int i = 0; i < n; ++i) {
                prob.add_row({{yvars[static_cast<size_t>(i)], Rational(1)}}, lp::Rel::GE, Rational(0));
                total.emplace_back(yvars[static_cast<size_t>(i)], Rational(1));
            }
            prob.add_row(total, lp::Rel::EQ, set.radius);
            return;
        }
        case SetKind::Hyperplane: {
            std::vector<std::pair<int, Rational>> total;
            for (int i = 0; i < n; ++i) total.emplace_back(yvars[static_cast<size_t>(i)], Rational(1));
            prob.add_row(total, lp::Rel::EQ, set.level);
            return;
        }
        case SetKind::NonnegCone:
            for (int i = 0; i < n; ++i)
                prob.add_row({{yvars[static_cast<size_t>(i)], Rational(1)}}, lp::Rel::GE, Rational(0));
            return;
        case SetKind::NonposCone:
            for (int i = 0; i < n; ++i)
                prob.add_row({{yvars[static_cast<size_t>(i)], Rational(1)}}, lp::Rel::LE, Rational(0));
            return;
        case SetKind::Hull: {
            auto pts = realized_hull_points(set, budget);
            if (pts.empty())
                throw std::invalid_argument("no hull generators within the budget");
            std::vector<int> lambda;
            std::vector<std::pair<int, Rational>> ones;
            for (size_t j = 0; j < pts.size(); ++j) {
                lambda.push_back(prob.add_var());
                ones.emplace_back(lambda[j], Rational(1));
            }
            prob.add_row(ones, lp::Rel::EQ, Rational(1));
            for (int i = 1; i <= n; ++i) {
                std::vector<std::pair<int, Rational>> row{{yvars[static_cast<size_t>(i) - 1], Rational(1)}};
                for (size_t j = 0; j < pts.size(); ++j) {
                    Rational c = pts[j].value(i);
                    if (c != 0) row.emplace_back(lambda[j], -c);
                }
                prob.add_row(row, lp::Rel::EQ, Rational(0));
            }
            return;
        }
        default:
            throw std::invalid_argument("c0 predicate sets have no LP realization");
    }
}

int effective_budget(const ConvexSetDesc& set, int requested, int input_max_index) {
    int n = std::max(requested, input_max_index);
    n = std::max(n, 1);
    if (set.kind == SetKind::Hull)
        for (const auto& p : realized_hull_points(set, requested))
            n = std::max(n, p.max_index());
    return n;
}

}  // namespace genproj
