#include "genproj/hilbert.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace genproj {

namespace {

// Gaussian elimination over the rationals; returns nullopt on a singular
// system.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

struct HalfSpace {
    std::vector<Rational> coeffs;  // over coordinates 1..n
    Rational rhs;
    bool equality = false;
};

std::vector<HalfSpace> h_representation(const ConvexSetDesc& set, int n) {
    std::vector<HalfSpace> rows;
    switch (set.kind) {
        case SetKind::Ball: {
            if (n > 10) throw std::invalid_argument("l2 ball projection: budget too large");
            for (int mask = 0; mask < (1 << n); ++mask) {
                HalfSpace h;
                h.coeffs.assign(static_cast<size_t>(n), Rational(0));
                for (int i = 0; i < n; ++i)
                    h.coeffs[static_cast<size_t>(i)] = (mask >> i) & 1 ? Rational(-1) : Rational(1);
                h.rhs = set.radius;
                rows.push_back(std::move(h));
            }
            return rows;
        }
        case SetKind::Simplex: {
            for (int i = 0; i < n; ++i) {
                HalfSpace h;
                h.coeffs.assign(static_cast<size_t>(n), Rational(0));
                h.coeffs[static_cast<size_t>(i)] = -1;
                h.rhs = 0;
                rows.push_back(std::move(h));
            }
            HalfSpace eq;
            eq.coeffs.assign(static_cast<size_t>(n), Rational(1));
            eq.rhs = set.radius;
            eq.equality = true;
            rows.push_back(std::move(eq));
            return rows;
        }
        case SetKind::Hyperplane: {
            HalfSpace eq;
            eq.coeffs.assign(static_cast<size_t>(n), Rational(1));
            eq.rhs = set.level;
            eq.equality = true;
            rows.push_back(std::move(eq));
            return rows;
        }
        case SetKind::NonnegCone:
        case SetKind::NonposCone: {
            Rational s = set.kind == SetKind::NonnegCone ? Rational(-1) : Rational(1);
            for (int i = 0; i < n; ++i) {
                HalfSpace h;
                h.coeffs.assign(static_cast<size_t>(n), Rational(0));
                h.coeffs[static_cast<size_t>(i)] = s;
                h.rhs = 0;
                rows.push_back(std::move(h));
            }
            return rows;
        }
        default:
            throw std::invalid_argument("l2 projection: unsupported set kind");
    }
}

L2Result project_h_rep(const std::vector<HalfSpace>& rows, const std::vector<Rational>& x) {
    size_t n = x.size();
    std::vector<size_t> ineq;
    std::vector<size_t> eq;
    for (size_t i = 0; i < rows.size(); ++i)
        (rows[i].equality ? eq : ineq).push_back(i);
    if (ineq.size() > 16) throw std::invalid_argument("l2 projection: too many inequality faces");

    std::optional<L2Result> best;
    for (size_t mask = 0; mask < (size_t{1} << ineq.size()); ++mask) {
        std::vector<size_t> active = eq;
        for (size_t b = 0; b < ineq.size(); ++b)
            if ((mask >> b) & 1) active.push_back(ineq[b]);
        size_t m = active.size();
        // KKT system for min ||x-y||^2 with the active rows as equalities:
        // [ 2I  A^T ] [y ]   [2x]
        // [ A   0   ] [mu] = [b ]
        size_t dim = n + m;
        std::vector<std::vector<Rational>> kkt(dim, std::vector<Rational>(dim, Rational(0)));
        std::vector<Rational> rhs(dim, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            kkt[i][i] = 2;
            rhs[i] = 2 * x[i];
        }
        for (size_t r = 0; r < m; ++r) {
            const auto& row = rows[active[r]];
            for (size_t c = 0; c < n; ++c) {
                kkt[c][n + r] = row.coeffs[c];
                kkt[n + r][c] = row.coeffs[c];
            }
            rhs[n + r] = row.rhs;
        }
        auto sol = solve_linear(std::move(kkt), std::move(rhs));
        if (!sol) continue;
        // primal feasibility of the remaining inequalities
        bool feasible = true;
        for (size_t i : ineq) {
            Rational lhs = 0;
            for (size_t c = 0; c < n; ++c) lhs += rows[i].coeffs[c] * (*sol)[c];
            if (lhs > rows[i].rhs) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        Rational dist = 0;
        for (size_t c = 0; c < n; ++c) {
            Rational d = x[c] - (*sol)[c];
            dist += d * d;
        }
        if (!best || dist < best->value_sq) {
            L2Result cand;
            cand.value_sq = dist;
            for (size_t c = 0; c < n; ++c)
                cand.minimizer.set(static_cast<int>(c) + 1, (*sol)[c]);
            best = cand;
        }
    }
    if (!best) throw std::runtime_error("l2 projection: no feasible face");
    return *best;
}

L2Result project_hull(const ConvexSetDesc& set, const std::vector<Rational>& x, int n) {
    auto pts = realized_hull_points(set, n);
    if (pts.empty()) throw std::invalid_argument("l2 projection: no hull generators in budget");
    size_t k = pts.size();
    if (k > 16) throw std::invalid_argument("l2 projection: too many hull generators");

    std::optional<L2Result> best;
    // active sets: choose which lambdas are pinned to zero
    for (size_t mask = 0; mask + 1 < (size_t{1} << k); ++mask) {
        std::vector<size_t> live;
        for (size_t j = 0; j < k; ++j)
            if (!((mask >> j) & 1)) live.push_back(j);
        size_t m = live.size();
        // min over lambda of || x - sum lambda_j p_j ||^2, sum lambda = 1
        // KKT: G lambda + mu 1 = g,  1.lambda = 1  with  G_jl = 2 <p_j, p_l>
        size_t dim = m + 1;
        std::vector<std::vector<Rational>> kkt(dim, std::vector<Rational>(dim, Rational(0)));
        std::vector<Rational> rhs(dim, Rational(0));
        for (size_t a = 0; a < m; ++a) {
            for (size_t b = 0; b < m; ++b) {
                Rational dot = 0;
                for (int i = 1; i <= n; ++i)
                    dot += pts[live[a]].value(i) * pts[live[b]].value(i);
                kkt[a][b] = 2 * dot;
            }
            Rational g = 0;
            for (int i = 1; i <= n; ++i) g += pts[live[a]].value(i) * x[static_cast<size_t>(i) - 1];
            rhs[a] = 2 * g;
            kkt[a][m] = 1;
            kkt[m][a] = 1;
        }
        rhs[m] = 1;
        auto sol = solve_linear(std::move(kkt), std::move(rhs));
        if (!sol) continue;
        bool feasible = true;
        for (size_t a = 0; a < m; ++a)
            if ((*sol)[a] < 0) {
                feasible = false;
                break;
            }
        if (!feasible) continue;
        std::vector<Rational> y(static_cast<size_t>(n), Rational(0));
        for (size_t a = 0; a < m; ++a)
            for (int i = 1; i <= n; ++i)
                y[static_cast<size_t>(i) - 1] += (*sol)[a] * pts[live[a]].value(i);
        Rational dist = 0;
        for (size_t c = 0; c < static_cast<size_t>(n); ++c) {
            Rational d = x[c] - y[c];
            dist += d * d;
        }
        if (!best || dist < best->value_sq) {
            L2Result cand;
            cand.value_sq = dist;
            for (size_t c = 0; c < static_cast<size_t>(n); ++c)
                cand.minimizer.set(static_cast<int>(c) + 1, y[c]);
            best = cand;
        }
    }
    if (!best) throw std::runtime_error("l2 hull projection failed");
    return *best;
}

}  // namespace

L2Result l2_project(const ConvexSetDesc& set, const FinSeq& x, int budget) {
    if (x.has_zero_slot())
        throw std::invalid_argument("l2_project works in the 1-indexed model");
    int n = effective_budget(set, budget, x.max_index());
    std::vector<Rational> xv(static_cast<size_t>(n), Rational(0));
    for (int i = 1; i <= n; ++i) xv[static_cast<size_t>(i) - 1] = x.value(i);
    if (set.kind == SetKind::Hull) return project_hull(set, xv, n);
    return project_h_rep(h_representation(set, n), xv);
}

}  // namespace genproj
