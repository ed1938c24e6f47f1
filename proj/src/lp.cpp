#include "genproj/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace genproj::lp {

namespace {

// Dense two-phase primal simplex with Bland's rule. Exact arithmetic
// throughout; Bland's rule guarantees termination without perturbation.
class Tableau {
  public:
    explicit Tableau(const Problem& p) : prob_(p) { build(); }

    // Runs both phases. Returns final status.
    Status run() {
        if (!phase1()) return Status::Infeasible;
        return phase2();
    }

    Rational objective_value() const { return obj_value_; }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(static_cast<size_t>(prob_.num_vars), Rational(0));
        for (size_t r = 0; r < basis_.size(); ++r) {
            int col = basis_[r];
            if (col < static_cast<int>(var_of_col_.size())) {
                const auto& vc = var_of_col_[static_cast<size_t>(col)];
                if (vc.first >= 0) x[static_cast<size_t>(vc.first)] += vc.second * rhs_[r];
            }
        }
        return x;
    }

    std::vector<Rational> ray() const {
        std::vector<Rational> d(static_cast<size_t>(prob_.num_vars), Rational(0));
        if (unbounded_col_ < 0) return d;
        auto add = [&](int col, const Rational& amt) {
            const auto& vc = var_of_col_[static_cast<size_t>(col)];
            if (vc.first >= 0) d[static_cast<size_t>(vc.first)] += vc.second * amt;
        };
        add(unbounded_col_, Rational(1));
        for (size_t r = 0; r < basis_.size(); ++r)
            add(basis_[r], -cell(r, unbounded_col_));
        return d;
    }

    // Multipliers over the user's rows proving infeasibility.
    std::vector<Rational> farkas() const {
        std::vector<Rational> y(prob_.rows.size(), Rational(0));
        for (size_t i = 0; i < prob_.rows.size(); ++i) {
            // phase-1 dual of converted row i, recovered from its artificial
            Rational w = Rational(1) - redcost1_final_[static_cast<size_t>(art_col_[i])];
            y[i] = w * row_sign_[i] * rel_sign_[i];
        }
        return y;
    }

    // Column B^-1 e_r for converted row r, via that row's artificial column.
    std::vector<Rational> binv_column(int user_row) const {
        int c = art_col_[static_cast<size_t>(user_row)];
        std::vector<Rational> d(basis_.size());
        for (size_t r = 0; r < basis_.size(); ++r)
            d[r] = cell(r, c) * row_sign_[static_cast<size_t>(user_row)];
        return d;
    }

    const std::vector<Rational>& rhs() const { return rhs_; }

    Rational basic_cost_dot(const std::vector<Rational>& d) const {
        Rational s = 0;
        for (size_t r = 0; r < basis_.size(); ++r)
            s += cost2_[static_cast<size_t>(basis_[r])] * d[r];
        return s;
    }

  private:
    const Problem& prob_;
    // columns: split vars, then slacks, then artificials
    std::vector<std::vector<Rational>> a_;  // m x ncols
    std::vector<Rational> rhs_;             // m
    std::vector<Rational> cost1_, cost2_;   // per column
    std::vector<Rational> red1_, red2_;     // reduced-cost rows, updated on pivot
    std::vector<Rational> redcost1_final_;
    Rational obj1_value_ = 0, obj_value_ = 0;
    std::vector<int> basis_;
    std::vector<std::pair<int, Rational>> var_of_col_;  // column -> (orig var, +-1); (-1,0) for aux
    std::vector<int> art_col_;                          // per user row
    std::vector<Rational> row_sign_;                    // -1 when converted row negated for rhs >= 0
    std::vector<Rational> rel_sign_;                    // -1 when GE was flipped to LE
    int ncols_ = 0;
    int unbounded_col_ = -1;
    bool in_phase1_ = true;

    const Rational& cell(size_t r, int c) const { return a_[r][static_cast<size_t>(c)]; }

    void build() {
        size_t m = prob_.rows.size();
        // column layout
        std::vector<int> pos(static_cast<size_t>(prob_.num_vars)), neg(static_cast<size_t>(prob_.num_vars), -1);
        for (int j = 0; j < prob_.num_vars; ++j) {
            pos[static_cast<size_t>(j)] = ncols_++;
            var_of_col_.emplace_back(j, Rational(1));
            if (prob_.free_var[static_cast<size_t>(j)]) {
                neg[static_cast<size_t>(j)] = ncols_++;
                var_of_col_.emplace_back(j, Rational(-1));
            }
        }
        std::vector<int> slack_col(m, -1);
        rel_sign_.assign(m, Rational(1));
        for (size_t i = 0; i < m; ++i) {
            if (prob_.rows[i].rel != Rel::EQ) {
                slack_col[i] = ncols_++;
                var_of_col_.emplace_back(-1, Rational(0));
            }
            if (prob_.rows[i].rel == Rel::GE) rel_sign_[i] = -1;
        }
        art_col_.assign(m, -1);
        for (size_t i = 0; i < m; ++i) {
            art_col_[i] = ncols_++;
            var_of_col_.emplace_back(-1, Rational(0));
        }

        a_.assign(m, std::vector<Rational>(static_cast<size_t>(ncols_), Rational(0)));
        rhs_.assign(m, Rational(0));
        row_sign_.assign(m, Rational(1));
        for (size_t i = 0; i < m; ++i) {
            const auto& row = prob_.rows[i];
            Rational s = rel_sign_[i];  // GE rows are flipped to LE
            for (const auto& [j, c] : row.coeffs) {
                a_[i][static_cast<size_t>(pos[static_cast<size_t>(j)])] += s * c;
                if (neg[static_cast<size_t>(j)] >= 0)
                    a_[i][static_cast<size_t>(neg[static_cast<size_t>(j)])] -= s * c;
            }
            if (slack_col[i] >= 0) a_[i][static_cast<size_t>(slack_col[i])] = 1;
            rhs_[i] = s * row.rhs;
            if (rhs_[i] < 0) {
                row_sign_[i] = -1;
                for (auto& v : a_[i]) v = -v;
                rhs_[i] = -rhs_[i];
            }
            a_[i][static_cast<size_t>(art_col_[i])] = 1;
        }

        cost1_.assign(static_cast<size_t>(ncols_), Rational(0));
        cost2_.assign(static_cast<size_t>(ncols_), Rational(0));
        for (size_t i = 0; i < m; ++i) cost1_[static_cast<size_t>(art_col_[i])] = 1;
        for (int j = 0; j < prob_.num_vars; ++j) {
            cost2_[static_cast<size_t>(pos[static_cast<size_t>(j)])] = prob_.objective[static_cast<size_t>(j)];
            if (neg[static_cast<size_t>(j)] >= 0)
                cost2_[static_cast<size_t>(neg[static_cast<size_t>(j)])] = -prob_.objective[static_cast<size_t>(j)];
        }

        basis_.resize(m);
        for (size_t i = 0; i < m; ++i) basis_[i] = art_col_[i];

        // reduced costs for the artificial basis
        red1_ = cost1_;
        red2_ = cost2_;
        obj1_value_ = 0;
        obj_value_ = 0;
        for (size_t i = 0; i < m; ++i) {
            for (int c = 0; c < ncols_; ++c) red1_[static_cast<size_t>(c)] -= a_[i][static_cast<size_t>(c)];
            obj1_value_ += rhs_[i];
        }
    }

    void pivot(size_t prow, int pcol) {
        Rational piv = a_[prow][static_cast<size_t>(pcol)];
        for (auto& v : a_[prow]) v /= piv;
        rhs_[prow] /= piv;
        for (size_t r = 0; r < a_.size(); ++r) {
            if (r == prow) continue;
            Rational f = a_[r][static_cast<size_t>(pcol)];
            if (f == 0) continue;
            for (int c = 0; c < ncols_; ++c)
                a_[r][static_cast<size_t>(c)] -= f * a_[prow][static_cast<size_t>(c)];
            rhs_[r] -= f * rhs_[prow];
        }
        auto update_red = [&](std::vector<Rational>& red, Rational& val) {
            Rational f = red[static_cast<size_t>(pcol)];
            if (f == 0) return;
            for (int c = 0; c < ncols_; ++c)
                red[static_cast<size_t>(c)] -= f * a_[prow][static_cast<size_t>(c)];
            val += f * rhs_[prow];
        };
        update_red(red1_, obj1_value_);
        update_red(red2_, obj_value_);
        basis_[prow] = pcol;
    }

    // Bland: entering = lowest-index column with negative reduced cost.
    // Returns false when optimal.
    bool step(const std::vector<Rational>& red, bool allow_artificial) {
        int pcol = -1;
        for (int c = 0; c < ncols_; ++c) {
            if (!allow_artificial && var_of_col_[static_cast<size_t>(c)].first < 0 &&
                cost1_[static_cast<size_t>(c)] == 1)
                continue;  // artificial barred in phase 2
            if (red[static_cast<size_t>(c)] < 0) {
                pcol = c;
                break;
            }
        }
        if (pcol < 0) return false;
        int prow = -1;
        Rational best;
        for (size_t r = 0; r < a_.size(); ++r) {
            const Rational& arc = a_[r][static_cast<size_t>(pcol)];
            if (arc <= 0) continue;
            Rational ratio = rhs_[r] / arc;
            if (prow < 0 || ratio < best ||
                (ratio == best && basis_[r] < basis_[static_cast<size_t>(prow)])) {
                prow = static_cast<int>(r);
                best = ratio;
            }
        }
        if (prow < 0) {
            unbounded_col_ = pcol;
            throw Status::Unbounded;
        }
        pivot(static_cast<size_t>(prow), pcol);
        return true;
    }

    bool phase1() {
        while (step(red1_, true)) {
        }
        redcost1_final_ = red1_;
        if (obj1_value_ != 0) return false;
        // pivot lingering zero-level artificials out where possible
        for (size_t r = 0; r < basis_.size(); ++r) {
            int b = basis_[r];
            if (cost1_[static_cast<size_t>(b)] != 1) continue;
            for (int c = 0; c < ncols_; ++c) {
                if (cost1_[static_cast<size_t>(c)] == 1) continue;
                if (a_[r][static_cast<size_t>(c)] != 0) {
                    pivot(r, c);
                    break;
                }
            }
        }
        in_phase1_ = false;
        return true;
    }

    Status phase2() {
        try {
            while (step(red2_, false)) {
            }
        } catch (Status s) {
            return s;
        }
        return Status::Optimal;
    }
};

}  // namespace

Solution solve(const Problem& p) {
    Solution out;
    Tableau t(p);
    Status st;
    try {
        st = t.run();
    } catch (Status s) {
        st = s;
    }
    out.status = st;
    switch (st) {
        case Status::Optimal:
            out.value = t.objective_value();
            out.x = t.primal();
            break;
        case Status::Unbounded:
            out.x = t.primal();
            out.ray = t.ray();
            break;
        case Status::Infeasible:
            out.farkas = t.farkas();
            break;
    }
    return out;
}

Piece solve_parametric(Problem p, int row_id, const Rational& t) {
    auto& row = p.rows[static_cast<size_t>(row_id)];
    if (row.rel != Rel::LE)
        throw std::invalid_argument("parametric row must be a LE row");
    row.rhs = t;
    if (t < 0)
        throw std::invalid_argument("parametric rhs must stay nonnegative");

    Piece piece;
    Tableau tab(p);
    Status st;
    try {
        st = tab.run();
    } catch (Status s) {
        st = s;
    }
    piece.status = st;
    if (st != Status::Optimal) return piece;

    piece.value = tab.objective_value();
    piece.x = tab.primal();

    std::vector<Rational> d = tab.binv_column(row_id);
    piece.slope = tab.basic_cost_dot(d);
    const auto& rhs = tab.rhs();

    bool hi_set = false, lo_set = false;
    Rational dhi, dlo;
    for (size_t r = 0; r < d.size(); ++r) {
        if (d[r] < 0) {
            Rational lim = rhs[r] / -d[r];
            if (!hi_set || lim < dhi) {
                dhi = lim;
                hi_set = true;
            }
        } else if (d[r] > 0) {
            Rational lim = rhs[r] / d[r];
            if (!lo_set || lim < dlo) {
                dlo = lim;
                lo_set = true;
            }
        }
    }
    piece.hi_open = !hi_set;
    piece.lo_open = !lo_set;
    if (hi_set) piece.hi = t + dhi;
    if (lo_set) piece.lo = t - dlo;
    return piece;
}

}  // namespace genproj::lp
