#pragma once

#include <utility>
#include <vector>

#include "genproj/rational.hpp"

namespace genproj::lp {

enum class Status { Optimal, Unbounded, Infeasible };
enum class Rel { LE, GE, EQ };

// Exact linear program: min c.x subject to the listed rows, with each
// variable either nonnegative (default) or free.
struct Problem {
    struct Row {
        std::vector<std::pair<int, Rational>> coeffs;
        Rel rel;
        Rational rhs;
    };

    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<bool> free_var;
    std::vector<Row> rows;

    int add_var(bool is_free = false) {
        objective.push_back(Rational(0));
        free_var.push_back(is_free);
        return num_vars++;
    }
    void set_objective(int var, const Rational& c) { objective[static_cast<size_t>(var)] = c; }
    int add_row(std::vector<std::pair<int, Rational>> coeffs, Rel rel, const Rational& rhs) {
        rows.push_back(Row{std::move(coeffs), rel, rhs});
        return static_cast<int>(rows.size()) - 1;
    }
};

struct Solution {
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x;       // primal point, original variables
    std::vector<Rational> ray;     // improving direction when Unbounded
    std::vector<Rational> farkas;  // row multipliers when Infeasible
};

Solution solve(const Problem& p);

// Sensitivity of one LE row's right-hand side. Solves the program with the
// designated row's rhs set to t and reports the maximal interval around t on
// which the optimal basis (hence the value, linearly) persists.
struct Piece {
    Status status = Status::Infeasible;
    Rational lo, hi;             // valid t-interval of the basis
    bool lo_open = false;        // piece extends to -infinity
    bool hi_open = false;        // piece extends to +infinity
    Rational value;              // optimal value at t
    Rational slope;              // d value / d t on the piece
    std::vector<Rational> x;     // optimal point at t
};

Piece solve_parametric(Problem p, int row_id, const Rational& t);

}  // namespace genproj::lp
