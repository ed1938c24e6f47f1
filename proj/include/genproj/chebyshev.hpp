#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace genproj::cheb {

inline constexpr int kDefaultGrid = 1024;
inline constexpr double kDefaultTol = 1e-8;

// Continuous function on [0,1] modeled by equispaced samples plus an
// optional pointwise evaluator used for the one-step extremum refinement.
struct GridFunction {
    std::vector<double> values;           // samples at i/N, i = 0..N
    std::function<double(double)> fn;     // may be empty

    static GridFunction sample(std::function<double(double)> f, int grid = kDefaultGrid);

    int grid_n() const { return static_cast<int>(values.size()) - 1; }
    double t_of(int i) const { return static_cast<double>(i) / grid_n(); }
    double norm() const;
    // exact evaluator when present, linear interpolation otherwise
    double eval(double t) const;
};

struct Polynomial {
    std::vector<double> coeffs;  // c0 + c1 t + ... + cn t^n

    double operator()(double t) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double norm() const;  // max |p| on [0,1], refined grid
};

struct DiscreteMeasure {
    struct Atom {
        double t;
        double mass;
    };
    std::vector<Atom> atoms;

    double total_variation() const;
    double pair_with(const GridFunction& f) const;  // integral of f against the atoms
};

struct AlternationCertificate {
    std::vector<double> points;
    int sign = 1;        // sign of the residual at the first point
    double level = 0;    // alternation amplitude
    bool converged = true;
};

// Points where |f| comes within tol of its maximum (grid scan plus one
// parabolic refinement pass).
std::vector<double> maximizing_set(const GridFunction& f, double tol = kDefaultTol);

// Atomic element of J(f): atoms alpha_i sign(f(t_i)) ||f|| at points of the
// maximizing set. Validates the pairing and total-variation identities.
DiscreteMeasure duality_measure(const GridFunction& f, const std::vector<double>& points,
                                const std::vector<double>& weights);

// Best uniform approximation of degree n by the exchange algorithm on the
// sample grid.
std::pair<Polynomial, AlternationCertificate> remez(const GridFunction& f, int degree);

// Whether the residual f - p alternates n+2 times at its maximum level.
bool equioscillation_verify(const GridFunction& f, const Polynomial& p, int degree,
                            double tol = kDefaultTol);

// Sufficient membership test for the generalized metric projection onto the
// degree-n polynomials: equal norms plus a shared maximizing point where the
// functions agree.
bool gmp_membership(const GridFunction& f, const Polynomial& q, double tol = kDefaultTol);

// Families of members: the constant through a maximizing point, lines
// through an endpoint maximizer, apex-pinned quadratics through an interior
// maximizer. Every returned polynomial passes gmp_membership.
std::vector<Polynomial> gmp_families(const GridFunction& f, int degree, int count);

// Rescaling route: when the maximizing sets of f and p intersect, the
// sign-corrected rescaling of p is a member.
std::optional<Polynomial> gmp_scaled(const GridFunction& f, const Polynomial& p,
                                     double tol = kDefaultTol);

// Points where f and g agree at their (equal) maximum magnitude.
std::vector<double> agreement_set(const GridFunction& f, const GridFunction& g,
                                  double tol = kDefaultTol);

}  // namespace genproj::cheb
