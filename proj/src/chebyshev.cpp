#include "genproj/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace genproj::cheb {

namespace {

double sign_of(double v) { return v < 0 ? -1.0 : 1.0; }

// One parabolic refinement around an interior grid maximum of |h|.
double refine_peak(const std::function<double(double)>& h, double tl, double tm, double tr) {
    double fl = std::fabs(h(tl)), fm = std::fabs(h(tm)), fr = std::fabs(h(tr));
    double denom = (fl - 2 * fm + fr);
    if (denom == 0) return tm;
    double shift = 0.5 * (fl - fr) / denom;
    if (!(shift > -1 && shift < 1)) return tm;
    double t = tm + shift * (tr - tm);
    return std::clamp(t, tl, tr);
}

struct Peaks {
    double norm = 0;
    std::vector<double> points;  // refined near-maximal points, ascending
};

Peaks scan_peaks(const std::function<double(double)>& h, int grid, double tol) {
    Peaks out;
    std::vector<double> cand;
    double step = 1.0 / grid;
    std::vector<double> vals(static_cast<size_t>(grid) + 1);
    for (int i = 0; i <= grid; ++i) vals[static_cast<size_t>(i)] = h(i * step);
    for (int i = 0; i <= grid; ++i) {
        double a = std::fabs(vals[static_cast<size_t>(i)]);
        bool left_ok = i == 0 || a >= std::fabs(vals[static_cast<size_t>(i) - 1]);
        bool right_ok = i == grid || a >= std::fabs(vals[static_cast<size_t>(i) + 1]);
        if (!(left_ok && right_ok)) continue;
        double t = i * step;
        if (i > 0 && i < grid) t = refine_peak(h, (i - 1) * step, t, (i + 1) * step);
        cand.push_back(t);
        out.norm = std::max(out.norm, std::fabs(h(t)));
    }
    for (int i = 0; i <= grid; ++i)
        out.norm = std::max(out.norm, std::fabs(vals[static_cast<size_t>(i)]));
    for (double t : cand)
        if (std::fabs(h(t)) >= out.norm - tol) out.points.push_back(t);
    std::sort(out.points.begin(), out.points.end());
    // collapse refined duplicates
    std::vector<double> dedup;
    for (double t : out.points)
        if (dedup.empty() || t - dedup.back() > 0.25 * step) dedup.push_back(t);
    out.points = std::move(dedup);
    return out;
}

}  // namespace

GridFunction GridFunction::sample(std::function<double(double)> f, int grid) {
    if (grid < 64) throw std::invalid_argument("grid must have at least 64 cells");
    GridFunction g;
    g.values.resize(static_cast<size_t>(grid) + 1);
    for (int i = 0; i <= grid; ++i)
        g.values[static_cast<size_t>(i)] = f(static_cast<double>(i) / grid);
    g.fn = std::move(f);
    return g;
}

double GridFunction::norm() const {
    double m = 0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

double GridFunction::eval(double t) const {
    if (fn) return fn(t);
    int n = grid_n();
    double u = std::clamp(t, 0.0, 1.0) * n;
    int i = std::min(static_cast<int>(u), n - 1);
    double w = u - i;
    return (1 - w) * values[static_cast<size_t>(i)] + w * values[static_cast<size_t>(i) + 1];
}

double Polynomial::operator()(double t) const {
    double acc = 0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

double Polynomial::norm() const {
    auto h = [this](double t) { return (*this)(t); };
    return scan_peaks(h, 4096, 0).norm;
}

double DiscreteMeasure::total_variation() const {
    double s = 0;
    for (const auto& a : atoms) s += std::fabs(a.mass);
    return s;
}

double DiscreteMeasure::pair_with(const GridFunction& f) const {
    double s = 0;
    for (const auto& a : atoms) s += f.eval(a.t) * a.mass;
    return s;
}

std::vector<double> maximizing_set(const GridFunction& f, double tol) {
    if (f.norm() <= 0) throw std::invalid_argument("maximizing_set needs ||f|| > 0");
    auto h = [&f](double t) { return f.eval(t); };
    return scan_peaks(h, f.grid_n(), tol).points;
}

DiscreteMeasure duality_measure(const GridFunction& f, const std::vector<double>& points,
                                const std::vector<double>& weights) {
    if (points.size() != weights.size() || points.empty())
        throw std::invalid_argument("duality_measure: points and weights must pair up");
    double norm = f.norm();
    if (norm <= 0) throw std::invalid_argument("duality_measure needs ||f|| > 0");
    double wsum = 0;
    for (double w : weights) {
        if (w <= 0) throw std::invalid_argument("duality_measure: weights must be positive");
        wsum += w;
    }
    if (std::fabs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("duality_measure: weights must sum to 1");
    for (double t : points)
        if (std::fabs(f.eval(t)) < norm - kDefaultTol)
            throw std::invalid_argument("duality_measure: point outside the maximizing set");

    DiscreteMeasure mu;
    for (size_t i = 0; i < points.size(); ++i)
        mu.atoms.push_back({points[i], weights[i] * sign_of(f.eval(points[i])) * norm});

    if (std::fabs(mu.pair_with(f) - norm * norm) > kDefaultTol * std::max(1.0, norm * norm) ||
        std::fabs(mu.total_variation() - norm) > kDefaultTol)
        throw std::logic_error("duality_measure: duality identities failed");
    return mu;
}

std::pair<Polynomial, AlternationCertificate> remez(const GridFunction& f, int degree) {
    if (degree < 0) throw std::invalid_argument("remez: degree must be >= 0");
    int n = f.grid_n();
    int m = degree + 2;

    // reference: extremum nodes of the Chebyshev polynomial mapped to [0,1]
    std::vector<int> ref(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        double t = 0.5 * (1.0 - std::cos(M_PI * j / (m - 1)));
        ref[static_cast<size_t>(j)] = static_cast<int>(std::lround(t * n));
    }
    for (int j = 1; j < m; ++j)
        ref[static_cast<size_t>(j)] =
            std::max(ref[static_cast<size_t>(j)], ref[static_cast<size_t>(j) - 1] + 1);

    Polynomial p;
    double level = 0;
    bool converged = false;

    for (int iter = 0; iter < 100 && !converged; ++iter) {
        // alternation system: p(t_j) + (-1)^j E = f(t_j)
        int dim = m;
        std::vector<std::vector<double>> a(static_cast<size_t>(dim),
                                           std::vector<double>(static_cast<size_t>(dim), 0.0));
        std::vector<double> b(static_cast<size_t>(dim), 0.0);
        for (int j = 0; j < m; ++j) {
            double t = f.t_of(ref[static_cast<size_t>(j)]);
            double pw = 1;
            for (int k = 0; k <= degree; ++k) {
                a[static_cast<size_t>(j)][static_cast<size_t>(k)] = pw;
                pw *= t;
            }
            a[static_cast<size_t>(j)][static_cast<size_t>(degree) + 1] = (j % 2 == 0) ? 1.0 : -1.0;
            b[static_cast<size_t>(j)] = f.values[static_cast<size_t>(ref[static_cast<size_t>(j)])];
        }
        // gaussian elimination with partial pivoting
        for (int col = 0; col < dim; ++col) {
            int piv = col;
            for (int r = col + 1; r < dim; ++r)
                if (std::fabs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
                    std::fabs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                    piv = r;
            std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
            std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(piv)]);
            for (int r = 0; r < dim; ++r) {
                if (r == col) continue;
                double fct = a[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                             a[static_cast<size_t>(col)][static_cast<size_t>(col)];
                if (fct == 0) continue;
                for (int c = col; c < dim; ++c)
                    a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                        fct * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
                b[static_cast<size_t>(r)] -= fct * b[static_cast<size_t>(col)];
            }
        }
        p.coeffs.assign(static_cast<size_t>(degree) + 1, 0.0);
        for (int k = 0; k <= degree; ++k)
            p.coeffs[static_cast<size_t>(k)] =
                b[static_cast<size_t>(k)] / a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        double e = b[static_cast<size_t>(degree) + 1] /
                   a[static_cast<size_t>(degree) + 1][static_cast<size_t>(degree) + 1];
        level = std::fabs(e);

        // residual scan
        int worst = 0;
        double worst_abs = -1;
        std::vector<double> res(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            res[static_cast<size_t>(i)] = f.values[static_cast<size_t>(i)] - p(f.t_of(i));
            double aabs = std::fabs(res[static_cast<size_t>(i)]);
            if (aabs > worst_abs) {
                worst_abs = aabs;
                worst = i;
            }
        }
        if (worst_abs - level < 1e-10) {
            converged = true;
            break;
        }

        // single-point exchange keeping the signs alternating
        double ws = sign_of(res[static_cast<size_t>(worst)]);
        auto res_sign = [&](int idx) { return sign_of(res[static_cast<size_t>(idx)]); };
        if (worst < ref.front()) {
            if (res_sign(ref.front()) == ws)
                ref.front() = worst;
            else {
                ref.pop_back();
                ref.insert(ref.begin(), worst);
            }
        } else if (worst > ref.back()) {
            if (res_sign(ref.back()) == ws)
                ref.back() = worst;
            else {
                ref.erase(ref.begin());
                ref.push_back(worst);
            }
        } else {
            for (int j = 0; j < m; ++j) {
                if (worst == ref[static_cast<size_t>(j)]) break;
                if (j + 1 < m && worst > ref[static_cast<size_t>(j)] &&
                    worst < ref[static_cast<size_t>(j) + 1]) {
                    if (res_sign(ref[static_cast<size_t>(j)]) == ws)
                        ref[static_cast<size_t>(j)] = worst;
                    else
                        ref[static_cast<size_t>(j) + 1] = worst;
                    break;
                }
            }
        }
    }

    AlternationCertificate cert;
    cert.converged = converged;
    cert.level = level;
    for (int idx : ref) cert.points.push_back(f.t_of(idx));
    cert.sign = (f.values[static_cast<size_t>(ref.front())] - p(f.t_of(ref.front()))) >= 0 ? 1 : -1;
    return {p, cert};
}

bool equioscillation_verify(const GridFunction& f, const Polynomial& p, int degree,
                            double tol) {
    int n = f.grid_n();
    double level = 0;
    std::vector<double> res(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        res[static_cast<size_t>(i)] = f.values[static_cast<size_t>(i)] - p(f.t_of(i));
        level = std::max(level, std::fabs(res[static_cast<size_t>(i)]));
    }
    int count = 0;
    double last_sign = 0;
    for (int i = 0; i <= n; ++i) {
        if (std::fabs(res[static_cast<size_t>(i)]) < level - tol) continue;
        double s = sign_of(res[static_cast<size_t>(i)]);
        if (s != last_sign) {
            ++count;
            last_sign = s;
        }
    }
    return count >= degree + 2;
}

bool gmp_membership(const GridFunction& f, const Polynomial& q, double tol) {
    double nf = f.norm();
    if (nf <= 0) throw std::invalid_argument("gmp_membership needs ||f|| > 0");
    if (std::fabs(q.norm() - nf) > tol) return false;
    // a shared maximizing point where the two functions agree
    std::vector<double> probes;
    for (int i = 0; i <= f.grid_n(); ++i) probes.push_back(f.t_of(i));
    for (double t : maximizing_set(f, tol)) probes.push_back(t);
    for (double t : probes) {
        double fv = f.eval(t);
        if (std::fabs(fv) < nf - tol) continue;
        if (std::fabs(q(t) - fv) <= tol) return true;
    }
    return false;
}

std::vector<Polynomial> gmp_families(const GridFunction& f, int degree, int count) {
    double nf = f.norm();
    if (nf <= 0) throw std::invalid_argument("gmp_families needs ||f|| > 0");
    if (count < 1) throw std::invalid_argument("gmp_families: count must be >= 1");
    auto maxset = maximizing_set(f);
    std::vector<Polynomial> out;

    auto push_checked = [&](Polynomial p) {
        if (gmp_membership(f, p)) out.push_back(std::move(p));
    };

    if (degree == 0) {
        push_checked(Polynomial{{f.eval(maxset.front())}});
        return out;
    }

    auto endpoint = [&]() -> std::optional<double> {
        for (double t : maxset)
            if (t <= kDefaultTol || t >= 1.0 - kDefaultTol) return t < 0.5 ? 0.0 : 1.0;
        return std::nullopt;
    }();

    if (degree == 1) {
        if (!endpoint) {
            // at most the one or two constants through antipodal maximizers
            push_checked(Polynomial{{f.eval(maxset.front())}});
            for (double t : maxset)
                if (sign_of(f.eval(t)) != sign_of(f.eval(maxset.front()))) {
                    push_checked(Polynomial{{f.eval(t)}});
                    break;
                }
            return out;
        }
        double a = *endpoint, fa = f.eval(a);
        for (int j = 0; j < count; ++j) {
            double c = std::fabs(fa) * (2.0 * (j + 1) / (count + 1) - 1.0);
            // line through (a, f(a)) and (1-a, c)
            double slope = (a == 1.0) ? fa - c : c - fa;
            double intercept = (a == 1.0) ? c : fa;
            push_checked(Polynomial{{intercept, slope}});
        }
        return out;
    }

    // degree >= 2: apex-pinned quadratics through an interior maximizer
    std::optional<double> interior;
    for (double t : maxset)
        if (t > kDefaultTol && t < 1.0 - kDefaultTol) {
            interior = t;
            break;
        }
    if (!interior) {
        // fall back to the line family, which still lives in P_n
        auto lines = gmp_families(f, 1, count);
        for (auto& p : lines) p.coeffs.resize(static_cast<size_t>(degree) + 1, 0.0);
        return lines;
    }
    double v = *interior, fv = f.eval(v);
    int tries = 4 * count + 8;
    for (int j = 0; j < tries && static_cast<int>(out.size()) < count; ++j) {
        double c = nf * (2.0 * (j + 1) / (tries + 1) - 1.0);
        double a2 = (c - fv) / (v * v);
        Polynomial q{{fv + a2 * v * v, -2 * a2 * v, a2}};  // fv + a2 (t - v)^2
        q.coeffs.resize(static_cast<size_t>(degree) + 1, 0.0);
        push_checked(std::move(q));
    }
    return out;
}

std::optional<Polynomial> gmp_scaled(const GridFunction& f, const Polynomial& p, double tol) {
    double np = p.norm();
    if (np <= 0) throw std::invalid_argument("gmp_scaled needs ||p|| > 0");
    auto mf = maximizing_set(f, tol);
    auto pf = GridFunction::sample([&p](double t) { return p(t); }, std::max(f.grid_n(), 1024));
    auto mp = maximizing_set(pf, tol);
    double grid_sep = 2.0 / f.grid_n();
    std::optional<double> common;
    for (double a : mf) {
        for (double b : mp)
            if (std::fabs(a - b) <= grid_sep) {
                common = (a + b) / 2;
                break;
            }
        if (common) break;
    }
    if (!common) return std::nullopt;
    double eps = sign_of(f.eval(*common)) * sign_of(p(*common));
    Polynomial q;
    double scale = eps * f.norm() / np;
    for (double c : p.coeffs) q.coeffs.push_back(scale * c);
    if (!gmp_membership(f, q, std::max(tol, 10 * kDefaultTol))) return std::nullopt;
    return q;
}

std::vector<double> agreement_set(const GridFunction& f, const GridFunction& g, double tol) {
    std::vector<double> out;
    double nf = f.norm(), ng = g.norm();
    if (std::fabs(nf - ng) > tol) return out;
    for (int i = 0; i <= f.grid_n(); ++i) {
        double t = f.t_of(i);
        double fv = f.eval(t), gv = g.eval(t);
        if (std::fabs(fv - gv) <= tol && std::fabs(fv) >= nf - tol) out.push_back(t);
    }
    return out;
}

}  // namespace genproj::cheb
