#include "genproj/cases.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "genproj/chebyshev.hpp"
#include "genproj/hilbert.hpp"
#include "genproj/json_io.hpp"
#include "genproj/projections.hpp"
#include "genproj/sampling.hpp"
#include "genproj/variational.hpp"

namespace genproj::cases {

std::string source_name(Source s) {
    switch (s) {
        case Source::Example: return "example";
        case Source::Direct: return "direct";
        default: return "derived";
    }
}

void CaseOutcome::add(const std::string& label, bool ok, const std::string& expected,
                      const std::string& got, Source src) {
    checks.push_back({label, ok, expected, got, src});
    pass = pass && ok;
}

void CaseOutcome::expect_true(const std::string& label, bool ok, Source src) {
    add(label, ok, "true", ok ? "true" : "false", src);
}

namespace {

std::string fseq_str(const FinSeq& x) { return to_json(x).dump(); }

// min over the duality box of <jz, w> for finitely supported w
Rational box_min_pairing(const DualityBox& box, const FinSeq& w) {
    Rational s = 0;
    for (const auto& [i, v] : w.entries()) {
        auto it = box.fixed.find(i);
        if (it != box.fixed.end())
            s += it->second * v;
        else
            s -= box.free_bound * rabs(v);
    }
    return s;
}

ConvexSetDesc random_set(Rng& rng, bool bounded_only = false) {
    std::uniform_int_distribution<int> pick(0, bounded_only ? 2 : 4);
    switch (pick(rng)) {
        case 0: return ConvexSetDesc::ball(rand_positive_rational(rng, 3));
        case 1: return ConvexSetDesc::simplex(rand_positive_rational(rng, 3));
        case 2: {
            std::vector<FinSeq> pts;
            std::uniform_int_distribution<int> cnt(1, 3);
            int k = cnt(rng);
            for (int j = 0; j < k; ++j) pts.push_back(rand_finseq(rng, 3, 2));
            return ConvexSetDesc::hull(std::move(pts));
        }
        case 3: return ConvexSetDesc::hyperplane(rand_rational(rng, -2, 3));
        default: return ConvexSetDesc::nonneg_cone();
    }
}

FinSeq member_of(Rng& rng, const ConvexSetDesc& set, int dim) {
    switch (set.kind) {
        case SetKind::Ball: {
            FinSeq y = rand_simplex_point(rng, set.radius, dim);
            std::uniform_int_distribution<int> shrink(1, 3);
            return y.scaled(rat(1, shrink(rng)));
        }
        case SetKind::Simplex:
            return rand_simplex_point(rng, set.radius, dim, set.zero_slot);
        case SetKind::Hyperplane: {
            FinSeq y = rand_finseq(rng, dim, 2);
            Rational s = 0;
            for (const auto& [i, v] : y.entries()) s += v;
            y.set(dim, y.value(dim) + set.level - s);
            return y;
        }
        case SetKind::NonnegCone: {
            FinSeq y = rand_finseq(rng, dim, 2);
            FinSeq out;
            for (const auto& [i, v] : y.entries()) out.set(i, rabs(v));
            return out;
        }
        case SetKind::NonposCone: {
            FinSeq y = rand_finseq(rng, dim, 2);
            FinSeq out;
            for (const auto& [i, v] : y.entries()) out.set(i, -rabs(v));
            return out;
        }
        case SetKind::Hull: {
            std::vector<Rational> w;
            Rational total = 0;
            std::uniform_int_distribution<int> num(0, 5);
            for (size_t j = 0; j < set.points.size(); ++j) {
                w.emplace_back(num(rng));
                total += w.back();
            }
            if (total == 0) return set.points.front();
            FinSeq y;
            for (size_t j = 0; j < set.points.size(); ++j)
                y = y.plus(set.points[j].scaled(w[j] / total));
            return y;
        }
        default:
            return FinSeq();
    }
}

// ---------------------------------------------------------------- lemma1.1
CaseOutcome run_lemma11(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    bool incl = true, dich = true;
    for (int t = 0; t < 200; ++t) {
        Rational r = rand_positive_rational(rng, 3);
        FinSeq d = rand_simplex_point(rng, r, 5);
        incl = incl && membership(ConvexSetDesc::ball(r), d) &&
               membership(ConvexSetDesc::hyperplane(r), d);
        FinSeq y = (t % 2 == 0) ? rand_simplex_point(rng, Rational(1), 5)
                                : rand_hyperplane_point_off_simplex(rng, 5);
        Rational n = norm_l1(y);
        bool in_d = membership(ConvexSetDesc::simplex(Rational(1)), y);
        dich = dich && n >= 1 && ((n == 1) == in_d) && ((n > 1) == !in_d);
    }
    out.expect_true("D(r) inside S(r) and T(r), 200 samples", incl, Source::Example);
    out.expect_true("on T: ||y||>=1, ||y||=1 iff member of D", dich, Source::Example);
    return out;
}

// ------------------------------------------------------------------ ex2.4
CaseOutcome run_ex24(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    auto T1 = ConvexSetDesc::hyperplane(Rational(1));
    TailSeq ones = TailSeq::constant(Rational(1));
    for (int b = 2; b <= 6; ++b) {
        auto res = gen_project(T1, ones, b);
        out.add("value at budget " + std::to_string(b), res.optimal_value == 0, "0",
                rat_str(res.optimal_value), Source::Example);
        if (b == 4)
            out.add("recognized solution set", res.set_tag == "D(1)", "D(1)", res.set_tag,
                    Source::Example);
    }
    Rational opt(0);
    bool accept = true, reject = true;
    for (int t = 0; t < 20; ++t) {
        accept = accept &&
                 solution_set_contains(T1, ones, rand_simplex_point(rng, Rational(1), 4), 4, opt);
        reject = reject &&
                 !solution_set_contains(T1, ones, rand_hyperplane_point_off_simplex(rng, 4), 4, opt);
    }
    out.expect_true("oracle accepts 20 simplex points", accept, Source::Example);
    out.expect_true("oracle rejects 20 off-simplex points of T", reject, Source::Example);
    return out;
}

// ------------------------------------------------------------------ ex2.5
CaseOutcome run_ex25(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    auto cone = ConvexSetDesc::nonneg_cone();
    bool all_ok = true;
    for (int t = 0; t < 100; ++t) {
        TailSeq phi = rand_nonpositive_tailseq(rng, 4);
        auto res = gen_project(cone, phi, ctx.budget);
        Rational n = norm_sup(phi);
        all_ok = all_ok && res.optimal_value == n * n && res.minimizer->is_zero();
    }
    out.expect_true("100 nonpositive duals project to the origin with value ||phi||^2",
                    all_ok, Source::Example);
    auto mirror = gen_project(ConvexSetDesc::nonpos_cone(), TailSeq::constant(Rational(2)),
                              ctx.budget);
    out.add("mirror cone value", mirror.optimal_value == 4, "4",
            rat_str(mirror.optimal_value), Source::Example);
    out.expect_true("mirror cone minimizer is the origin", mirror.minimizer->is_zero(),
                    Source::Example);
    return out;
}

// ------------------------------------------------------------------ ex2.8
CaseOutcome run_ex28(const CaseContext& ctx) {
    CaseOutcome out;
    auto rep = c0_geometric_tail_probe(20, 1000, ctx.seed);
    double at20 = rep.witness_values.back();
    out.add("V(x, w_20) < 1e-5", at20 < 1e-5, "< 1e-05", std::to_string(at20),
            Source::Example);
    out.add("sampled infimum over c0 stays positive", rep.sampled_infimum > 0, "> 0",
            std::to_string(rep.sampled_infimum), Source::Derived);
    out.expect_true("reported unattained", !rep.attained, Source::Example);
    bool monotone = true;
    for (size_t i = 1; i < rep.witness_values.size(); ++i)
        monotone = monotone && rep.witness_values[i] < rep.witness_values[i - 1];
    out.expect_true("witness values decrease toward zero", monotone, Source::Derived);
    return out;
}

// ------------------------------------------------------------------ ex2.9
CaseOutcome run_ex29(const CaseContext& ctx) {
    CaseOutcome out;
    auto T1 = ConvexSetDesc::hyperplane(Rational(1));
    TailSeq gamma({Rational(3), Rational(1)}, Rational(0));
    FinSeq z = atom(1, Rational(1));

    out.add("V(gamma, z)", v_eval(gamma, z).value == 4, "4",
            rat_str(v_eval(gamma, z).value), Source::Example);

    auto res = gen_project(T1, gamma, ctx.budget);
    out.add("exact optimum over T", res.optimal_value == rat(15, 4), "15/4",
            rat_str(res.optimal_value), Source::Derived);
    out.expect_true("optimum stable under budget doubling", res.truncation_stable,
                    Source::Derived);
    FinSeq ystar;
    ystar.set(1, rat(5, 4));
    ystar.set(3, rat(-1, 4));
    out.expect_true("derived minimizer accepted by the oracle",
                    solution_set_contains(T1, gamma, ystar, ctx.budget, res.optimal_value),
                    Source::Derived);
    out.expect_true("z is not optimal",
                    !solution_set_contains(T1, gamma, z, ctx.budget, res.optimal_value),
                    Source::Derived);

    auto ce = vi_counterexample(T1, gamma, z, ctx.budget);
    FinSeq expected = atom(1, Rational(2)).minus(atom(3, Rational(1)));
    out.add("universal violation point", ce && *ce == expected, fseq_str(expected),
            ce ? fseq_str(*ce) : "none", Source::Example);
    if (ce) {
        Rational worst = pair(gamma, z.minus(*ce)) - box_min_pairing(duality_l1(z), z.minus(*ce));
        out.add("max over the box at the violation", worst <= -1, "<= -1", rat_str(worst),
                Source::Example);
    }
    auto rep = vi_sufficiency(T1, gamma, z, ctx.budget);
    out.expect_true("no duality selection repairs z", !rep.holds, Source::Example);
    auto rep_star = vi_sufficiency(T1, gamma, ystar, ctx.budget);
    out.expect_true("inequality holds at the derived minimizer", rep_star.holds,
                    Source::Derived);
    return out;
}

// ---------------------------------------------------------------- prop2.3
CaseOutcome run_prop23(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    bool bounds = true, zero_iff = true, convex = true, fixed_on_c = true;
    const Rational lambdas[] = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
    for (int t = 0; t < 1000; ++t) {
        FinSeq x = rand_finseq(rng, 5);
        TailSeq phi = (t % 4 == 0) ? *identical_points_witness(x, x) : rand_tailseq(rng, 5);
        auto lv = v_eval(phi, x);
        bounds = bounds && lv.lower_bound <= lv.value && lv.value <= lv.upper_bound &&
                 lv.value >= 0;
        zero_iff = zero_iff && (v_zero_iff_duality(phi, x) == (lv.value == 0));

        TailSeq phi2 = rand_tailseq(rng, 5);
        FinSeq x2 = rand_finseq(rng, 5);
        for (const Rational& lam : lambdas) {
            // convexity in the dual argument
            TailSeq mix = phi;
            {
                int len = std::max(phi.prefix_len(), phi2.prefix_len());
                std::vector<Rational> pre(static_cast<size_t>(len));
                for (int i = 1; i <= len; ++i)
                    pre[static_cast<size_t>(i) - 1] =
                        lam * phi.value(i) + (1 - lam) * phi2.value(i);
                mix = TailSeq(std::move(pre), lam * phi.tail() + (1 - lam) * phi2.tail());
            }
            convex = convex && v_eval(mix, x).value <= lam * v_eval(phi, x).value +
                                                           (1 - lam) * v_eval(phi2, x).value;
            // convexity in the primal argument
            FinSeq xmix = x.scaled(lam).plus(x2.scaled(1 - lam));
            convex = convex && v_eval(phi, xmix).value <= lam * v_eval(phi, x).value +
                                                              (1 - lam) * v_eval(phi, x2).value;
        }

        // fixed on C: z in pi_C(jy) iff jy in Jz, on the unit simplex
        if (t % 10 == 0) {
            auto D1 = ConvexSetDesc::simplex(Rational(1));
            FinSeq y = rand_simplex_point(rng, Rational(1), 4);
            FinSeq zz = rand_simplex_point(rng, Rational(1), 4);
            auto verts = box_vertices(duality_l1(y), 4, 64);
            const TailSeq& jy = verts[std::uniform_int_distribution<size_t>(
                0, verts.size() - 1)(rng)];
            bool in_pi = solution_set_contains(D1, jy, zz, 4, Rational(0));
            bool in_jz = duality_contains(duality_l1(zz), jy);
            fixed_on_c = fixed_on_c && (in_pi == in_jz);
        }
    }
    out.expect_true("two-sided norm bounds, 1000 trials", bounds, Source::Example);
    out.expect_true("V=0 iff dual element belongs to J(x), 1000 trials", zero_iff,
                    Source::Example);
    out.expect_true("convexity in each argument", convex, Source::Example);
    out.expect_true("fixed-on-C equivalence on the simplex", fixed_on_c, Source::Example);
    return out;
}

// ------------------------------------------------------------ monotonicity
CaseOutcome run_monotonicity(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    bool pi_monotone = true, gmp_monotone = true;
    for (int t = 0; t < 1000; ++t) {
        ConvexSetDesc set = random_set(rng);
        TailSeq p1 = rand_tailseq(rng, 3, 2);
        TailSeq p2 = rand_tailseq(rng, 3, 2);
        if (set.kind == SetKind::NonnegCone) {
            p1 = rand_nonpositive_tailseq(rng, 3, 2);
            p2 = rand_nonpositive_tailseq(rng, 3, 2);
        }
        if (set.kind == SetKind::Hyperplane) continue;  // dual range with finite inf is thin
        auto u1 = gen_project(set, p1, 3);
        auto u2 = gen_project(set, p2, 3);
        pi_monotone = pi_monotone &&
                      pair(p1.minus(p2), u1.minimizer->minus(*u2.minimizer)) >= 0;

        if (t % 5 == 0) {
            FinSeq x = rand_finseq(rng, 3, 2);
            FinSeq y = rand_finseq(rng, 3, 2);
            auto vx = box_vertices(duality_l1(x), 3);
            auto vy = box_vertices(duality_l1(y), 3);
            const TailSeq& jx = vx[std::uniform_int_distribution<size_t>(0, vx.size() - 1)(rng)];
            const TailSeq& jy = vy[std::uniform_int_distribution<size_t>(0, vy.size() - 1)(rng)];
            auto set2 = random_set(rng, /*bounded_only=*/true);
            auto w1 = gen_project(set2, jx, 3);
            auto w2 = gen_project(set2, jy, 3);
            gmp_monotone = gmp_monotone &&
                           pair(jx.minus(jy), w1.minimizer->minus(*w2.minimizer)) >= 0;
        }
    }
    out.expect_true("generalized projection is monotone on computed minimizers",
                    pi_monotone, Source::Example);
    out.expect_true("generalized metric projection is monotone over duality selections",
                    gmp_monotone, Source::Example);
    return out;
}

// --------------------------------------------------------------- soundness
CaseOutcome run_soundness(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    bool sound = true;
    int held = 0;
    for (int t = 0; t < 1000; ++t) {
        ConvexSetDesc set = random_set(rng);
        FinSeq z = member_of(rng, set, 3);
        // alternate a raw dual element with a duality selection of some x
        TailSeq phi;
        if (t % 2 == 0) {
            phi = rand_tailseq(rng, 3, 2);
        } else {
            FinSeq x = rand_finseq(rng, 3, 2);
            auto verts = box_vertices(duality_l1(x), 3);
            phi = verts[std::uniform_int_distribution<size_t>(0, verts.size() - 1)(rng)];
        }
        auto rep = vi_sufficiency(set, phi, z, 3);
        if (!rep.holds) continue;
        ++held;
        sound = sound && solution_set_contains(set, phi, z, 3);
    }
    // a guaranteed-to-hold instance so the sweep is not vacuous
    auto repD = vi_sufficiency(ConvexSetDesc::simplex(Rational(1)),
                               TailSeq::constant(Rational(1)), atom(1, Rational(1)), 3);
    out.expect_true("inequality holds for the all-ones dual on the simplex", repD.holds,
                    Source::Direct);
    out.add("every held inequality certifies optimality", sound && held > 0,
            "optimal whenever held", sound ? "held " + std::to_string(held) + " times, all optimal"
                                           : "violated", Source::Example);
    return out;
}

// ------------------------------------------------------------------ ex3.4
CaseOutcome run_ex34(const CaseContext& ctx) {
    CaseOutcome out;
    std::vector<FinSeq> gens;
    for (int m = 1; m <= 50; ++m) gens.push_back(atom(m, rat(m + 1, m)));
    auto hull = ConvexSetDesc::hull(std::move(gens));
    auto probe = proximality_probe(hull, FinSeq(), {2, 5, 10, 50});
    for (const auto& [b, v] : probe.values) {
        Rational expect = rat(b + 1, b) * rat(b + 1, b);
        out.add("optimum at budget " + std::to_string(b), v == expect, rat_str(expect),
                rat_str(v), Source::Derived);
    }
    out.expect_true("values strictly decrease toward 1", probe.strictly_decreasing,
                    Source::Example);
    out.expect_true("non-attainment flagged", !probe.attained, Source::Example);

    auto stable = proximality_probe(ConvexSetDesc::simplex(Rational(1)), FinSeq(), {2, 5, 10});
    bool all_one = true;
    for (const auto& [b, v] : stable.values) all_one = all_one && v == 1;
    out.expect_true("simplex probe attains value 1 at every budget",
                    all_one && stable.attained, Source::Direct);
    return out;
}

// ------------------------------------------------------------------ ex3.9
CaseOutcome run_ex39(const CaseContext& ctx) {
    CaseOutcome out;
    auto T1 = ConvexSetDesc::hyperplane(Rational(1));
    FinSeq u = atom(1, Rational(3));
    TailSeq gamma({Rational(3), Rational(1)}, Rational(0));
    auto box_u = duality_l1(u);
    out.expect_true("gamma lies in J(u)", duality_contains(box_u, gamma), Source::Example);

    FinSeq z = atom(1, Rational(1));
    auto ce = vi_counterexample(T1, gamma, z, ctx.budget);
    out.expect_true("violation for every duality selection at z", ce.has_value(),
                    Source::Example);

    bool gammas_in_ju = true;
    for (int m = 2; m <= 6; ++m) {
        TailSeq gm = *identical_points_witness(u, atom(1, Rational(2)).minus(atom(m, Rational(1))));
        gammas_in_ju = gammas_in_ju && duality_contains(box_u, gm);
    }
    out.expect_true("the sign-flipped selections lie in J(u)", gammas_in_ju, Source::Example);
    return out;
}

// ---------------------------------------------------------------- prop4.1
CaseOutcome run_prop41(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    bool values_match = true, cross = true;
    for (int t = 0; t < 200; ++t) {
        ConvexSetDesc set = random_set(rng);
        auto pi = gen_metric_project(set, FinSeq(), 3);
        auto pm = metric_project(set, FinSeq(), 3);
        values_match = values_match && pi.optimal_value == pm.optimal_value * pm.optimal_value;
        cross = cross &&
                metric_solution_contains(set, FinSeq(), *pi.minimizer, 3, pm.optimal_value) &&
                gen_metric_solution_contains(set, FinSeq(), *pm.minimizer, 3);
    }
    out.expect_true("projection of the origin agrees across the two maps, 200 sets",
                    values_match, Source::Example);
    out.expect_true("minimizers cross-accepted by both oracles", cross, Source::Example);
    return out;
}

// ------------------------------------------------------------------ ex4.5
CaseOutcome run_ex45(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    auto D1 = ConvexSetDesc::simplex(Rational(1));
    TailSeq ones = TailSeq::constant(Rational(1));
    bool in_all = true, ident = true, accepted = true;
    for (int t = 0; t < 20; ++t) {
        FinSeq x = rand_simplex_point(rng, Rational(1), 4);
        FinSeq y = rand_simplex_point(rng, Rational(1), 4);
        in_all = in_all && duality_contains(duality_l1(x), ones);
        ident = ident && identical_points(x, y);
        accepted = accepted && gen_metric_solution_contains(D1, x, y, 4);
    }
    out.expect_true("the all-ones dual element lies in J(x) for x in D", in_all,
                    Source::Example);
    out.expect_true("all pairs in D are generalized identical", ident, Source::Example);
    FinSeq x0 = rand_simplex_point(rng, Rational(1), 4);
    auto res = gen_metric_project(D1, x0, 4);
    out.add("projection of a simplex point onto D has value 0", res.optimal_value == 0,
            "0", rat_str(res.optimal_value), Source::Example);
    out.expect_true("all of D accepted by the union oracle", accepted, Source::Example);
    return out;
}

// ------------------------------------------------------------------ ex4.6
CaseOutcome run_ex46(const CaseContext& ctx) {
    CaseOutcome out;
    auto S1 = ConvexSetDesc::ball(Rational(1));
    // full-support simplex point: the union is exactly D
    FinSeq x;
    for (int i = 1; i <= 4; ++i) x.set(i, rat(1, 4));
    auto res = gen_metric_project(S1, x, 4);
    out.add("value at a fully supported simplex point", res.optimal_value == 0, "0",
            rat_str(res.optimal_value), Source::Example);
    FinSeq neg = atom(3, rat(-1, 2)).plus(atom(4, rat(-1, 2)));
    out.expect_true("ball point with negative mass rejected for full support",
                    !gen_metric_solution_contains(S1, x, neg, 4), Source::Example);
    // zero entries open the union beyond D
    FinSeq x2 = atom(1, rat(1, 2)).plus(atom(2, rat(1, 2)));
    out.expect_true("same point accepted once the support has holes",
                    gen_metric_solution_contains(S1, x2, neg, 4), Source::Example);
    out.expect_true("the extra member is outside D",
                    !membership(ConvexSetDesc::simplex(Rational(1)), neg), Source::Example);
    return out;
}

// ------------------------------------------------------------------ ex4.8
CaseOutcome run_ex48(const CaseContext& ctx) {
    CaseOutcome out;
    auto S1 = ConvexSetDesc::ball(Rational(1));
    FinSeq y;
    for (int i = 1; i <= 4; ++i) y.set(i, rat(1, 2));  // member of D+(2), h = 2

    auto gmp = gen_metric_project(S1, y, 4);
    out.add("generalized metric value (h-r)^2", gmp.optimal_value == 1, "1",
            rat_str(gmp.optimal_value), Source::Example);
    out.add("recognized solution set", gmp.set_tag == "D(1)", "D(1)", gmp.set_tag,
            Source::Example);

    auto pm = metric_project(S1, y, 4);
    out.add("metric value h-r", pm.optimal_value == 1, "1", rat_str(pm.optimal_value),
            Source::Example);
    out.expect_true("the scaled point (r/h) y is a nearest point",
                    metric_solution_contains(S1, y, y.scaled(rat(1, 2)), 4, pm.optimal_value),
                    Source::Example);

    // strictly decreasing entries order the atom distances
    FinSeq yd;
    yd.set(1, rat(4, 5));
    yd.set(2, rat(3, 5));
    yd.set(3, rat(2, 5));
    yd.set(4, rat(1, 5));
    bool ordered = true, excluded = true;
    auto pd = metric_project(S1, yd, 4);
    for (int m = 1; m <= 4; ++m) {
        for (int k = m + 1; k <= 4; ++k)
            ordered = ordered &&
                      norm_l1(yd.minus(atom(m, Rational(1)))) < norm_l1(yd.minus(atom(k, Rational(1))));
        excluded = excluded &&
                   !metric_solution_contains(S1, yd, atom(m, Rational(1)), 4, pd.optimal_value);
    }
    out.expect_true("larger entries give closer atoms", ordered, Source::Example);
    out.expect_true("no atom of D(1) is a nearest point here", excluded, Source::Derived);
    return out;
}

// -------------------------------------------------------------- lemma4.10
CaseOutcome run_lemma410(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    int mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        Rational r = rand_positive_rational(rng, 3);
        FinSeq x = (t % 2 == 0) ? rand_simplex_point(rng, r, 5) : rand_finseq(rng, 5);
        bool via_box = inverse_duality_contains(TailSeq::constant(r), x);
        bool direct = membership(inverse_duality_solve_beta(r), x);
        if (via_box != direct) ++mismatches;
    }
    out.add("inverse image of beta_r equals D(r), 1000 samples", mismatches == 0, "0",
            std::to_string(mismatches), Source::Example);

    // fully supported positive member: no free coordinates inside the budget
    FinSeq full;
    for (int i = 1; i <= 4; ++i) full.set(i, rat(1, 4));
    auto box = duality_l1(full);
    out.add("full-support member pins every coordinate in budget",
            static_cast<int>(box.fixed.size()) == 4, "4",
            std::to_string(box.fixed.size()), Source::Example);
    return out;
}

// ----------------------------------------------------------------- ex4.12
CaseOutcome run_ex412(const CaseContext& ctx) {
    CaseOutcome out;
    auto T1 = ConvexSetDesc::hyperplane(Rational(1));
    FinSeq u = atom(1, Rational(3));
    int budget = std::max(ctx.budget, 4);

    auto pm = metric_project(T1, u, budget);
    out.add("distance from (3,0,...) to T", pm.optimal_value == 2, "2",
            rat_str(pm.optimal_value), Source::Example);

    auto box_u = duality_l1(u);
    bool v_ok = true, j_ok = true, pi_ok = true;
    for (int m = 2; m <= budget; ++m) {
        FinSeq vm = atom(1, Rational(2)).minus(atom(m, Rational(1)));
        TailSeq gm = *identical_points_witness(u, vm);
        v_ok = v_ok && metric_solution_contains(T1, u, vm, budget, pm.optimal_value);
        j_ok = j_ok && duality_contains(box_u, gm) && inverse_duality_contains(gm, vm);
        pi_ok = pi_ok && gen_metric_solution_contains(T1, u, vm, budget);
    }
    out.expect_true("each v_m is a nearest point", v_ok, Source::Example);
    out.expect_true("each gamma_m certifies u and v_m simultaneously", j_ok, Source::Example);
    out.expect_true("each v_m accepted by the union oracle", pi_ok, Source::Example);
    out.expect_true("(1,0,...) is a nearest point too",
                    metric_solution_contains(T1, u, atom(1, Rational(1)), budget,
                                             pm.optimal_value),
                    Source::Example);
    out.expect_true("a mixed nearest point passes the face conditions",
                    metric_solution_contains(
                        T1, u,
                        atom(1, Rational(3)).minus(atom(2, Rational(1))).minus(atom(3, Rational(1))),
                        budget, pm.optimal_value),
                    Source::Derived);
    out.expect_true("(0,1,0,...) is not a nearest point",
                    !metric_solution_contains(T1, u, atom(2, Rational(1)), budget,
                                              pm.optimal_value),
                    Source::Derived);

    // inverse image of gamma_2 meets T only at v_2 (grid scan)
    TailSeq g2 = *identical_points_witness(u, atom(1, Rational(2)).minus(atom(2, Rational(1))));
    FinSeq v2 = atom(1, Rational(2)).minus(atom(2, Rational(1)));
    bool unique = true;
    for (int a = -12; a <= 12 && unique; ++a)
        for (int b = -12; b <= 12 && unique; ++b) {
            FinSeq yy;
            yy.set(1, rat(a, 4));
            yy.set(2, rat(b, 4));
            yy.set(3, Rational(1) - rat(a, 4) - rat(b, 4));
            if (yy == v2) continue;
            if (inverse_duality_contains(g2, yy)) unique = false;
        }
    out.expect_true("inverse image of gamma_2 meets T only at v_2 (grid scan)", unique,
                    Source::Derived);
    return out;
}

// -------------------------------------------------------------- lemma4.13
CaseOutcome run_lemma413(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    Rational r = rat(2);
    TailSeq beta = TailSeq::constant(r);
    auto dr = duality_c(beta);
    bool members_ok = true;
    for (int t = 0; t < 500; ++t) {
        FinSeq y = rand_simplex_point(rng, r, 4, /*with_zero_slot=*/true);
        members_ok = members_ok && membership(dr, y) && pair_c(y, beta) == r * r &&
                     v_eval_c(y, beta).value == 0;
    }
    out.expect_true("members of D(r) pair to r^2 and zero the functional", members_ok,
                    Source::Example);

    FinSeq bad = atom(0, r).plus(atom(2, Rational(-1))).plus(atom(3, Rational(1)));
    out.expect_true("negative entries are rejected", !membership(dr, bad), Source::Example);

    // flat-pattern members of c0 against a finitely supported dual element
    FinSeq g = atom(0, rat(1, 2)).plus(atom(1, Rational(1))).plus(atom(2, rat(1, 2)));
    TailSeq e2({r, r}, Rational(0));
    Rational expected = r * r - 2 * r * (g.value(1) + g.value(2)) + r * r;
    out.add("flat witness evaluation", v_eval_c(g, e2).value == expected, rat_str(expected),
            rat_str(v_eval_c(g, e2).value), Source::Example);
    // with no slot mass and the support covered, the functional vanishes
    FinSeq g0 = atom(1, Rational(1)).plus(atom(2, Rational(1)));
    out.add("slot-free covered witness zeroes the functional", v_eval_c(g0, e2).value == 0,
            "0", rat_str(v_eval_c(g0, e2).value), Source::Example);
    return out;
}

// --------------------------------------------------------------- prop4.15
CaseOutcome run_prop415(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    Rational r = rat(3, 2);
    TailSeq beta = TailSeq::constant(r);
    int wrong = 0;
    for (int t = 0; t < 1000; ++t) {
        TailSeq s;
        if (t % 3 == 0) {
            // engineered member of the metric solution set: entries in [0, 2r]
            std::uniform_int_distribution<int> num(0, 12);
            std::vector<Rational> pre;
            for (int j = 0; j < 4; ++j) pre.emplace_back(rat(num(rng), 4));
            s = TailSeq(std::move(pre), Rational(0));
        } else {
            s = rand_tailseq(rng, 5, 3, /*force_c0=*/true);
        }
        auto [in_p, in_pi] = c0_projections(r, s);
        // direct distance oracle for the metric side
        Rational dist = norm_sup(beta.minus(s));
        bool direct_p = dist == r;
        bool direct_pi = false;
        for (const auto& v : s.prefix()) direct_pi = direct_pi || v == r;
        if (in_p != direct_p || in_pi != direct_pi) ++wrong;
    }
    out.add("classification against the direct oracles, 1000 samples", wrong == 0, "0",
            std::to_string(wrong), Source::Example);
    auto [p0, pi0] = c0_projections(Rational(1), TailSeq());
    out.expect_true("the origin is a nearest point but not in the union", p0 && !pi0,
                    Source::Example);
    auto [p1, pi1] = c0_projections(Rational(1), TailSeq({Rational(1)}, Rational(0)));
    out.expect_true("a sequence hitting r joins the union", p1 && pi1, Source::Example);
    auto [p3, pi3] = c0_projections(Rational(1), TailSeq({Rational(3)}, Rational(0)));
    out.expect_true("an overshooting sequence is in neither", !p3 && !pi3, Source::Derived);
    return out;
}

// ----------------------------------------------------------------- thm6.3
CaseOutcome run_thm63(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    bool equiv = true;
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        ConvexSetDesc set = random_set(rng, /*bounded_only=*/true);
        FinSeq x = rand_finseq(rng, 3, 3);
        if (membership(set, x)) continue;
        auto pm = metric_project(set, x, 3);
        // the solver's nearest point must satisfy the inequality...
        equiv = equiv && metric_vi_check(set, x, *pm.minimizer, 3).holds;
        // ...and a feasible point passes iff it is nearest
        FinSeq z = member_of(rng, set, 3);
        bool vi = metric_vi_check(set, x, z, 3).holds;
        bool nearest = norm_l1(x.minus(z)) == pm.optimal_value;
        equiv = equiv && (vi == nearest);
        ++checked;
    }
    out.add("equivalence on random instances", equiv && checked > 200,
            "equivalence on > 200 instances",
            equiv ? "held on " + std::to_string(checked) : "violated", Source::Example);
    return out;
}

// ------------------------------------------------------------------ remez
CaseOutcome run_remez(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    auto f1 = cheb::GridFunction::sample([](double t) { return t * t; });
    auto [p1, c1] = cheb::remez(f1, 1);
    out.add("degree-1 level for t^2", std::fabs(c1.level - 0.125) <= 1e-9, "0.125",
            std::to_string(c1.level), Source::Derived);
    out.expect_true("equioscillation certificate verifies",
                    cheb::equioscillation_verify(f1, p1, 1), Source::Example);
    out.add("certificate has 3 points", c1.points.size() == 3, "3",
            std::to_string(c1.points.size()), Source::Example);

    auto f2 = cheb::GridFunction::sample([](double t) { return t; });
    auto [p2, c2] = cheb::remez(f2, 0);
    out.add("degree-0 level for t", std::fabs(c2.level - 0.5) <= 1e-9, "0.5",
            std::to_string(c2.level), Source::Derived);
    auto [p3, c3] = cheb::remez(f2, 1);
    out.add("degree-1 level for t", std::fabs(c3.level) <= 1e-9, "0", std::to_string(c3.level),
            Source::Direct);

    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    bool never_better = true;
    for (int j = 0; j < 20; ++j) {
        cheb::Polynomial q{{p1.coeffs[0] + 0.2 * coef(rng), p1.coeffs[1] + 0.2 * coef(rng)}};
        double worst = 0;
        for (int i = 0; i <= f1.grid_n(); ++i)
            worst = std::max(worst, std::fabs(f1.values[static_cast<size_t>(i)] -
                                              q(f1.t_of(i))));
        never_better = never_better && worst >= c1.level - 1e-12;
    }
    out.expect_true("20 perturbed competitors never beat the exchange level", never_better,
                    Source::Derived);
    return out;
}

// ----------------------------------------------------------------- thm5.5
CaseOutcome run_thm55(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    auto id = cheb::GridFunction::sample([](double t) { return t; });

    auto lines = cheb::gmp_families(id, 1, 25);
    bool distinct = true;
    for (size_t a = 0; a < lines.size(); ++a)
        for (size_t b = a + 1; b < lines.size(); ++b)
            distinct = distinct && std::fabs(lines[a].coeffs[0] - lines[b].coeffs[0]) > 1e-12;
    out.add("25 distinct lines through the endpoint maximizer", lines.size() == 25, "25",
            std::to_string(lines.size()), Source::Example);
    out.expect_true("line family members are distinct", distinct, Source::Example);

    auto consts = cheb::gmp_families(id, 0, 1);
    out.add("degree-0 family is the single constant", consts.size() == 1, "1",
            std::to_string(consts.size()), Source::Example);

    auto bump = cheb::GridFunction::sample([](double t) { return 4 * t * (1 - t); });
    auto quads = cheb::gmp_families(bump, 2, 4);
    out.add("4 apex-pinned quadratics at the interior maximizer", quads.size() == 4, "4",
            std::to_string(quads.size()), Source::Example);

    out.expect_true("constant 1 is a member for f = t",
                    cheb::gmp_membership(id, cheb::Polynomial{{1.0}}), Source::Derived);
    out.expect_true("constant 0 is not a member for f = t",
                    !cheb::gmp_membership(id, cheb::Polynomial{{0.0}}), Source::Direct);

    auto s1 = cheb::gmp_scaled(id, cheb::Polynomial{{0.0, 2.0}});
    out.expect_true("2t rescales onto t",
                    s1 && std::fabs((*s1)(1.0) - 1.0) < 1e-9 && std::fabs((*s1)(0.0)) < 1e-9,
                    Source::Derived);
    auto s2 = cheb::gmp_scaled(id, cheb::Polynomial{{0.0, -3.0}});
    out.expect_true("-3t rescales onto t with a sign flip",
                    s2 && std::fabs((*s2)(1.0) - 1.0) < 1e-9, Source::Derived);
    auto s3 = cheb::gmp_scaled(id, cheb::Polynomial{{0.0, 1.0, -1.0}});
    out.expect_true("t(1-t) has no shared maximizer with t", !s3.has_value(), Source::Derived);

    auto ag1 = cheb::agreement_set(id, id);
    out.expect_true("f agrees with itself exactly at its maximizer",
                    ag1.size() == 1 && std::fabs(ag1[0] - 1.0) < 1e-9, Source::Direct);
    auto gconst = cheb::GridFunction::sample([](double) { return 1.0; });
    auto ag2 = cheb::agreement_set(id, gconst);
    out.expect_true("t and the constant 1 agree at the right endpoint",
                    ag2.size() == 1 && std::fabs(ag2[0] - 1.0) < 1e-9, Source::Derived);
    auto gneg = cheb::GridFunction::sample([](double t) { return -t; });
    out.expect_true("t and -t never agree at full magnitude",
                    cheb::agreement_set(id, gneg).empty(), Source::Derived);

    // atomic duality measures over the maximizing set of cos(4 pi t)
    auto osc = cheb::GridFunction::sample([](double t) { return std::cos(4 * M_PI * t); });
    auto maxset = cheb::maximizing_set(osc);
    out.add("maximizing set of the 2-period cosine", maxset.size() == 5, "5 points",
            std::to_string(maxset.size()), Source::Derived);
    bool measures_ok = true;
    std::uniform_real_distribution<double> wdist(0.05, 1.0);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> w(maxset.size());
        double tot = 0;
        for (auto& v : w) {
            v = wdist(rng);
            tot += v;
        }
        for (auto& v : w) v /= tot;
        auto mu = cheb::duality_measure(osc, maxset, w);
        measures_ok = measures_ok &&
                      std::fabs(mu.pair_with(osc) - 1.0) <= 1e-8 &&
                      std::fabs(mu.total_variation() - 1.0) <= 1e-8;
    }
    out.expect_true("50 random atomic measures satisfy the duality identities", measures_ok,
                    Source::Derived);

    // unique maximizer forces the single-atom measure
    bool unique_atom = true;
    auto single = cheb::duality_measure(bump, {0.5}, {1.0});
    unique_atom = unique_atom && single.atoms.size() == 1 &&
                  std::fabs(single.atoms[0].mass - 1.0) <= 1e-8;
    bool rejected = false;
    try {
        cheb::duality_measure(bump, {0.25}, {1.0});
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    out.expect_true("unique maximizer pins the single admissible atom",
                    unique_atom && rejected, Source::Example);
    return out;
}

// ---------------------------------------------------------------- hilbert
CaseOutcome run_hilbert(const CaseContext& ctx) {
    CaseOutcome out;
    Rng rng(ctx.seed);
    bool fixed_pts = true, oracle_ok = true;
    for (int t = 0; t < 200; ++t) {
        ConvexSetDesc set = random_set(rng, /*bounded_only=*/true);
        FinSeq m = member_of(rng, set, 3);
        auto res = l2_project(set, m, 3);
        fixed_pts = fixed_pts && res.value_sq == 0 && res.minimizer == m;

        FinSeq x = rand_finseq(rng, 3, 3);
        auto proj = l2_project(set, x, 3);
        // any member is at least as far as the reported value, exactly
        FinSeq other = member_of(rng, set, 3);
        Rational d = 0;
        for (int i = 1; i <= 3; ++i) {
            Rational diff = x.value(i) - other.value(i);
            d += diff * diff;
        }
        oracle_ok = oracle_ok && d >= proj.value_sq && membership(set, proj.minimizer);
    }
    out.expect_true("members project to themselves (strict convexity)", fixed_pts,
                    Source::Example);
    out.expect_true("no sampled member beats the reported squared distance", oracle_ok,
                    Source::Derived);

    FinSeq a = atom(1, Rational(1));
    FinSeq b = atom(2, Rational(1));
    out.expect_true("identical points collapse to equality",
                    identical_points_l2(a, a) && !identical_points_l2(a, b), Source::Example);
    out.expect_true("the l1 model keeps them identical (contrast)",
                    identical_points(a, b), Source::Example);
    out.expect_true("duality map is the identity", duality_l2(a) == a, Source::Direct);
    return out;
}

}  // namespace

const std::vector<CaseInfo>& registry() {
    static const std::vector<CaseInfo> cases = {
        {"lemma1.1", "ball/simplex/hyperplane geometry", run_lemma11},
        {"ex2.4", "generalized projection of the all-ones dual onto T", run_ex24},
        {"ex2.5", "cone projections of one-signed duals", run_ex25},
        {"ex2.8", "non-attainment with a geometric tail (numeric)", run_ex28},
        {"ex2.9", "set-valued projection onto T and the failed inequality", run_ex29},
        {"prop2.3", "functional bounds, convexity, zero set", run_prop23},
        {"monotonicity", "monotonicity of both projection maps", run_monotonicity},
        {"soundness", "held variational inequalities certify optimality", run_soundness},
        {"ex3.4", "hull of inflated atoms is not proximal", run_ex34},
        {"ex3.9", "duality selections of (3,0,...) and the violation", run_ex39},
        {"prop4.1", "projections of the origin coincide", run_prop41},
        {"ex4.5", "the simplex projects onto itself as a set", run_ex45},
        {"ex4.6", "support holes enlarge the projection of the ball", run_ex46},
        {"ex4.8", "ball projections from an inflated simplex point", run_ex48},
        {"lemma4.10", "inverse duality image of the constant dual", run_lemma410},
        {"ex4.12", "hyperplane projections of (3,0,...)", run_ex412},
        {"lemma4.13", "constant sequences dualize to the slotted simplex", run_lemma413},
        {"prop4.15", "c0 classification of the two projection sets", run_prop415},
        {"thm6.3", "metric variational equivalence", run_thm63},
        {"remez", "best uniform approximation levels", run_remez},
        {"thm5.5", "polynomial membership families", run_thm55},
        {"hilbert", "Hilbert-model coincidences", run_hilbert},
    };
    return cases;
}

const CaseInfo* find(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace genproj::cases
