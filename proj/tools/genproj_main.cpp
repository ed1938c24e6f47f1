#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "genproj/cases.hpp"
#include "genproj/chebyshev.hpp"
#include "genproj/expr.hpp"
#include "genproj/hilbert.hpp"
#include "genproj/json_io.hpp"
#include "genproj/oracle.hpp"
#include "genproj/projections.hpp"
#include "genproj/variational.hpp"

namespace {

using namespace genproj;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracleMismatch = 3;

json parse_json_arg(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string(what) + ": " + e.what());
    }
}

int run_verify(const std::string& which, unsigned seed, int budget, bool as_json) {
    cases::CaseContext ctx;
    ctx.seed = seed;
    ctx.budget = budget;

    std::vector<const cases::CaseInfo*> todo;
    if (which == "all") {
        for (const auto& c : cases::registry()) todo.push_back(&c);
    } else {
        const auto* c = cases::find(which);
        if (!c) {
            std::cerr << "unknown case id: " << which << " (try list-cases)\n";
            return kExitUsage;
        }
        todo.push_back(c);
    }

    json report = json::array();
    int failed = 0;
    if (!as_json)
        std::cout << "seed " << seed << ", budget " << budget << "\n"
                  << "------------------------------------------------------------\n";
    for (const auto* c : todo) {
        auto started = std::chrono::steady_clock::now();
        auto outcome = c->run(ctx);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        if (!outcome.pass) ++failed;
        if (as_json) {
            json jc = {{"id", c->id}, {"title", c->title}, {"pass", outcome.pass},
                       {"ms", ms}, {"checks", json::array()}};
            for (const auto& line : outcome.checks)
                jc["checks"].push_back({{"label", line.label},
                                        {"pass", line.pass},
                                        {"expected", line.expected},
                                        {"got", line.got},
                                        {"source", cases::source_name(line.source)}});
            report.push_back(jc);
        } else {
            std::cout << (outcome.pass ? "PASS  " : "FAIL  ") << c->id << "  (" << c->title
                      << ", " << ms << " ms)\n";
            for (const auto& line : outcome.checks) {
                if (line.pass && which == "all") continue;  // summary mode
                std::cout << "      " << (line.pass ? "ok   " : "BAD  ") << line.label
                          << " [" << cases::source_name(line.source) << "]";
                if (!line.pass)
                    std::cout << "  expected " << line.expected << ", got " << line.got;
                std::cout << "\n";
            }
        }
    }
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "------------------------------------------------------------\n"
                  << (failed == 0 ? "all cases passed" : std::to_string(failed) + " case(s) failed")
                  << " (" << todo.size() << " run)\n";
    }
    return failed == 0 ? kExitPass : kExitFail;
}

int run_solve(const std::string& kind, const std::string& set_text,
              const std::string& point_text, int budget, bool numeric, bool l2, bool use_oracle,
              bool as_json) {
    ConvexSetDesc set = set_from_json(parse_json_arg(set_text, "bad --set"));
    ProjectionResult res;
    std::optional<oracle::ScanResult> check;

    if (l2) {
        FinSeq x = finseq_from_json(parse_json_arg(point_text, "bad --point"));
        auto r = l2_project(set, x, budget);
        res.optimal_value = r.value_sq;
        res.minimizer = r.minimizer;
        res.budget_used = budget;
        if (use_oracle) check = oracle::min_l2(set, x, budget);
    } else if (kind == "project") {
        FinSeq x = finseq_from_json(parse_json_arg(point_text, "bad --point"));
        res = metric_project(set, x, budget);
        if (use_oracle) check = oracle::min_metric(set, x, budget);
    } else if (kind == "gproject") {
        TailSeq phi = tailseq_from_json(parse_json_arg(point_text, "bad --point"));
        res = gen_project(set, phi, budget);
        if (use_oracle) check = oracle::min_v(set, phi, budget);
    } else {
        FinSeq x = finseq_from_json(parse_json_arg(point_text, "bad --point"));
        res = gen_metric_project(set, x, budget);
        if (use_oracle) check = oracle::min_v_over_box(set, x, budget);
    }

    json out = to_json(res, numeric);
    out["kind"] = l2 ? kind + " (l2 model)" : kind;
    if (check) out["oracle_value"] = rat_str(check->value);
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << out.dump() << "\n";

    if (check && check->value != res.optimal_value) {
        std::cerr << "oracle mismatch: solver " << rat_str(res.optimal_value) << ", grid scan "
                  << rat_str(check->value) << "\n";
        return kExitOracleMismatch;
    }
    return kExitPass;
}

int run_remez(const std::string& expr_text, int degree, int grid, const std::string& csv_path,
              bool as_json) {
    auto fn = parse_expression(expr_text);
    auto f = cheb::GridFunction::sample(fn, grid);
    auto [p, cert] = cheb::remez(f, degree);
    bool verified = cheb::equioscillation_verify(f, p, degree);

    json out;
    out["expr"] = expr_text;
    out["degree"] = degree;
    out["coefficients"] = p.coeffs;
    out["level"] = cert.level;
    out["alternation_points"] = cert.points;
    out["sign"] = cert.sign;
    out["converged"] = cert.converged;
    out["equioscillation_verified"] = verified;
    std::cout << out.dump(as_json ? 2 : -1) << "\n";

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "t,f,p,residual\n";
        for (int i = 0; i <= f.grid_n(); ++i) {
            double t = f.t_of(i);
            double fv = f.values[static_cast<size_t>(i)];
            csv << t << "," << fv << "," << p(t) << "," << (fv - p(t)) << "\n";
        }
    }
    return cert.converged && verified ? kExitPass : kExitFail;
}

int run_duality(const std::string& point_text, const std::string& beta_text, bool as_json) {
    json out;
    if (!beta_text.empty()) {
        Rational r = rat_parse(beta_text);
        out["beta"] = rat_str(r);
        out["image_in_c_dual"] = to_json(duality_c(TailSeq::constant(r)));
        out["inverse_image_in_l1"] = to_json(inverse_duality_solve_beta(r));
    } else {
        FinSeq x = finseq_from_json(parse_json_arg(point_text, "bad --point"));
        out["point"] = to_json(x);
        out["box"] = to_json(duality_l1(x));
    }
    std::cout << out.dump(as_json ? 2 : -1) << "\n";
    return kExitPass;
}

int run_identical(const std::string& x_text, const std::string& y_text, bool as_json) {
    FinSeq x = finseq_from_json(parse_json_arg(x_text, "bad --x"));
    FinSeq y = finseq_from_json(parse_json_arg(y_text, "bad --y"));
    json out;
    out["identical"] = identical_points(x, y);
    if (auto w = identical_points_witness(x, y)) out["witness"] = to_json(*w);
    std::cout << out.dump(as_json ? 2 : -1) << "\n";
    return kExitPass;
}

int run_vi_check(const std::string& mode, const std::string& set_text,
                 const std::string& phi_text, const std::string& x_text,
                 const std::string& z_text, int budget, bool as_json) {
    ConvexSetDesc set = set_from_json(parse_json_arg(set_text, "bad --set"));
    FinSeq z = finseq_from_json(parse_json_arg(z_text, "bad --z"));
    VIReport report;
    if (mode == "gen") {
        if (phi_text.empty()) throw CLI::ValidationError("gen mode needs --phi");
        TailSeq phi = tailseq_from_json(parse_json_arg(phi_text, "bad --phi"));
        report = vi_sufficiency(set, phi, z, budget);
    } else {
        if (x_text.empty()) throw CLI::ValidationError("metric mode needs --x");
        FinSeq x = finseq_from_json(parse_json_arg(x_text, "bad --x"));
        report = metric_vi_check(set, x, z, budget);
    }
    std::cout << to_json(report).dump(as_json ? 2 : -1) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact projection toolkit for classical sequence-space models"};
    app.require_subcommand(1);

    unsigned seed = 20240901;
    int budget = 4;
    bool as_json = false;

    // verify
    auto* verify = app.add_subcommand("verify", "run a registered case (or all) and report");
    std::string which = "all";
    verify->add_option("case", which, "case id or 'all'");
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--budget", budget, "dimension budget");
    verify->add_flag("--json", as_json, "emit JSON");

    // list-cases
    auto* list = app.add_subcommand("list-cases", "list registered case ids");

    // solve
    auto* solve = app.add_subcommand("solve", "run one projection solve");
    std::string kind, set_text, point_text;
    bool numeric = false, l2 = false, use_oracle = false;
    solve->add_option("kind", kind, "project | gproject | gmproject")
        ->check(CLI::IsMember({"project", "gproject", "gmproject"}))
        ->required();
    solve->add_option("--set", set_text, "set descriptor JSON")->required();
    solve->add_option("--point", point_text, "point JSON (sequence form per kind)")->required();
    solve->add_option("--budget", budget, "dimension budget");
    solve->add_flag("--numeric", numeric, "report values as binary64");
    solve->add_flag("--l2", l2, "use the Hilbert-model solver");
    solve->add_flag("--oracle", use_oracle, "cross-check against the rational grid scan");
    solve->add_flag("--json", as_json, "pretty JSON");

    // remez
    auto* rem = app.add_subcommand("remez", "best uniform polynomial approximation");
    std::string expr_text, csv_path;
    int degree = 1, grid = cheb::kDefaultGrid;
    rem->add_option("--expr", expr_text, "expression in t, e.g. \"t^2\"")->required();
    rem->add_option("--degree", degree, "polynomial degree")->required();
    rem->add_option("--grid", grid, "sample count");
    rem->add_option("--csv", csv_path, "write residual samples to a CSV file");
    rem->add_flag("--json", as_json, "pretty JSON");

    // duality
    auto* dual = app.add_subcommand("duality", "describe J(x), or J/J^-1 of a constant dual");
    std::string beta_text;
    dual->add_option("--point", point_text, "point JSON");
    dual->add_option("--beta", beta_text, "constant value r of the dual element");
    dual->add_flag("--json", as_json, "pretty JSON");

    // identical
    auto* ident = app.add_subcommand("identical", "generalized-identical test for two points");
    std::string x_text, y_text;
    ident->add_option("--x", x_text, "first point JSON")->required();
    ident->add_option("--y", y_text, "second point JSON")->required();
    ident->add_flag("--json", as_json, "pretty JSON");

    // vi-check
    auto* vi = app.add_subcommand("vi-check", "variational inequality checks");
    std::string vi_mode, phi_text, vx_text, z_text;
    vi->add_option("mode", vi_mode, "gen | metric")
        ->check(CLI::IsMember({"gen", "metric"}))
        ->required();
    vi->add_option("--set", set_text, "set descriptor JSON")->required();
    vi->add_option("--phi", phi_text, "dual element JSON (gen mode)");
    vi->add_option("--x", vx_text, "primal point JSON (metric mode)");
    vi->add_option("--z", z_text, "candidate JSON")->required();
    vi->add_option("--budget", budget, "dimension budget");
    vi->add_flag("--json", as_json, "pretty JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return run_verify(which, seed, budget, as_json);
        if (*list) {
            for (const auto& c : cases::registry())
                std::cout << c.id << "  -  " << c.title << "\n";
            return kExitPass;
        }
        if (*solve) return run_solve(kind, set_text, point_text, budget, numeric, l2,
                                     use_oracle, as_json);
        if (*rem) return run_remez(expr_text, degree, grid, csv_path, as_json);
        if (*dual) return run_duality(point_text, beta_text, as_json);
        if (*ident) return run_identical(x_text, y_text, as_json);
        if (*vi) return run_vi_check(vi_mode, set_text, phi_text, vx_text, z_text, budget,
                                     as_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
