#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genproj/cases.hpp"
#include "genproj/chebyshev.hpp"
#include "genproj/expr.hpp"
#include "genproj/hilbert.hpp"
#include "genproj/json_io.hpp"
#include "genproj/oracle.hpp"
#include "genproj/projections.hpp"
#include "genproj/variational.hpp"

namespace py = pybind11;
using namespace genproj;

namespace {

// The python surface speaks the same JSON wire formats as the CLI; values
// cross the boundary as JSON strings.

json jparse(const std::string& text) { return json::parse(text); }

std::string solve_dispatch(const std::string& kind, const std::string& set_text,
                           const std::string& point_text, int budget, bool l2) {
    ConvexSetDesc set = set_from_json(jparse(set_text));
    if (l2) {
        auto r = l2_project(set, finseq_from_json(jparse(point_text)), budget);
        json out;
        out["value"] = rat_str(r.value_sq);
        out["minimizer"] = to_json(r.minimizer);
        return out.dump();
    }
    ProjectionResult res;
    if (kind == "project")
        res = metric_project(set, finseq_from_json(jparse(point_text)), budget);
    else if (kind == "gproject")
        res = gen_project(set, tailseq_from_json(jparse(point_text)), budget);
    else if (kind == "gmproject")
        res = gen_metric_project(set, finseq_from_json(jparse(point_text)), budget);
    else
        throw std::invalid_argument("kind must be project, gproject or gmproject");
    return to_json(res).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact projections over classical sequence-space models";

    m.def("norm_l1",
          [](const std::string& x) { return rat_str(norm_l1(finseq_from_json(jparse(x)))); },
          py::arg("finseq_json"));
    m.def("norm_sup",
          [](const std::string& t) { return rat_str(norm_sup(tailseq_from_json(jparse(t)))); },
          py::arg("tailseq_json"));
    m.def("pair",
          [](const std::string& phi, const std::string& x) {
              return rat_str(pair(tailseq_from_json(jparse(phi)), finseq_from_json(jparse(x))));
          },
          py::arg("tailseq_json"), py::arg("finseq_json"));
    m.def("pair_c",
          [](const std::string& x, const std::string& t) {
              return rat_str(pair_c(finseq_from_json(jparse(x)), tailseq_from_json(jparse(t))));
          },
          py::arg("finseq_json"), py::arg("tailseq_json"));

    m.def("v_eval", [](const std::string& phi, const std::string& x) {
        auto lv = v_eval(tailseq_from_json(jparse(phi)), finseq_from_json(jparse(x)));
        return py::make_tuple(rat_str(lv.value), rat_str(lv.lower_bound),
                              rat_str(lv.upper_bound));
    });

    m.def("duality_box", [](const std::string& x) {
        return to_json(duality_l1(finseq_from_json(jparse(x)))).dump();
    });
    m.def("duality_contains", [](const std::string& x, const std::string& phi) {
        return duality_contains(duality_l1(finseq_from_json(jparse(x))),
                                tailseq_from_json(jparse(phi)));
    });
    m.def("identical_points", [](const std::string& x, const std::string& y) {
        return identical_points(finseq_from_json(jparse(x)), finseq_from_json(jparse(y)));
    });

    m.def("solve", &solve_dispatch, py::arg("kind"), py::arg("set_json"),
          py::arg("point_json"), py::arg("budget") = 4, py::arg("l2") = false);

    m.def("solution_set_contains",
          [](const std::string& set_text, const std::string& phi, const std::string& y,
             int budget) {
              return solution_set_contains(set_from_json(jparse(set_text)),
                                           tailseq_from_json(jparse(phi)),
                                           finseq_from_json(jparse(y)), budget);
          },
          py::arg("set_json"), py::arg("phi_json"), py::arg("y_json"), py::arg("budget") = 4);

    m.def("vi_sufficiency",
          [](const std::string& set_text, const std::string& phi, const std::string& z,
             int budget) {
              return to_json(vi_sufficiency(set_from_json(jparse(set_text)),
                                            tailseq_from_json(jparse(phi)),
                                            finseq_from_json(jparse(z)), budget))
                  .dump();
          },
          py::arg("set_json"), py::arg("phi_json"), py::arg("z_json"), py::arg("budget") = 4);

    m.def("c0_projections", [](const std::string& r, const std::string& s) {
        auto [p, pi] = c0_projections(rat_parse(r), tailseq_from_json(jparse(s)));
        return py::make_tuple(p, pi);
    });

    m.def("remez", [](const std::string& expr, int degree, int grid) {
        auto f = cheb::GridFunction::sample(parse_expression(expr), grid);
        auto [p, cert] = cheb::remez(f, degree);
        json out;
        out["coefficients"] = p.coeffs;
        out["level"] = cert.level;
        out["points"] = cert.points;
        out["converged"] = cert.converged;
        out["verified"] = cheb::equioscillation_verify(f, p, degree);
        return out.dump();
    }, py::arg("expr"), py::arg("degree"), py::arg("grid") = cheb::kDefaultGrid);

    m.def("maximizing_set", [](const std::string& expr, double tol) {
        return cheb::maximizing_set(cheb::GridFunction::sample(parse_expression(expr)), tol);
    }, py::arg("expr"), py::arg("tol") = cheb::kDefaultTol);

    m.def("list_cases", [] {
        std::vector<std::string> ids;
        for (const auto& c : cases::registry()) ids.push_back(c.id);
        return ids;
    });
    m.def("run_case", [](const std::string& id, unsigned seed) {
        const auto* c = cases::find(id);
        if (!c) throw std::invalid_argument("unknown case id: " + id);
        cases::CaseContext ctx;
        ctx.seed = seed;
        auto res = c->run(ctx);
        json out;
        out["id"] = id;
        out["pass"] = res.pass;
        out["checks"] = json::array();
        for (const auto& line : res.checks)
            out["checks"].push_back({{"label", line.label},
                                     {"pass", line.pass},
                                     {"expected", line.expected},
                                     {"got", line.got},
                                     {"source", cases::source_name(line.source)}});
        return out.dump();
    }, py::arg("id"), py::arg("seed") = 20240901);
}
