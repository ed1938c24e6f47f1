#include "genproj/json_io.hpp"

#include <stdexcept>

namespace genproj {

json to_json(const Rational& q) { return rat_str(q); }

json to_json(const FinSeq& x) {
    json entries = json::object();
    json out = json::object();
    for (const auto& [i, v] : x.entries()) {
        if (i == 0)
            out["zero"] = rat_str(v);
        else
            entries[std::to_string(i)] = rat_str(v);
    }
    out["entries"] = entries;
    return out;
}

json to_json(const TailSeq& phi) {
    json prefix = json::array();
    for (const auto& v : phi.prefix()) prefix.push_back(rat_str(v));
    return json{{"prefix", prefix}, {"tail", rat_str(phi.tail())}};
}

json to_json(const DualityBox& box) {
    json fixed = json::object();
    for (const auto& [i, v] : box.fixed) fixed[std::to_string(i)] = rat_str(v);
    return json{{"norm", rat_str(box.norm_value)},
                {"fixed", fixed},
                {"free_bound", rat_str(box.free_bound)},
                {"tail", json::array({rat_str(-box.free_bound), rat_str(box.free_bound)})}};
}

json to_json(const ConvexSetDesc& set) {
    json out = json::object();
    switch (set.kind) {
        case SetKind::Ball:
            out["variant"] = "ball";
            out["r"] = rat_str(set.radius);
            break;
        case SetKind::Simplex:
            out["variant"] = "simplex";
            out["r"] = rat_str(set.radius);
            if (set.zero_slot) out["zero_slot"] = true;
            break;
        case SetKind::Hyperplane:
            out["variant"] = "hyperplane";
            out["k"] = rat_str(set.level);
            break;
        case SetKind::NonnegCone:
            out["variant"] = "nonneg_cone";
            break;
        case SetKind::NonposCone:
            out["variant"] = "nonpos_cone";
            break;
        case SetKind::Hull: {
            out["variant"] = "hull";
            json pts = json::array();
            for (const auto& p : set.points) pts.push_back(to_json(p));
            out["points"] = pts;
            break;
        }
        case SetKind::SBall:
            out["variant"] = "sball";
            out["r"] = rat_str(set.radius);
            break;
        case SetKind::ZSet:
            out["variant"] = "zset";
            out["r"] = rat_str(set.radius);
            break;
    }
    out["dim"] = set.dim;
    return out;
}

json to_json(const ProjectionResult& res, bool numeric) {
    json out = json::object();
    if (numeric)
        out["value"] = res.optimal_value.get_d();
    else
        out["value"] = rat_str(res.optimal_value);
    if (res.minimizer) out["minimizer"] = to_json(*res.minimizer);
    out["attained"] = res.attained;
    if (!res.set_tag.empty()) out["set_tag"] = res.set_tag;
    out["budget"] = res.budget_used;
    out["truncation_stable"] = res.truncation_stable;
    return out;
}

json to_json(const VIReport& report) {
    json out = json::object();
    out["holds"] = report.holds;
    if (report.witness) out["witness_j"] = to_json(*report.witness);
    if (report.violating_y) out["violating_y"] = to_json(*report.violating_y);
    json corners = json::array();
    for (const auto& iv : report.corner_values) {
        json c = json::object();
        c["corner"] = to_json(iv.corner);
        if (iv.finite)
            c["inner_value"] = rat_str(iv.value);
        else
            c["inner_value"] = "-inf";
        corners.push_back(c);
    }
    out["inner_values"] = corners;
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw std::invalid_argument("rational must be a string like \"3/4\"");
    return rat_parse(j.get<std::string>());
}

FinSeq finseq_from_json(const json& j) {
    FinSeq x;
    if (j.contains("entries"))
        for (const auto& [key, val] : j["entries"].items())
            x.set(std::stoi(key), rational_from_json(val));
    if (j.contains("zero")) x.set(0, rational_from_json(j["zero"]));
    return x;
}

TailSeq tailseq_from_json(const json& j) {
    std::vector<Rational> prefix;
    if (j.contains("prefix"))
        for (const auto& v : j["prefix"]) prefix.push_back(rational_from_json(v));
    Rational tail = j.contains("tail") ? rational_from_json(j["tail"]) : Rational(0);
    return TailSeq(std::move(prefix), tail);
}

ConvexSetDesc set_from_json(const json& j) {
    std::string variant = j.at("variant").get<std::string>();
    int dim = j.value("dim", 4);
    if (variant == "ball") return ConvexSetDesc::ball(rational_from_json(j.at("r")), dim);
    if (variant == "simplex")
        return ConvexSetDesc::simplex(rational_from_json(j.at("r")), dim,
                                      j.value("zero_slot", false));
    if (variant == "hyperplane")
        return ConvexSetDesc::hyperplane(rational_from_json(j.at("k")), dim);
    if (variant == "nonneg_cone") return ConvexSetDesc::nonneg_cone(dim);
    if (variant == "nonpos_cone") return ConvexSetDesc::nonpos_cone(dim);
    if (variant == "hull") {
        std::vector<FinSeq> pts;
        for (const auto& p : j.at("points")) pts.push_back(finseq_from_json(p));
        auto s = ConvexSetDesc::hull(std::move(pts));
        if (j.contains("dim")) s.dim = dim;
        return s;
    }
    if (variant == "sball") return ConvexSetDesc::sball(rational_from_json(j.at("r")));
    if (variant == "zset") return ConvexSetDesc::zset(rational_from_json(j.at("r")));
    throw std::invalid_argument("unknown set variant: " + variant);
}

}  // namespace genproj
