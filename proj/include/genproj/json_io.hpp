#pragma once

#include <string>

#include <json.hpp>

#include "genproj/duality.hpp"
#include "genproj/projections.hpp"
#include "genproj/sequences.hpp"
#include "genproj/sets.hpp"
#include "genproj/variational.hpp"

namespace genproj {

using nlohmann::json;

// Wire formats: rationals as "p" / "p/q" strings; sequences as
//   {"entries":{"1":"3"},"zero":"0"?} and {"prefix":["3","1"],"tail":"0"};
// boxes as {"norm":..,"fixed":{..},"free_bound":..,"tail":[lo,hi]};
// set descriptors as {"variant":"simplex","r":"1","dim":4}.

json to_json(const Rational& q);
json to_json(const FinSeq& x);
json to_json(const TailSeq& phi);
json to_json(const DualityBox& box);
json to_json(const ConvexSetDesc& set);
json to_json(const ProjectionResult& res, bool numeric = false);
json to_json(const VIReport& report);

Rational rational_from_json(const json& j);
FinSeq finseq_from_json(const json& j);
TailSeq tailseq_from_json(const json& j);
ConvexSetDesc set_from_json(const json& j);

}  // namespace genproj
