#pragma once

#include <string>

#include <json.hpp>

#include "slr/census.hpp"
#include "slr/cohomology.hpp"
#include "slr/invariants.hpp"
#include "slr/rep.hpp"

namespace slr {

using json = nlohmann::json;

json to_json(const Mat2& m);                 // [[a,b],[c,d]]
Mat2 mat2_from_json(const json& j);

json to_json(const SurfaceRep& rep);         // {"g","n","A","B","C"}
SurfaceRep rep_from_json(const json& j);

json to_json(const ConjClass& c);
json to_json(const SigmaValue& s);           // 1 / -1 / "i" / "-i" / 0
json to_json(const InvariantRecord& r);      // {toledo,rho,signature,sigma,s,psl_signature,mw_slack,...}
json to_json(const ComponentLabel& l);
json to_json(const AuditReport& r);
json to_json(const SamplingReport& r);
json to_json(const OracleReport& r);         // {dim,signature_direct,signature_formula,skew_residual,min_singular_value}

} // namespace slr
