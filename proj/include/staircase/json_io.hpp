#pragma once

#include "staircase/ansatz.hpp"
#include "staircase/asep.hpp"
#include "staircase/bijections.hpp"
#include "staircase/moments.hpp"

#include <json.hpp>

namespace staircase {

using Json = nlohmann::ordered_json;

// [{"exp":[i,j,k,l,m,n],"coeff":"c"}, ...] in canonical order.
Json poly_to_json(const GfPoly& p);
GfPoly poly_from_json(const Json& j);

// {"size":n,"rows":[".b..a.a", ...]}
Json tableau_to_json(const StaircaseTableau& t);
StaircaseTableau tableau_from_json(const Json& j);

// {"border":"VVHV","rows":["10", ...]}
Json tableau_to_json(const PermutationTableau& t);
Json tableau_to_json(const AlternativeTableau& t);
PermutationTableau permutation_tableau_from_json(const Json& j);
AlternativeTableau alternative_tableau_from_json(const Json& j);

Json params_to_json(const AsepParams& p);
Json params_to_json(const AwParams& p);

// {"110":"p/q", ...}, states as 0/1 strings with site 1 leftmost.
Json distribution_to_json(const StationaryDist& dist);

// {"family":"I","max_len":4,"status":"ok"} or the counterexample fields.
Json report_to_json(const VerifyReport& report);

} // namespace staircase
