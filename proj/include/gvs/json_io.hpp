#pragma once

#include <json.hpp>

#include "gvs/demazure.hpp"
#include "gvs/equivalence.hpp"
#include "gvs/gv.hpp"
#include "gvs/paths.hpp"
#include "gvs/poly.hpp"
#include "gvs/rtuple.hpp"
#include "gvs/shape.hpp"

namespace gvs {

using nlohmann::json;

// {"n":9,"R":[3,8],"entries":[2,7,5,8,6,6,9,9,9]}
json to_json(const RTuple& t);
RTuple rtuple_from_json(const json& j);

// {"n":3,"parts":[2,1,0]}
json to_json(const Shape& s);
Shape shape_from_json(const json& j);

// {"n_vars":3,"terms":[{"exps":[2,1,0],"coeff":1}, ...]} in canonical order.
// Coefficients outside the 64-bit range are emitted as decimal strings.
json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json to_json(const ClassFlags& f);
json to_json(const CriticalList& cl);

// Witness: components as depth sequences plus the one-line sink permutation.
json to_json(const NPath& p);

json to_json(const EquivClass& cls, const Shape& shape);
json to_json(const MatchReport& report);

} // namespace gvs
