#pragma once

#include "json.hpp"
#include "mdrep/matrix.hpp"

namespace mdrep {

using json = nlohmann::json;

json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const json& j);
json to_json(const Poly& p);
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);
json to_json(const ExactMatrix& M);
ExactMatrix matrix_from_json(const json& j);

}  // namespace mdrep
