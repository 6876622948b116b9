#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "cml/finset.hpp"
#include "cml/logic.hpp"
#include "cml/model.hpp"
#include "cml/monoid.hpp"
#include "cml/subalgebra.hpp"

namespace cml {

using Json = nlohmann::ordered_json;

/// {"elements":[...], "unit":label, "table":[[label,...],...]}
Monoid monoid_from_json(const Json& j);
Json monoid_to_json(const Monoid& m);

/// {"X":[labels] | n, "Y":..., "Z":..., "f":[...], "g":[...]}; map entries are
/// labels of Z or indices.
struct Cospan {
  FinFun f, g;
};
Cospan cospan_from_json(const Json& j);
Json finfun_to_json(const FinFun& f);

/// {"states":[...], "coalg":{state: code}, "val":{var:[states]}}
Json model_to_json(const Logic& l, const FiniteModel& m);
FiniteModel model_from_json(const Logic& l, const Json& j);

Json partition_to_json(const Subalgebra& a, const FinSet& x);

Json read_json_file(const std::string& path);

}  // namespace cml
