#pragma once

#include <json.hpp>

#include "stdcx/core.hpp"
#include "stdcx/matroid.hpp"

namespace stdcx {

// Resolves a JSON matroid descriptor.  Supported forms:
//   {"type":"bases","groundset":[...],"bases":[[...],...]}
//   {"type":"uniform","n":N,"r":R}
//   {"type":"transversal","groundset":[...],"sets":[[...],...]}
//   {"type":"lattice_path","U":"<word>","L":"<word>"}
// Validation of explicit basis lists can be skipped via `validation`.
Matroid matroid_from_descriptor(const nlohmann::json& descriptor,
                                Matroid::Validation validation = Matroid::Validation::full);

// {"coords":[...],"points":[[0,1,...],...]}
PointConfig config_from_json(const nlohmann::json& j);

nlohmann::json face_to_json(const FiniteSet& face);
nlohmann::json complex_to_json(const SimplicialComplex& K);

}  // namespace stdcx
