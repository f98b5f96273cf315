#pragma once

#include <string>

#include "json.hpp"

#include "unsharp/linalg.hpp"
#include "unsharp/povm.hpp"

namespace unsharp::io {

using nlohmann::json;

// POVM files:  {"dim": d, "effects": [ effect_0, effect_1, ... ]}
// State files: {"dim": d, "matrix": M} or {"dim": d, "vector": [c_0, ...]}
// Matrices are row-major lists of rows; every complex entry is [re, im].
// Schema problems throw Error(ParseError); physics problems (non-positive
// effects, incompleteness, unnormalized states) throw the validation codes.

json complex_to_json(Complex z);
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, Eigen::Index dim, const std::string& where);

Povm povm_from_json(const json& j);
json povm_to_json(const Povm& povm);

DensityMatrix state_from_json(const json& j);

json read_json_file(const std::string& path);
Povm load_povm(const std::string& path);
DensityMatrix load_state(const std::string& path);

}  // namespace unsharp::io
