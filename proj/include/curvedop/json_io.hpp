#pragma once

#include <json.hpp>

#include "curvedop/aq.hpp"
#include "curvedop/bar.hpp"
#include "curvedop/module_coeffs.hpp"

namespace curvedop {

using Json = nlohmann::ordered_json;

Json module_to_json(const GrDgModule& m);
GrDgModule module_from_json(const Json& j);

Json key_to_json(const GeneratorKey& k);
GeneratorKey key_from_json(const Json& j);

Json algebra_to_json(const AlgebraStructure& alg);
AlgebraStructure algebra_from_json(const Json& j);

// Module-coefficients files restate the base algebra's module labels; the
// algebra itself is supplied separately.
Json coefficients_to_json(const ModuleCoefficients& mc, const AlgebraStructure& base);
ModuleCoefficients coefficients_from_json(const Json& j, const AlgebraStructure& base);

Json truncation_to_json(const Truncation& t);

Json bar_complex_to_json(const AlgebraStructure& alg, const BarComplex& cx);

// FNV-1a digest of the canonical serialization, hex-encoded.
std::string digest(const std::string& payload);

AlgebraStructure load_algebra(const std::string& path);
ModuleCoefficients load_coefficients(const std::string& path, const AlgebraStructure& base);

}  // namespace curvedop
