#pragma once

#include <nlohmann/json.hpp>

#include "rcb/assembler.hpp"
#include "rcb/catalog.hpp"
#include "rcb/invariant_rings.hpp"
#include "rcb/reps.hpp"
#include "rcb/smith.hpp"
#include "rcb/surgery.hpp"

namespace rcb {

using Json = nlohmann::json;

// Readers throw ValidationError with the offending field named.

BaseSurface base_surface_from_json(const Json& j);
SurgeryProblem surgery_problem_from_json(const Json& j);
SurfaceComponentDescriptor surface_component_from_json(const Json& j);
FibrationDescriptor fibration_from_json(const Json& j);

/// Parses text, converting syntax errors to ValidationError.
Json parse_json(const std::string& text);

// Writers. Objects are key-sorted and rationals are strings, so output is
// byte-stable for equal values.

Json to_json(const BaseSurface& b);
Json to_json(const SurgeryProblem& p);
Json to_json(const LensSpace& l);
Json to_json(const ManifoldType& m);
Json to_json(const AbelianGroup& g);
Json to_json(const RepMultiset& r);
Json to_json(const InvariantQuadrics& q);
Json to_json(const CoverQuotient& c);
Json to_json(const Violation& v);
Json to_json(const Assembly& a);
Json to_json(const TorusQuotient& t);

}  // namespace rcb
