#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcb/conics.hpp"
#include "rcb/surgery.hpp"

namespace rcb {

/// A^+_{m-1} point u^2 + v^2 - w^m of a surface component.
struct SingularPoint {
  std::int64_t m = 2;
  bool separating = false;

  DuValType duval() const { return {DuValType::Kind::APlus, m - 1}; }
  bool operator==(const SingularPoint&) const = default;
};

struct SurfaceComponentDescriptor {
  BaseSurface surface;  // closed
  bool rational_over_c = false;
  std::vector<SingularPoint> points;
};

/// Seifert quotient point (m, b) of the fibration. `sheets` is the number of
/// local real sheets of the base point covered by the region (1 or 2).
struct SeifertPointData {
  std::int64_t m = 2;
  std::int64_t b = 1;
  std::optional<bool> separating;
  int sheets = 1;
};

/// The part F^0 of the base over which the fibration is an S^1-bundle, and its ends.
struct RegionData {
  std::optional<std::int64_t> genus;   // defaults to the component surface
  std::optional<bool> orientable;
  std::int64_t collapsed_ends = 0;
  std::int64_t blown_up_curves = 0;
  std::vector<SeifertPointData> seifert_points;
};

struct ComponentDescriptor {
  SurfaceComponentDescriptor surface;
  RegionData region;
  std::int64_t rp3_count = 0;    // RP^3 summands in front of the component
  std::int64_t s1xs2_count = 0;  // S^1 x S^2 summands in front of the component
};

struct FibrationDescriptor {
  bool total_space_orientable = true;
  std::vector<ComponentDescriptor> components;
};

struct Violation {
  std::string clause;   // stable identifier, e.g. "too_many_singular_points"
  std::string message;
  std::int64_t component = -1;

  bool operator==(const Violation&) const = default;
};

namespace clause {
inline constexpr const char* kOrientableTopology = "orientable_component_topology";
inline constexpr const char* kTooManyPoints = "too_many_singular_points";
inline constexpr const char* kSeparatingOddExponent = "separating_odd_exponent";
inline constexpr const char* kMultipleFiberBound = "multiple_fiber_bound";
inline constexpr const char* kPointOverOneComponent = "point_over_one_component";
}  // namespace clause

/// Constraints on a component M of the real locus of a surface with Du Val
/// points that is rational over C: M orientable implies M = S^2 or T^2, at
/// most 6 points other than non-separating A_1^+ points, and separating points
/// only of even exponent (the last one checked regardless of rationality).
std::vector<Violation> validate_surface(const SurfaceComponentDescriptor& d);

struct ComponentAssembly {
  SurgeryProblem problem;
  ManifoldType manifold;
  std::int64_t rp3_count = 0;
  std::int64_t s1xs2_count = 0;
  std::vector<SingularPoint> induced_points;  // Seifert points not among the declared ones
  std::optional<std::string> note;
};

struct Assembly {
  std::vector<ComponentAssembly> components;
  std::vector<Violation> violations;
};

/// "N # a RP^3 # b (S^1 x S^2)" for one component.
std::string to_string(const ComponentAssembly& c);

/// Builds and decomposes the surgery problem of every component. Throws
/// ValidationError on malformed descriptors, including blown-up curves on an
/// orientable total space.
Assembly assemble(const FibrationDescriptor& f);

enum class BlowupEffect { Homeomorphism, ConnectSumRP2 };

struct BlowupReport {
  BlowupEffect effect = BlowupEffect::Homeomorphism;
  bool creates_nonseparating_point = false;
};

std::string to_string(BlowupEffect e);

/// Effect of a (1,m)-blow-up of a smooth real point on the real locus.
BlowupReport blowup_effect(std::int64_t m);

/// Even-exponent non-separating quotient points whose region covers both local sheets.
std::vector<Violation> over_one_component_check(const FibrationDescriptor& f);

}  // namespace rcb
