#ifndef ORBITKIT_SCENARIO_HPP
#define ORBITKIT_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitkit/control_system.hpp"
#include "orbitkit/invariant_map.hpp"
#include "orbitkit/orbit_sample.hpp"

namespace orbitkit {

/// One self-contained problem setup: a state model, dynamics with feedback
/// sections and/or explicit fields, an optional symmetry action with its
/// invariant map, a base point, probe points, and sampler/integrator
/// settings. Scenarios round-trip through a versioned JSON file (schema 1)
/// using the polynomial term-list encoding.
struct Scenario {
  std::string name;
  SubsetModel state_model = SubsetModel::full_space(1);
  std::optional<ControlModel> control_model;
  std::optional<SmoothMap> dynamics; // R^(n+m) -> R^n, state-then-control
  std::vector<Section> sections;
  std::vector<VectorField> explicit_fields;
  std::optional<GroupAction> action;
  std::optional<std::string> catalog_name; // set when action came from the catalog
  std::optional<InvariantMap> invariant_map_explicit;
  Vec base_point;
  std::vector<Vec> probes;
  SamplerOptions sampler;
  IntegratorConfig integrator;

  bool has_dynamics() const { return dynamics.has_value() && control_model.has_value(); }
  ControlSystem system() const;
  /// Closed-loop fields from the sections plus the explicit fields.
  FieldFamily family() const;
  /// Explicit invariant map, or the catalog one when the action is built in.
  std::optional<InvariantMap> invariant() const;
  /// Probes plus the base point.
  std::vector<Vec> state_samples() const;

  static Scenario from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  static Scenario demo(const std::string& name);
  static std::vector<std::string> demo_names();
};

} // namespace orbitkit

#endif
