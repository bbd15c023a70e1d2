#ifndef ORBITKIT_CONTROL_SYSTEM_HPP
#define ORBITKIT_CONTROL_SYSTEM_HPP

#include <string>
#include <vector>

#include "orbitkit/field_family.hpp"
#include "orbitkit/group_action.hpp"
#include "orbitkit/smooth_map.hpp"
#include "orbitkit/subset_model.hpp"

namespace orbitkit {

/// Admissible control values: a box in R^m or a finite set of points.
class ControlModel {
public:
  static ControlModel box(Vec lower, Vec upper);
  static ControlModel finite_set(std::vector<Vec> points);

  enum class Kind { Box, FiniteSet };
  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool contains(const Vec& u, double tol) const;
  /// Representative control values for residual checks: box center and
  /// corners, or all points of a finite set.
  std::vector<Vec> sample_points() const;

  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }
  const std::vector<Vec>& points() const { return points_; }

private:
  ControlModel() = default;
  Kind kind_ = Kind::Box;
  int dim_ = 0;
  Vec lower_, upper_;
  std::vector<Vec> points_;
};

/// Control system over the trivial bundle M x U: a state model M in R^n, a
/// control model U in R^m, and dynamics phi: R^(n+m) -> R^n with inputs
/// ordered state-then-control.
struct ControlSystem {
  SubsetModel state_model;
  ControlModel control_model;
  SmoothMap dynamics;

  ControlSystem(SubsetModel state_model, ControlModel control_model, SmoothMap dynamics);
  int state_dim() const { return state_model.ambient_dim(); }
  int control_dim() const { return control_model.dim(); }
  /// phi(x, u).
  Vec velocity(const Vec& x, const Vec& u) const;
};

/// Smooth feedback law sigma: M -> U, possibly on a proper subdomain of M.
struct Section {
  SmoothMap map;
  SubsetModel domain;
  std::string label;

  Section(SmoothMap map, SubsetModel domain, std::string label);
  Section(SmoothMap map, std::string label);
};

/// Closed-loop field X(x) = phi(x, sigma(x)), composed symbolically when
/// both the dynamics and the section are polynomial. Each check probe is
/// verified to produce an admissible control value.
VectorField closed_loop_field(const ControlSystem& sys, const Section& sec,
                              const std::vector<Vec>& check_probes = {});

/// Family of closed-loop fields, labels inherited from the sections. Warns
/// on stderr when the section domains fail to cover a check probe.
FieldFamily build_family(const ControlSystem& sys, const std::vector<Section>& sections,
                         const std::vector<Vec>& check_probes = {});

/// max over (g, x, u) samples of |phi(g x, u) - g phi(x, u)|; the symmetry
/// defect of the dynamics under the state action (fiber fixed).
double equivariance_residual(const ControlSystem& sys, const GroupAction& action,
                             const std::vector<Mat>& group_samples,
                             const std::vector<Vec>& state_samples,
                             const std::vector<Vec>& control_samples);

/// max over (g, x) of |sigma(g x) - sigma(x)|; sections must be invariant
/// because the fiber coordinate is fixed by the bundle action.
double section_invariance_residual(const Section& sec, const GroupAction& action,
                                   const std::vector<Vec>& samples);

} // namespace orbitkit

#endif
