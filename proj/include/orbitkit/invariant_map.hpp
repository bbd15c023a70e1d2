#ifndef ORBITKIT_INVARIANT_MAP_HPP
#define ORBITKIT_INVARIANT_MAP_HPP

#include <vector>

#include "orbitkit/group_action.hpp"
#include "orbitkit/smooth_map.hpp"
#include "orbitkit/subset_model.hpp"

namespace orbitkit {

/// Orbit space presented as a subcartesian subset of R^k: relations among
/// the invariants as equalities, positivity conditions as inequalities.
struct QuotientModel {
  SubsetModel model;
};

/// Polynomial map rho: R^n -> R^k whose components generate the invariant
/// functions of a group action, together with the semialgebraic model of its
/// image. rho identifies orbits: the quotient M/G is worked with entirely
/// through rho-coordinates.
class InvariantMap {
public:
  InvariantMap(SmoothMap rho, GroupAction action, QuotientModel image_model);

  const SmoothMap& rho() const { return rho_; }
  const GroupAction& action() const { return action_; }
  const QuotientModel& image() const { return image_; }
  int upstairs_dim() const { return rho_.domain_dim(); }
  int downstairs_dim() const { return rho_.codomain_dim(); }

  /// max over sampled g, x of |rho(g x) - rho(x)|.
  double invariance_residual(const std::vector<Vec>& samples) const;
  /// Throws if the residual exceeds tol or some rho(x) leaves the image model.
  void validate(const std::vector<Vec>& samples, double tol = 1e-9) const;

private:
  SmoothMap rho_;
  GroupAction action_;
  QuotientModel image_;
};

} // namespace orbitkit

#endif
