#ifndef ORBITKIT_SUBSET_MODEL_HPP
#define ORBITKIT_SUBSET_MODEL_HPP

#include <vector>

#include "orbitkit/smooth_map.hpp"
#include "orbitkit/types.hpp"

namespace orbitkit {

/// Semialgebraic model of a subset of R^n: scalar equalities required to
/// vanish and scalar inequalities required >= 0, both up to a tolerance.
/// The ambient space itself is the model with empty constraint lists.
class SubsetModel {
public:
  static constexpr double kDefaultMembershipTol = 1e-9;

  static SubsetModel full_space(int ambient_dim);
  SubsetModel(int ambient_dim, std::vector<SmoothMap> equalities,
              std::vector<SmoothMap> inequalities,
              double membership_tol = kDefaultMembershipTol);

  int ambient_dim() const { return ambient_dim_; }
  double membership_tol() const { return membership_tol_; }
  const std::vector<SmoothMap>& equalities() const { return equalities_; }
  const std::vector<SmoothMap>& inequalities() const { return inequalities_; }
  bool unconstrained() const { return equalities_.empty() && inequalities_.empty(); }

  /// Largest constraint violation at x: max over |eq_i(x)| and (-ineq_j(x))+.
  /// Zero when unconstrained.
  double violation(const Vec& x) const;
  bool contains(const Vec& x) const { return violation(x) <= membership_tol_; }
  bool contains(const Vec& x, double tol) const { return violation(x) <= tol; }

private:
  int ambient_dim_ = 0;
  std::vector<SmoothMap> equalities_;
  std::vector<SmoothMap> inequalities_;
  double membership_tol_ = kDefaultMembershipTol;
};

} // namespace orbitkit

#endif
