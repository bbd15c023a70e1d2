#ifndef ORBITKIT_GROUP_ACTION_HPP
#define ORBITKIT_GROUP_ACTION_HPP

#include <vector>

#include "orbitkit/types.hpp"

namespace orbitkit {

/// Linear group action on R^n: either a finite matrix group (the full
/// element list, group axioms verified at construction) or a one-parameter
/// group generated by a Lie algebra element A, with element(t) = exp(t A).
class GroupAction {
public:
  enum class Kind { Finite, OneParameter };

  static GroupAction finite(std::vector<Mat> elements);
  static GroupAction one_parameter(Mat generator, std::vector<double> sample_params = {});

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  /// Finite element list; throws for one-parameter actions.
  const std::vector<Mat>& elements() const;
  /// exp(t * generator); throws for finite actions.
  Mat element(double t) const;
  const Mat& generator() const;
  const std::vector<double>& sample_params() const { return sample_params_; }

  /// Representative elements for residual checks: every element of a finite
  /// group, or the one-parameter elements at the sample parameters.
  std::vector<Mat> sample_elements() const;

  /// Infinitesimal generator vectors at x (orbit tangent directions).
  /// Empty for finite actions.
  std::vector<Vec> generator_vectors_at(const Vec& x) const;

  /// True when no nontrivial element (or the generator) fixes x within tol.
  bool is_free_at(const Vec& x, double tol = 1e-8) const;

private:
  GroupAction() = default;
  Kind kind_ = Kind::Finite;
  int dim_ = 0;
  std::vector<Mat> elements_;
  Mat generator_;
  std::vector<double> sample_params_;
};

} // namespace orbitkit

#endif
