#ifndef ORBITKIT_VECTOR_FIELD_HPP
#define ORBITKIT_VECTOR_FIELD_HPP

#include <string>

#include "orbitkit/smooth_map.hpp"
#include "orbitkit/subset_model.hpp"
#include "orbitkit/types.hpp"

namespace orbitkit {

/// Assignment of ambient vectors to points of a subset model. Whether such
/// an assignment is a vector field in the strict sense (its flow restricts
/// to the subset) is decided separately by classify_derivation; this type
/// carries no such claim.
struct VectorField {
  SmoothMap map;     // codomain_dim == domain_dim == domain.ambient_dim()
  SubsetModel domain;
  std::string label;

  VectorField(SmoothMap map, SubsetModel domain, std::string label);
  /// Field on the full ambient space.
  VectorField(SmoothMap map, std::string label);

  int dim() const { return domain.ambient_dim(); }
  Vec operator()(const Vec& x) const { return map(x); }
};

/// Directional derivative X.f = grad f(x) . X(x) for scalar f.
double apply_derivation(const VectorField& X, const SmoothMap& f, const Vec& x);

/// Pointwise Lie bracket [X, Y](x) = DY(x) X(x) - DX(x) Y(x).
Vec lie_bracket(const VectorField& X, const VectorField& Y, const Vec& x);

/// Symbolic Lie bracket for polynomial fields; the result is again a
/// polynomial field on X's domain.
VectorField lie_bracket_field(const VectorField& X, const VectorField& Y);

} // namespace orbitkit

#endif
