#include "orbitkit/invariant_map.hpp"

#include <stdexcept>

namespace orbitkit {

InvariantMap::InvariantMap(SmoothMap rho, GroupAction action, QuotientModel image_model)
    : rho_(std::move(rho)), action_(std::move(action)), image_(std::move(image_model)) {
  if (!rho_.is_polynomial())
    throw std::invalid_argument("invariant map: rho must be polynomial");
  if (rho_.domain_dim() != action_.dim())
    throw std::invalid_argument("invariant map: rho domain and action dimension mismatch");
  if (image_.model.ambient_dim() != rho_.codomain_dim())
    throw std::invalid_argument("invariant map: image model and rho codomain mismatch");
}

double InvariantMap::invariance_residual(const std::vector<Vec>& samples) const {
  double r = 0.0;
  const auto elems = action_.sample_elements();
  for (const Vec& x : samples) {
    const Vec rx = rho_(x);
    for (const Mat& g : elems) r = std::max(r, (rho_(g * x) - rx).norm());
  }
  return r;
}

void InvariantMap::validate(const std::vector<Vec>& samples, double tol) const {
  const double r = invariance_residual(samples);
  if (r > tol)
    throw std::invalid_argument("invariant map: not invariant on samples (residual " +
                                std::to_string(r) + ")");
  for (const Vec& x : samples)
    if (!image_.model.contains(rho_(x)))
      throw std::invalid_argument("invariant map: rho(x) violates the image model");
}

} // namespace orbitkit
