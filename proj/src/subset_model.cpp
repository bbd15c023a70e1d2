#include "orbitkit/subset_model.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitkit {

SubsetModel SubsetModel::full_space(int ambient_dim) {
  return SubsetModel(ambient_dim, {}, {});
}

SubsetModel::SubsetModel(int ambient_dim, std::vector<SmoothMap> equalities,
                         std::vector<SmoothMap> inequalities, double membership_tol)
    : ambient_dim_(ambient_dim),
      equalities_(std::move(equalities)),
      inequalities_(std::move(inequalities)),
      membership_tol_(membership_tol) {
  if (ambient_dim < 1) throw std::invalid_argument("subset model: ambient dimension must be positive");
  if (!(membership_tol > 0)) throw std::invalid_argument("subset model: membership tolerance must be positive");
  auto check = [&](const SmoothMap& f, const char* what) {
    if (f.domain_dim() != ambient_dim_ || f.codomain_dim() != 1)
      throw std::invalid_argument(std::string("subset model: ") + what + " must map R^ambient -> R");
  };
  for (const auto& f : equalities_) check(f, "equality");
  for (const auto& f : inequalities_) check(f, "inequality");
}

double SubsetModel::violation(const Vec& x) const {
  if (x.size() != ambient_dim_) throw std::invalid_argument("subset model: dimension mismatch");
  double v = 0.0;
  for (const auto& f : equalities_) v = std::max(v, std::fabs(f(x)[0]));
  for (const auto& f : inequalities_) v = std::max(v, -f(x)[0]);
  return v;
}

} // namespace orbitkit
