#include "orbitkit/vector_field.hpp"

#include <stdexcept>

namespace orbitkit {

VectorField::VectorField(SmoothMap m, SubsetModel dom, std::string lbl)
    : map(std::move(m)), domain(std::move(dom)), label(std::move(lbl)) {
  if (map.domain_dim() != map.codomain_dim())
    throw std::invalid_argument("vector field: map must have equal domain and codomain dimension");
  if (map.domain_dim() != domain.ambient_dim())
    throw std::invalid_argument("vector field: map and domain ambient dimension mismatch");
}

VectorField::VectorField(SmoothMap m, std::string lbl)
    : VectorField(std::move(m), SubsetModel::full_space(m.domain_dim()), std::move(lbl)) {}

double apply_derivation(const VectorField& X, const SmoothMap& f, const Vec& x) {
  if (f.codomain_dim() != 1) throw std::invalid_argument("apply_derivation: f must be scalar-valued");
  if (f.domain_dim() != X.dim()) throw std::invalid_argument("apply_derivation: dimension mismatch");
  const Mat grad = f.jacobian(x); // 1 x n
  return (grad * X(x))(0, 0);
}

Vec lie_bracket(const VectorField& X, const VectorField& Y, const Vec& x) {
  if (X.dim() != Y.dim()) throw std::invalid_argument("lie_bracket: dimension mismatch");
  return Y.map.jacobian(x) * X(x) - X.map.jacobian(x) * Y(x);
}

VectorField lie_bracket_field(const VectorField& X, const VectorField& Y) {
  if (X.dim() != Y.dim()) throw std::invalid_argument("lie_bracket: dimension mismatch");
  if (!X.map.is_polynomial() || !Y.map.is_polynomial())
    throw std::invalid_argument("lie_bracket: symbolic bracket needs polynomial fields");
  const int n = X.dim();
  const auto& Xc = X.map.outputs();
  const auto& Yc = Y.map.outputs();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Polynomial comp(n);
    for (int j = 0; j < n; ++j)
      comp = comp + Yc[i].derivative(j) * Xc[j] - Xc[i].derivative(j) * Yc[j];
    out.push_back(std::move(comp));
  }
  return VectorField(SmoothMap::polynomial(std::move(out)), X.domain,
                     "[" + X.label + "," + Y.label + "]");
}

} // namespace orbitkit
