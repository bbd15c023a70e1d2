#ifndef ORBITKIT_SMOOTH_MAP_HPP
#define ORBITKIT_SMOOTH_MAP_HPP

#include <functional>
#include <vector>

#include "orbitkit/polynomial.hpp"
#include "orbitkit/types.hpp"

namespace orbitkit {

/// Evaluable map between Euclidean coordinate spaces with derivative access.
/// Polynomial bodies are the canonical serializable form and carry exact
/// Jacobians; blackbox bodies exist only in-process and are differentiated
/// by central differences with step max(1, |x_i|) * fd_step_rel.
class SmoothMap {
public:
  using BlackboxFn = std::function<Vec(const Vec&)>;

  static constexpr double kDefaultFdStepRel = 1e-6;

  static SmoothMap polynomial(std::vector<Polynomial> outputs);
  static SmoothMap scalar(Polynomial output);
  static SmoothMap blackbox(int domain_dim, int codomain_dim, BlackboxFn fn,
                            double fd_step_rel = kDefaultFdStepRel);
  /// The identity map on R^n.
  static SmoothMap identity(int n);

  int domain_dim() const { return domain_dim_; }
  int codomain_dim() const { return codomain_dim_; }
  bool is_polynomial() const { return !outputs_.empty() || codomain_dim_ == 0; }

  /// Polynomial components; throws for blackbox bodies.
  const std::vector<Polynomial>& outputs() const;

  Vec operator()(const Vec& x) const;
  /// codomain_dim x domain_dim. Exact for polynomial bodies, central
  /// differences otherwise. Throws on non-finite evaluations near x.
  Mat jacobian(const Vec& x) const;

private:
  SmoothMap() = default;
  int domain_dim_ = 0;
  int codomain_dim_ = 0;
  std::vector<Polynomial> outputs_; // empty for blackbox
  BlackboxFn fn_;
  double fd_step_rel_ = kDefaultFdStepRel;
};

} // namespace orbitkit

#endif
