#include "orbitkit/smooth_map.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitkit {

SmoothMap SmoothMap::polynomial(std::vector<Polynomial> outputs) {
  if (outputs.empty()) throw std::invalid_argument("smooth map: zero-dimensional codomain");
  SmoothMap m;
  m.domain_dim_ = outputs[0].nvars();
  m.codomain_dim_ = static_cast<int>(outputs.size());
  for (const auto& p : outputs)
    if (p.nvars() != m.domain_dim_)
      throw std::invalid_argument("smooth map: output components disagree on arity");
  m.outputs_ = std::move(outputs);
  return m;
}

SmoothMap SmoothMap::scalar(Polynomial output) {
  std::vector<Polynomial> v;
  v.push_back(std::move(output));
  return polynomial(std::move(v));
}

SmoothMap SmoothMap::blackbox(int domain_dim, int codomain_dim, BlackboxFn fn, double fd_step_rel) {
  if (domain_dim < 1) throw std::invalid_argument("smooth map: domain dimension must be positive");
  if (codomain_dim < 1) throw std::invalid_argument("smooth map: zero-dimensional codomain");
  if (!(fd_step_rel > 0)) throw std::invalid_argument("smooth map: fd step must be positive");
  SmoothMap m;
  m.domain_dim_ = domain_dim;
  m.codomain_dim_ = codomain_dim;
  m.fn_ = std::move(fn);
  m.fd_step_rel_ = fd_step_rel;
  return m;
}

SmoothMap SmoothMap::identity(int n) {
  std::vector<Polynomial> outs;
  for (int i = 0; i < n; ++i) outs.push_back(Polynomial::variable(n, i));
  return polynomial(std::move(outs));
}

const std::vector<Polynomial>& SmoothMap::outputs() const {
  if (!is_polynomial()) throw std::logic_error("smooth map: blackbox body has no term list");
  return outputs_;
}

Vec SmoothMap::operator()(const Vec& x) const {
  if (x.size() != domain_dim_) throw std::invalid_argument("smooth map: evaluation dimension mismatch");
  if (is_polynomial()) {
    Vec y(codomain_dim_);
    for (int i = 0; i < codomain_dim_; ++i) y[i] = outputs_[i](x);
    return y;
  }
  Vec y = fn_(x);
  if (y.size() != codomain_dim_) throw std::runtime_error("smooth map: blackbox returned wrong dimension");
  return y;
}

Mat SmoothMap::jacobian(const Vec& x) const {
  if (x.size() != domain_dim_) throw std::invalid_argument("smooth map: jacobian dimension mismatch");
  Mat J(codomain_dim_, domain_dim_);
  if (is_polynomial()) {
    for (int i = 0; i < codomain_dim_; ++i)
      for (int j = 0; j < domain_dim_; ++j) J(i, j) = outputs_[i].derivative(j)(x);
    return J;
  }
  for (int j = 0; j < domain_dim_; ++j) {
    const double h = std::max(1.0, std::fabs(x[j])) * fd_step_rel_;
    Vec xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    const Vec fp = (*this)(xp);
    const Vec fm = (*this)(xm);
    if (!fp.allFinite() || !fm.allFinite())
      throw std::runtime_error("smooth map: non-finite evaluation near x in jacobian");
    J.col(j) = (fp - fm) / (2.0 * h);
  }
  return J;
}

} // namespace orbitkit
