#include "orbitkit/control_system.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace orbitkit {

ControlModel ControlModel::box(Vec lower, Vec upper) {
  if (lower.size() != upper.size() || lower.size() < 1)
    throw std::invalid_argument("control model: bad box bounds");
  for (int i = 0; i < lower.size(); ++i)
    if (!(lower[i] <= upper[i])) throw std::invalid_argument("control model: lower > upper");
  ControlModel m;
  m.kind_ = Kind::Box;
  m.dim_ = static_cast<int>(lower.size());
  m.lower_ = std::move(lower);
  m.upper_ = std::move(upper);
  return m;
}

ControlModel ControlModel::finite_set(std::vector<Vec> points) {
  if (points.empty()) throw std::invalid_argument("control model: empty finite set");
  ControlModel m;
  m.kind_ = Kind::FiniteSet;
  m.dim_ = static_cast<int>(points[0].size());
  for (const auto& p : points)
    if (p.size() != m.dim_) throw std::invalid_argument("control model: point dimension mismatch");
  m.points_ = std::move(points);
  return m;
}

bool ControlModel::contains(const Vec& u, double tol) const {
  if (u.size() != dim_) return false;
  if (kind_ == Kind::Box) {
    for (int i = 0; i < dim_; ++i)
      if (u[i] < lower_[i] - tol || u[i] > upper_[i] + tol) return false;
    return true;
  }
  for (const auto& p : points_)
    if ((u - p).lpNorm<Eigen::Infinity>() <= tol) return true;
  return false;
}

std::vector<Vec> ControlModel::sample_points() const {
  if (kind_ == Kind::FiniteSet) return points_;
  std::vector<Vec> pts;
  pts.push_back(0.5 * (lower_ + upper_));
  const int corners = 1 << dim_;
  if (corners <= 64) {
    for (int mask = 0; mask < corners; ++mask) {
      Vec c(dim_);
      for (int i = 0; i < dim_; ++i) c[i] = (mask >> i) & 1 ? upper_[i] : lower_[i];
      pts.push_back(std::move(c));
    }
  }
  return pts;
}

ControlSystem::ControlSystem(SubsetModel state, ControlModel control, SmoothMap dyn)
    : state_model(std::move(state)), control_model(std::move(control)), dynamics(std::move(dyn)) {
  if (dynamics.domain_dim() != state_model.ambient_dim() + control_model.dim())
    throw std::invalid_argument("control system: dynamics domain must be state_dim + control_dim");
  if (dynamics.codomain_dim() != state_model.ambient_dim())
    throw std::invalid_argument("control system: dynamics codomain must equal state dimension");
}

Vec ControlSystem::velocity(const Vec& x, const Vec& u) const {
  Vec xu(state_dim() + control_dim());
  xu.head(state_dim()) = x;
  xu.tail(control_dim()) = u;
  return dynamics(xu);
}

Section::Section(SmoothMap m, SubsetModel dom, std::string lbl)
    : map(std::move(m)), domain(std::move(dom)), label(std::move(lbl)) {
  if (map.domain_dim() != domain.ambient_dim())
    throw std::invalid_argument("section: map domain and model dimension mismatch");
}

Section::Section(SmoothMap m, std::string lbl)
    : Section(std::move(m), SubsetModel::full_space(m.domain_dim()), std::move(lbl)) {}

namespace {

std::string point_to_string(const Vec& x) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

} // namespace

VectorField closed_loop_field(const ControlSystem& sys, const Section& sec,
                              const std::vector<Vec>& check_probes) {
  const int n = sys.state_dim();
  const int m = sys.control_dim();
  if (sec.map.domain_dim() != n || sec.map.codomain_dim() != m)
    throw std::invalid_argument("closed_loop_field: section must map states to controls");

  for (const Vec& p : check_probes) {
    if (!sec.domain.contains(p)) continue;
    if (!sys.state_model.contains(p))
      throw std::invalid_argument("closed_loop_field: section '" + sec.label +
                                  "' domain extends beyond the state model at x = " +
                                  point_to_string(p));
    const Vec u = sec.map(p);
    if (!sys.control_model.contains(u, sys.state_model.membership_tol()))
      throw std::invalid_argument("closed_loop_field: section '" + sec.label +
                                  "' leaves the control model at x = " + point_to_string(p));
  }

  if (sys.dynamics.is_polynomial() && sec.map.is_polynomial()) {
    // Substitute x_i -> x_i and u_j -> sigma_j(x) into phi.
    std::vector<Polynomial> subs;
    for (int i = 0; i < n; ++i) subs.push_back(Polynomial::variable(n, i));
    for (int j = 0; j < m; ++j) subs.push_back(sec.map.outputs()[j]);
    std::vector<Polynomial> outs;
    for (int i = 0; i < n; ++i) outs.push_back(sys.dynamics.outputs()[i].substitute(subs));
    return VectorField(SmoothMap::polynomial(std::move(outs)), sys.state_model, sec.label);
  }

  SmoothMap dyn = sys.dynamics;
  SmoothMap sig = sec.map;
  auto fn = [dyn, sig, n, m](const Vec& x) -> Vec {
    Vec xu(n + m);
    xu.head(n) = x;
    xu.tail(m) = sig(x);
    return dyn(xu);
  };
  return VectorField(SmoothMap::blackbox(n, n, std::move(fn)), sys.state_model, sec.label);
}

FieldFamily build_family(const ControlSystem& sys, const std::vector<Section>& sections,
                         const std::vector<Vec>& check_probes) {
  if (sections.empty()) throw std::invalid_argument("build_family: no sections");
  std::vector<VectorField> fields;
  fields.reserve(sections.size());
  for (const auto& sec : sections) fields.push_back(closed_loop_field(sys, sec, check_probes));
  for (const Vec& p : check_probes) {
    bool covered = false;
    for (const auto& sec : sections)
      if (sec.domain.contains(p)) covered = true;
    if (!covered)
      std::cerr << "build_family: warning: no section domain covers probe " << point_to_string(p)
                << "\n";
  }
  return FieldFamily(std::move(fields));
}

double equivariance_residual(const ControlSystem& sys, const GroupAction& action,
                             const std::vector<Mat>& group_samples,
                             const std::vector<Vec>& state_samples,
                             const std::vector<Vec>& control_samples) {
  if (action.dim() != sys.state_dim())
    throw std::invalid_argument("equivariance_residual: action dimension mismatch");
  double r = 0.0;
  for (const Mat& g : group_samples)
    for (const Vec& x : state_samples)
      for (const Vec& u : control_samples)
        r = std::max(r, (sys.velocity(g * x, u) - g * sys.velocity(x, u)).norm());
  return r;
}

double section_invariance_residual(const Section& sec, const GroupAction& action,
                                   const std::vector<Vec>& samples) {
  if (action.dim() != sec.map.domain_dim())
    throw std::invalid_argument("section_invariance_residual: action dimension mismatch");
  double r = 0.0;
  const auto elems = action.sample_elements();
  for (const Vec& x : samples) {
    if (!sec.domain.contains(x)) continue;
    const Vec sx = sec.map(x);
    for (const Mat& g : elems) {
      const Vec gx = g * x;
      if (!sec.domain.contains(gx))
        throw std::invalid_argument("section_invariance_residual: sample leaves section domain");
      r = std::max(r, (sec.map(gx) - sx).norm());
    }
  }
  return r;
}

} // namespace orbitkit
