#include "orbitkit/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace orbitkit {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::TimeLimit: return "time-limit";
    case Termination::EscapedSubset: return "escaped-subset";
    case Termination::BlowUp: return "blow-up";
  }
  return "?";
}

void IntegratorConfig::validate() const {
  if (!(step > 0)) throw std::invalid_argument("integrator: step must be positive");
  if (!(rel_tol > 0) || !(abs_tol > 0))
    throw std::invalid_argument("integrator: tolerances must be positive");
  if (!(max_step > 0)) throw std::invalid_argument("integrator: max_step must be positive");
  if (!(max_time > 0) || !std::isfinite(max_time))
    throw std::invalid_argument("integrator: max_time must be finite and positive");
  if (!(escape_tol > 0)) throw std::invalid_argument("integrator: escape_tol must be positive");
}

namespace {

// Field evaluation with the direction sign folded in, so the driver always
// marches forward in its own clock.
struct DirectedField {
  const VectorField& field;
  double sign;

  Vec operator()(const Vec& y) const {
    Vec v = field(y);
    if (!v.allFinite()) throw std::runtime_error("integrate: non-finite field evaluation");
    return sign < 0 ? Vec(-v) : v;
  }
};

Vec rk4_step(const DirectedField& f, const Vec& y, double h) {
  const Vec k1 = f(y);
  const Vec k2 = f(y + 0.5 * h * k1);
  const Vec k3 = f(y + 0.5 * h * k2);
  const Vec k4 = f(y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Dormand-Prince 5(4). Fills the 5th order solution and the normalized
// error estimate (a step is acceptable when err <= 1).
void dopri_step(const DirectedField& f, const Vec& y, double h, const IntegratorConfig& cfg,
                Vec& y_new, double& err) {
  const Vec k1 = f(y);
  const Vec k2 = f(y + h * (1.0 / 5.0) * k1);
  const Vec k3 = f(y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
  const Vec k4 = f(y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
  const Vec k5 = f(y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                            64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
  const Vec k6 = f(y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 + 46732.0 / 5247.0 * k3 +
                            49.0 / 176.0 * k4 - 5103.0 / 18656.0 * k5));
  y_new = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                   2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
  const Vec k7 = f(y_new);
  const Vec y4 = y + h * (5179.0 / 57600.0 * k1 + 7571.0 / 16695.0 * k3 + 393.0 / 640.0 * k4 -
                          92097.0 / 339200.0 * k5 + 187.0 / 2100.0 * k6 + 1.0 / 40.0 * k7);
  err = 0.0;
  for (int i = 0; i < y.size(); ++i) {
    const double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::fabs(y[i]), std::fabs(y_new[i]));
    err = std::max(err, std::fabs(y_new[i] - y4[i]) / scale);
  }
}

// Event-free propagation over a short span, used by the escape bisection.
Vec propagate(const DirectedField& f, Vec y, double span, const IntegratorConfig& cfg) {
  if (span <= 0) return y;
  double s = 0.0;
  double h = std::min(span, cfg.max_step);
  int guard = 0;
  while (s < span) {
    if (++guard > 1000000) throw std::runtime_error("integrate: propagation stalled");
    h = std::min(h, span - s);
    Vec y_new;
    double err;
    dopri_step(f, y, h, cfg, y_new, err);
    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      if (h < 1e-15) throw std::runtime_error("integrate: step size underflow");
      continue;
    }
    s += h;
    y = std::move(y_new);
    const double grow = err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
    h = std::min(cfg.max_step, h * grow);
  }
  return y;
}

// Largest in-set time offset within (0, h] after an escape was detected at
// offset h, found by bisection from the in-set state y_a. Offset 0 means the
// state escapes immediately.
std::pair<double, Vec> bisect_escape(const DirectedField& f, const Vec& y_a, double h,
                                     const SubsetModel& model, const IntegratorConfig& cfg) {
  double lo = 0.0, hi = h;
  Vec y_lo = y_a;
  for (int iter = 0; iter < 80; ++iter) {
    if (hi - lo <= std::max(1e-13, 1e-10 * hi)) break;
    const double mid = 0.5 * (lo + hi);
    Vec y_mid = propagate(f, y_a, mid, cfg);
    if (model.contains(y_mid, cfg.escape_tol)) {
      lo = mid;
      y_lo = std::move(y_mid);
    } else {
      hi = mid;
    }
  }
  return {lo, y_lo};
}

} // namespace

IntegralCurve integrate(const VectorField& X, const Vec& x0, double t_target,
                        const IntegratorConfig& cfg) {
  cfg.validate();
  if (x0.size() != X.dim()) throw std::invalid_argument("integrate: initial point dimension mismatch");
  if (!X.domain.contains(x0, cfg.escape_tol))
    throw std::invalid_argument("integrate: initial point not in the field's domain");

  const double sign = t_target < 0 ? -1.0 : 1.0;
  const double span = std::fabs(t_target);
  const DirectedField f{X, sign};
  const bool adaptive = cfg.method == IntegratorConfig::Method::Rk45Adaptive;

  std::vector<double> ss{0.0};
  std::vector<Vec> ys{x0};
  Termination term = Termination::TimeLimit;

  double s = 0.0;
  Vec y = x0;
  double h = adaptive
                 ? std::min({cfg.max_step, span > 0 ? span : cfg.max_step,
                             1e-2 * (1.0 + y.norm()) / (1.0 + X(y).norm())})
                 : cfg.step;
  if (!(h > 0)) h = cfg.max_step;

  int guard = 0;
  while (s < span) {
    if (++guard > 5000000) throw std::runtime_error("integrate: too many steps");
    double h_used = std::min(h, span - s);
    Vec y_new;
    double h_next = h;
    if (adaptive) {
      double err;
      dopri_step(f, y, h_used, cfg, y_new, err);
      if (err > 1.0) {
        h = h_used * std::max(0.2, 0.9 * std::pow(err, -0.2));
        if (h < 1e-15) throw std::runtime_error("integrate: step size underflow");
        continue;
      }
      const double grow = err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
      h_next = std::min(cfg.max_step, h_used * grow);
    } else {
      y_new = rk4_step(f, y, h_used);
    }
    if (!y_new.allFinite()) throw std::runtime_error("integrate: non-finite state");

    if (!X.domain.contains(y_new, cfg.escape_tol)) {
      auto [off, y_last] = bisect_escape(f, y, h_used, X.domain, cfg);
      if (off > 0) {
        ss.push_back(s + off);
        ys.push_back(y_last);
      }
      term = Termination::EscapedSubset;
      s += off;
      break;
    }

    s += h_used;
    y = std::move(y_new);
    ss.push_back(s);
    ys.push_back(y);
    if (y.lpNorm<Eigen::Infinity>() > kBlowUpBound) {
      term = Termination::BlowUp;
      break;
    }
    h = h_next;
  }

  IntegralCurve curve;
  if (sign >= 0) {
    curve.t = std::move(ss);
    curve.x = std::move(ys);
    curve.t_plus = curve.t.back();
    curve.termination_plus = term;
    curve.t_minus = 0.0;
    curve.termination_minus = Termination::TimeLimit;
  } else {
    const std::size_t n = ss.size();
    curve.t.resize(n);
    curve.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      curve.t[i] = ss[n - 1 - i] == 0.0 ? 0.0 : -ss[n - 1 - i];
      curve.x[i] = std::move(ys[n - 1 - i]);
    }
    curve.t_minus = curve.t.front();
    curve.termination_minus = term;
    curve.t_plus = 0.0;
    curve.termination_plus = Termination::TimeLimit;
  }
  return curve;
}

IntegralCurve maximal_curve(const VectorField& X, const Vec& x0, const IntegratorConfig& cfg) {
  IntegralCurve bwd = integrate(X, x0, -cfg.max_time, cfg);
  IntegralCurve fwd = integrate(X, x0, cfg.max_time, cfg);
  IntegralCurve curve;
  curve.t = bwd.t;
  curve.x = bwd.x;
  curve.t.insert(curve.t.end(), fwd.t.begin() + 1, fwd.t.end());
  curve.x.insert(curve.x.end(), fwd.x.begin() + 1, fwd.x.end());
  curve.t_minus = bwd.t_minus;
  curve.termination_minus = bwd.termination_minus;
  curve.t_plus = fwd.t_plus;
  curve.termination_plus = fwd.termination_plus;
  return curve;
}

void IntegralCurve::write_csv(std::ostream& os) const {
  os << "t";
  for (int i = 0; i < dim(); ++i) os << ",x" << (i + 1);
  os << "\n";
  char buf[32];
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g", t[k]);
    os << buf;
    for (int i = 0; i < dim(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", x[k][i]);
      os << "," << buf;
    }
    os << "\n";
  }
}

} // namespace orbitkit
