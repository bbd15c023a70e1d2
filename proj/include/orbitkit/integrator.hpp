#ifndef ORBITKIT_INTEGRATOR_HPP
#define ORBITKIT_INTEGRATOR_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "orbitkit/types.hpp"
#include "orbitkit/vector_field.hpp"

namespace orbitkit {

enum class Termination { TimeLimit, EscapedSubset, BlowUp };

const char* to_string(Termination t);

struct IntegratorConfig {
  enum class Method { Rk4Fixed, Rk45Adaptive };

  Method method = Method::Rk45Adaptive;
  double step = 1e-3;     // fixed RK4 step
  double rel_tol = 1e-10; // RK45 controller
  double abs_tol = 1e-12;
  double max_step = 0.2;  // cap so subset escapes cannot be skipped over
  double max_time = 6.0;  // horizon for maximal-curve exploration
  double escape_tol = 1e-7;

  void validate() const;
};

/// Numerically sampled integral curve. Samples are strictly increasing in t
/// and each lies in the field's domain within escape_tol; the sample at t=0
/// is the initial point. t_minus/t_plus are the endpoints actually explored,
/// with the reason integration stopped on each side.
struct IntegralCurve {
  std::vector<double> t;
  std::vector<Vec> x;
  double t_minus = 0.0;
  double t_plus = 0.0;
  Termination termination_minus = Termination::TimeLimit;
  Termination termination_plus = Termination::TimeLimit;

  int dim() const { return x.empty() ? 0 : static_cast<int>(x.front().size()); }
  const Vec& front() const { return x.front(); }
  const Vec& back() const { return x.back(); }
  /// Endpoint in the direction of travel: back() when integrating forward,
  /// front() when integrating backward.
  const Vec& endpoint(double t_target) const { return t_target < 0 ? front() : back(); }
  Termination termination(double t_target) const {
    return t_target < 0 ? termination_minus : termination_plus;
  }
  /// True when the requested target time was reached.
  bool reached(double t_target) const {
    return termination(t_target) == Termination::TimeLimit;
  }

  /// CSV with header t,x1,...,xn.
  void write_csv(std::ostream& os) const;
};

/// Integrate X from x0 toward t_target (either sign). Stops at t_target, or
/// when the state violates domain membership beyond cfg.escape_tol (the last
/// in-set time is bracketed by bisection), or when |x|_inf exceeds the
/// blow-up bound.
IntegralCurve integrate(const VectorField& X, const Vec& x0, double t_target,
                        const IntegratorConfig& cfg);

/// Two-sided exploration to +-cfg.max_time, merged into one curve.
IntegralCurve maximal_curve(const VectorField& X, const Vec& x0, const IntegratorConfig& cfg);

} // namespace orbitkit

#endif
