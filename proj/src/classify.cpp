#include "orbitkit/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitkit {

const char* to_string(DerivationClass c) {
  switch (c) {
    case DerivationClass::VectorField: return "vector-field";
    case DerivationClass::DerivationOnly: return "derivation-only";
    case DerivationClass::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Micro-walk the first 64 escape_tol-sized steps away from the probe and
// count how often the membership residual crosses the escape threshold.
// More than one crossing means the escape time near 0 cannot be trusted.
bool membership_oscillates(const VectorField& X, const Vec& probe, double sign,
                           const IntegratorConfig& cfg) {
  Vec y = probe;
  const double h = cfg.escape_tol;
  int crossings = 0;
  bool above = X.domain.violation(y) > cfg.escape_tol;
  for (int k = 0; k < 64; ++k) {
    const Vec k1 = sign * X(y);
    const Vec k2 = sign * X(y + 0.5 * h * k1);
    const Vec k3 = sign * X(y + 0.5 * h * k2);
    const Vec k4 = sign * X(y + h * k3);
    y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!y.allFinite()) break;
    const bool now = X.domain.violation(y) > cfg.escape_tol;
    if (now != above) {
      ++crossings;
      above = now;
    }
  }
  return crossings > 1;
}

} // namespace

ClassificationReport classify_derivation(const VectorField& X, const std::vector<Vec>& probes,
                                         const IntegratorConfig& cfg) {
  if (probes.empty()) throw std::invalid_argument("classify_derivation: empty probe list");

  ClassificationReport report;
  bool any_closed_end = false;
  bool any_borderline = false;

  for (const Vec& p : probes) {
    IntegralCurve fwd = integrate(X, p, cfg.max_time, cfg);
    IntegralCurve bwd = integrate(X, p, -cfg.max_time, cfg);

    ProbeEvidence ev;
    ev.probe = p;
    ev.t_plus = fwd.t_plus;
    ev.termination_plus = fwd.termination_plus;
    ev.t_minus = bwd.t_minus;
    ev.termination_minus = bwd.termination_minus;
    // On a closed semialgebraic model an escaped-subset stop attains its
    // endpoint inside the set, so that side of the domain is not open.
    // Reaching the horizon or blowing up leaves the side open.
    ev.open_plus = fwd.termination_plus != Termination::EscapedSubset;
    ev.open_minus = bwd.termination_minus != Termination::EscapedSubset;

    if (!ev.open_plus && std::fabs(ev.t_plus) <= 10.0 * cfg.escape_tol &&
        membership_oscillates(X, p, +1.0, cfg))
      ev.borderline = true;
    if (!ev.open_minus && std::fabs(ev.t_minus) <= 10.0 * cfg.escape_tol &&
        membership_oscillates(X, p, -1.0, cfg))
      ev.borderline = true;

    if (ev.borderline)
      any_borderline = true;
    else if (!ev.open_plus || !ev.open_minus)
      any_closed_end = true;
    report.evidence.push_back(std::move(ev));
  }

  if (any_closed_end)
    report.verdict = DerivationClass::DerivationOnly;
  else if (any_borderline)
    report.verdict = DerivationClass::Inconclusive;
  else
    report.verdict = DerivationClass::VectorField;
  return report;
}

} // namespace orbitkit
