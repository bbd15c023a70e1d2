#ifndef ORBITKIT_CLASSIFY_HPP
#define ORBITKIT_CLASSIFY_HPP

#include <vector>

#include "orbitkit/integrator.hpp"
#include "orbitkit/vector_field.hpp"

namespace orbitkit {

/// Verdict of the integral-curve openness test. A derivation of the model's
/// smooth functions is a vector field exactly when every maximal integral
/// curve has an open domain; on closed semialgebraic models an attained
/// finite escape time is the decisive counter-evidence.
enum class DerivationClass { VectorField, DerivationOnly, Inconclusive };

const char* to_string(DerivationClass c);

struct ProbeEvidence {
  Vec probe;
  double t_minus = 0.0;
  double t_plus = 0.0;
  Termination termination_minus = Termination::TimeLimit;
  Termination termination_plus = Termination::TimeLimit;
  /// Per side: the maximal domain shows no attained endpoint (time horizon
  /// reached, or escape to infinity which never attains its endpoint).
  bool open_minus = true;
  bool open_plus = true;
  /// Escape time within 10 * escape_tol of 0 while the membership residual
  /// oscillates around the threshold: numerically ambiguous.
  bool borderline = false;
};

struct ClassificationReport {
  DerivationClass verdict = DerivationClass::Inconclusive;
  std::vector<ProbeEvidence> evidence;
};

/// Explore maximal integral curves through every probe (to +-cfg.max_time)
/// and classify the field per the openness criterion. Probes must lie in
/// X's domain; an empty probe list is an error.
ClassificationReport classify_derivation(const VectorField& X, const std::vector<Vec>& probes,
                                         const IntegratorConfig& cfg);

} // namespace orbitkit

#endif
