#ifndef ORBITKIT_REDUCTION_HPP
#define ORBITKIT_REDUCTION_HPP

#include <string>
#include <vector>

#include "orbitkit/integrator.hpp"
#include "orbitkit/invariant_map.hpp"
#include "orbitkit/vector_field.hpp"

namespace orbitkit {

/// Pushforward of a G-invariant field through an invariant map: a field on
/// the quotient model satisfying Xbar(rho(x)) = Drho(x) X(x). closed_form
/// marks whether the components were expressed as polynomials in the
/// rho-coordinates; otherwise the field interpolates tabulated witness data.
struct ReducedVectorField {
  VectorField field;
  std::string provenance; // label of the upstairs field
  bool closed_form = true;
};

/// max over samples of |g X(x) - X(g x)| for sampled group elements g
/// (linear actions, so the tangent action of g is g itself).
double field_invariance_residual(const VectorField& X, const GroupAction& action,
                                 const std::vector<Vec>& samples);

struct ReduceOptions {
  int degree_bound = 6;        // polynomial degree attempted in rho-coordinates
  double invariance_tol = 1e-6;
  double coeff_match_tol = 1e-9;
  double prune_tol = 1e-12;    // coefficients below this are dropped
};

/// Push X down through inv. Requires X to be invariant on the witness
/// samples (throws NotInvariantError otherwise, also when two witnesses on
/// the same orbit disagree about the pushed value). Attempts a closed
/// polynomial form degree by degree up to the bound; falls back to an
/// interpolating blackbox over the witness data.
ReducedVectorField reduce_field(const VectorField& X, const InvariantMap& inv,
                                const std::vector<Vec>& witness_samples,
                                const ReduceOptions& opts = {});

struct CommutationResult {
  double residual = 0.0; // max over evaluated grid times
  int points_used = 0;
  int points_skipped = 0; // grid times where either flow escaped early
};

/// max over t in t_grid of |rho(exp(tX) x0) - exp(t Xbar)(rho(x0))|.
/// Grid times where either flow terminates early are skipped and counted.
CommutationResult reduction_commutation_residual(const VectorField& X, const InvariantMap& inv,
                                                 const ReducedVectorField& reduced, const Vec& x0,
                                                 const std::vector<double>& t_grid,
                                                 const IntegratorConfig& cfg);

/// The unique v with Drho(x) v = Xbar(rho(x)) and v Euclidean-orthogonal to
/// the orbit tangent directions at x. Throws NonFreePointError when the
/// action is not locally free at x or the lift is not uniquely determined.
Vec horizontal_lift(const ReducedVectorField& xbar, const InvariantMap& inv, const Vec& x);

} // namespace orbitkit

#endif
