#ifndef ORBITKIT_DIMENSION_HPP
#define ORBITKIT_DIMENSION_HPP

#include <optional>
#include <vector>

#include "orbitkit/field_family.hpp"
#include "orbitkit/orbit_sample.hpp"

namespace orbitkit {

/// Default local-PCA parameters. The cutoff must sit above the curvature
/// ghost of a unit-curvature manifold patch (second singular value about
/// 0.4 * radius of the first) and below genuine secondary spread.
inline constexpr double kDefaultDimRadius = 0.25;
inline constexpr double kDefaultSvCutoff = 0.15;

struct DimensionReport {
  struct Local {
    Vec point;
    int local_dim = 0;
    std::vector<double> singular_values; // nonincreasing
  };
  std::vector<Local> per_point;
  std::optional<int> global_dim;        // nullopt = inconsistent
  std::vector<int> inconsistent_points; // indices into per_point disagreeing with the mode
  double radius = kDefaultDimRadius;
  double sv_cutoff = kDefaultSvCutoff;
  double max_membership_residual = 0.0;
};

/// Local PCA dimension at `center`: the number of singular values of the
/// mean-centered neighborhood point matrix above sv_cutoff times the largest
/// one. A neighborhood concentrated at a point (largest singular value below
/// 1e-9) has dimension 0. Throws InsufficientSamplesError with fewer than
/// two neighbors within the radius.
int estimate_dimension(const OrbitSample& cloud, const Vec& center, double radius,
                       double sv_cutoff);

/// Rank at x of the family fields together with iterated Lie brackets up to
/// bracket_depth (depth 1 = the fields alone). Brackets are computed
/// symbolically, so depth > 1 requires polynomial fields.
int tangent_span_rank(const FieldFamily& family, const Vec& x, int bracket_depth);

/// Estimate the local dimension at up to 32 well-spread cloud points
/// (farthest-point selection over points with enough neighbors) and check
/// they agree.
DimensionReport verify_orbit_manifold(const OrbitSample& cloud, double radius = kDefaultDimRadius,
                                      double sv_cutoff = kDefaultSvCutoff);

} // namespace orbitkit

#endif
