#include "orbitkit/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <Eigen/Dense>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

std::vector<int> neighbors_within(const OrbitSample& cloud, const Vec& center, double radius) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < cloud.cloud.size(); ++i)
    if ((cloud.cloud[i].point - center).norm() <= radius) idx.push_back(static_cast<int>(i));
  return idx;
}

DimensionReport::Local local_estimate(const OrbitSample& cloud, const Vec& center, double radius,
                                      double sv_cutoff) {
  const auto idx = neighbors_within(cloud, center, radius);
  if (idx.size() < 2)
    throw InsufficientSamplesError("estimate_dimension: fewer than 2 cloud points within radius");

  const int n = static_cast<int>(center.size());
  Vec mean = Vec::Zero(n);
  for (int i : idx) mean += cloud.cloud[i].point;
  mean /= static_cast<double>(idx.size());

  Mat pts(static_cast<int>(idx.size()), n);
  for (std::size_t r = 0; r < idx.size(); ++r)
    pts.row(static_cast<int>(r)) = (cloud.cloud[idx[r]].point - mean).transpose();

  Eigen::JacobiSVD<Mat> svd(pts);
  DimensionReport::Local loc;
  loc.point = center;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    loc.singular_values.push_back(svd.singularValues()(i));

  const double smax = loc.singular_values.empty() ? 0.0 : loc.singular_values.front();
  if (smax <= 1e-9) {
    loc.local_dim = 0;
    return loc;
  }
  int d = 0;
  for (double s : loc.singular_values)
    if (s > sv_cutoff * smax) ++d;
  loc.local_dim = d;
  return loc;
}

} // namespace

int estimate_dimension(const OrbitSample& cloud, const Vec& center, double radius,
                       double sv_cutoff) {
  return local_estimate(cloud, center, radius, sv_cutoff).local_dim;
}

int tangent_span_rank(const FieldFamily& family, const Vec& x, int bracket_depth) {
  if (family.empty()) throw std::invalid_argument("tangent_span_rank: empty family");
  if (bracket_depth < 1) throw std::invalid_argument("tangent_span_rank: depth must be >= 1");
  if (!family.fields()[0].domain.contains(x))
    throw std::invalid_argument("tangent_span_rank: point is not in the model");
  if (bracket_depth > 1)
    for (const auto& f : family.fields())
      if (!f.map.is_polynomial())
        throw std::invalid_argument(
            "tangent_span_rank: brackets require polynomial fields (blackbox supports depth 1)");

  // Bracket closure by depth: level 1 is the family, level d brackets
  // level d-1 against level 1.
  std::vector<VectorField> all(family.fields().begin(), family.fields().end());
  std::vector<VectorField> prev = all;
  for (int depth = 2; depth <= bracket_depth; ++depth) {
    std::vector<VectorField> next;
    for (const auto& a : prev)
      for (const auto& b : family.fields()) {
        VectorField br = lie_bracket_field(a, b);
        if (br.map.outputs()[0].is_zero() &&
            std::all_of(br.map.outputs().begin(), br.map.outputs().end(),
                        [](const Polynomial& p) { return p.is_zero(); }))
          continue;
        next.push_back(std::move(br));
      }
    all.insert(all.end(), next.begin(), next.end());
    prev = std::move(next);
  }

  const int n = family.dim();
  Mat cols(n, static_cast<int>(all.size()));
  for (std::size_t c = 0; c < all.size(); ++c) cols.col(static_cast<int>(c)) = all[c](x);

  Eigen::JacobiSVD<Mat> svd(cols);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (smax > 0 && sv(i) > 1e-8 * smax) ++rank;
  return rank;
}

DimensionReport verify_orbit_manifold(const OrbitSample& cloud, double radius, double sv_cutoff) {
  if (cloud.cloud.empty()) throw std::invalid_argument("verify_orbit_manifold: empty cloud");

  DimensionReport report;
  report.radius = radius;
  report.sv_cutoff = sv_cutoff;
  for (const auto& e : cloud.cloud)
    report.max_membership_residual =
        std::max(report.max_membership_residual, cloud.model.violation(e.point));

  // Candidate centers: points whose neighborhoods are populated enough for a
  // stable PCA; fall back to the bare minimum of 2 when the cloud is tiny.
  const std::size_t want =
      std::clamp<std::size_t>(cloud.cloud.size() / 8, 2, 10);
  std::vector<int> eligible;
  for (std::size_t i = 0; i < cloud.cloud.size(); ++i)
    if (neighbors_within(cloud, cloud.cloud[i].point, radius).size() >= want)
      eligible.push_back(static_cast<int>(i));
  if (eligible.empty())
    throw InsufficientSamplesError("verify_orbit_manifold: no point has enough neighbors");

  // Farthest-point selection of up to 32 centers, seeded at the base point.
  std::vector<int> chosen;
  std::vector<double> dist(eligible.size(), std::numeric_limits<double>::infinity());
  int first = eligible[0];
  for (int i : eligible)
    if ((cloud.cloud[i].point - cloud.base_point).norm() <
        (cloud.cloud[first].point - cloud.base_point).norm())
      first = i;
  chosen.push_back(first);
  while (chosen.size() < 32 && chosen.size() < eligible.size()) {
    for (std::size_t k = 0; k < eligible.size(); ++k)
      dist[k] = std::min(dist[k], (cloud.cloud[eligible[k]].point -
                                   cloud.cloud[chosen.back()].point)
                                      .norm());
    std::size_t best = 0;
    for (std::size_t k = 1; k < eligible.size(); ++k)
      if (dist[k] > dist[best]) best = k;
    if (!(dist[best] > 0)) break; // everything already covered (duplicates)
    chosen.push_back(eligible[best]);
  }

  for (int i : chosen)
    report.per_point.push_back(local_estimate(cloud, cloud.cloud[i].point, radius, sv_cutoff));

  std::map<int, int> votes;
  for (const auto& loc : report.per_point) ++votes[loc.local_dim];
  int mode = report.per_point.front().local_dim;
  for (const auto& [d, c] : votes)
    if (c > votes[mode]) mode = d;
  bool consistent = true;
  for (std::size_t i = 0; i < report.per_point.size(); ++i)
    if (report.per_point[i].local_dim != mode) {
      consistent = false;
      report.inconsistent_points.push_back(static_cast<int>(i));
    }
  if (consistent) report.global_dim = mode;
  return report;
}

} // namespace orbitkit
