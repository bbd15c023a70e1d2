#include "orbitkit/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include <Eigen/Dense>

#include "orbitkit/errors.hpp"

namespace orbitkit {

double field_invariance_residual(const VectorField& X, const GroupAction& action,
                                 const std::vector<Vec>& samples) {
  if (X.dim() != action.dim())
    throw std::invalid_argument("field_invariance_residual: dimension mismatch");
  double r = 0.0;
  const auto elems = action.sample_elements();
  for (const Vec& x : samples) {
    const Vec Xx = X(x);
    for (const Mat& g : elems) r = std::max(r, (g * Xx - X(g * x)).norm());
  }
  return r;
}

namespace {

// Multi-indices in k variables with total degree <= bound, graded lex order.
std::vector<std::vector<int>> multi_indices(int k, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  for (int total = 0; total <= bound; ++total) {
    // enumerate compositions of `total` into k parts, lexicographically
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == k - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
      }
      for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        rec(pos + 1, remaining - e);
      }
    };
    rec(0, total);
  }
  return out;
}

// Coefficient vector of p over a shared monomial index.
void accumulate_support(const Polynomial& p, std::map<std::vector<int>, int>& index) {
  for (const auto& t : p.terms()) index.emplace(t.exps, 0);
}

Eigen::VectorXd coeff_vector(const Polynomial& p, const std::map<std::vector<int>, int>& index) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<int>(index.size()));
  for (const auto& t : p.terms()) v[index.at(t.exps)] = t.coeff;
  return v;
}

// Try to express each component of W (polynomials in the upstairs variables)
// as a polynomial of degree <= bound in the components of rho. Exact
// coefficient matching, attempted degree by degree so the lowest-degree
// representation wins.
std::optional<std::vector<Polynomial>> match_in_rho_coordinates(
    const std::vector<Polynomial>& W, const std::vector<Polynomial>& rho_comps, int bound,
    double match_tol, double prune_tol) {
  const int k = static_cast<int>(rho_comps.size());

  for (int deg = 0; deg <= bound; ++deg) {
    const auto alphas = multi_indices(k, deg);
    // Expand each candidate monomial rho^alpha in the upstairs variables.
    std::vector<Polynomial> expansions;
    expansions.reserve(alphas.size());
    for (const auto& alpha : alphas) {
      Polynomial m = Polynomial::constant(rho_comps[0].nvars(), 1.0);
      for (int j = 0; j < k; ++j)
        if (alpha[j] > 0) m = m * rho_comps[j].pow(alpha[j]);
      expansions.push_back(std::move(m));
    }

    std::map<std::vector<int>, int> support;
    for (const auto& e : expansions) accumulate_support(e, support);
    for (const auto& w : W) accumulate_support(w, support);
    int row = 0;
    for (auto& kv : support) kv.second = row++;

    Mat A(row, static_cast<int>(expansions.size()));
    for (std::size_t c = 0; c < expansions.size(); ++c)
      A.col(static_cast<int>(c)) = coeff_vector(expansions[c], support);

    Eigen::ColPivHouseholderQR<Mat> qr(A);
    std::vector<Polynomial> result;
    bool all_matched = true;
    for (const auto& w : W) {
      const Eigen::VectorXd b = coeff_vector(w, support);
      const Eigen::VectorXd c = qr.solve(b);
      const double resid = (A * c - b).lpNorm<Eigen::Infinity>();
      if (resid > match_tol * std::max(1.0, b.lpNorm<Eigen::Infinity>())) {
        all_matched = false;
        break;
      }
      std::vector<Term> terms;
      for (std::size_t a = 0; a < alphas.size(); ++a)
        terms.push_back(Term{c[static_cast<int>(a)], alphas[a]});
      result.push_back(Polynomial(k, std::move(terms)).pruned(prune_tol));
    }
    if (all_matched) return result;
  }
  return std::nullopt;
}

std::string point_to_string(const Vec& x) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

} // namespace

ReducedVectorField reduce_field(const VectorField& X, const InvariantMap& inv,
                                const std::vector<Vec>& witness_samples,
                                const ReduceOptions& opts) {
  if (X.dim() != inv.upstairs_dim())
    throw std::invalid_argument("reduce_field: field and invariant map dimension mismatch");
  if (witness_samples.empty())
    throw std::invalid_argument("reduce_field: witness samples required");

  const double inv_res = field_invariance_residual(X, inv.action(), witness_samples);
  if (inv_res > opts.invariance_tol)
    throw NotInvariantError("reduce_field: field '" + X.label +
                            "' is not invariant (residual " + std::to_string(inv_res) + ")");

  // Pushed values at the witnesses, and the orbit-consistency check: points
  // with equal rho must push to equal values.
  std::vector<Vec> rho_w, push_w;
  for (const Vec& x : witness_samples) {
    rho_w.push_back(inv.rho()(x));
    push_w.push_back(inv.rho().jacobian(x) * X(x));
  }
  for (std::size_t i = 0; i < rho_w.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((rho_w[i] - rho_w[j]).norm() <= 1e-8 && (push_w[i] - push_w[j]).norm() > 1e-5)
        throw NotInvariantError("reduce_field: pushforward not well defined at witnesses " +
                                point_to_string(witness_samples[j]) + " and " +
                                point_to_string(witness_samples[i]));

  const int k = inv.downstairs_dim();
  const SubsetModel& quotient = inv.image().model;

  if (X.map.is_polynomial()) {
    // W = Drho . X, componentwise symbolic.
    const auto& rho_comps = inv.rho().outputs();
    const auto& Xc = X.map.outputs();
    const int n = X.dim();
    std::vector<Polynomial> W;
    for (int i = 0; i < k; ++i) {
      Polynomial wi(n);
      for (int j = 0; j < n; ++j) wi = wi + rho_comps[i].derivative(j) * Xc[j];
      W.push_back(std::move(wi));
    }
    auto matched = match_in_rho_coordinates(W, rho_comps, opts.degree_bound, opts.coeff_match_tol,
                                            opts.prune_tol);
    if (matched) {
      VectorField down(SmoothMap::polynomial(std::move(*matched)), quotient, X.label);
      // The defining property Xbar(rho(x)) = Drho(x) X(x) must hold at every
      // witness; a violation means the coefficient match was spurious.
      for (std::size_t i = 0; i < rho_w.size(); ++i) {
        const double r = (down(rho_w[i]) - push_w[i]).norm();
        if (r > 1e-7 * std::max(1.0, push_w[i].norm()))
          throw std::runtime_error("reduce_field: closed form fails at a witness (residual " +
                                   std::to_string(r) + ")");
      }
      return ReducedVectorField{std::move(down), X.label, true};
    }
  }

  // Numeric-only fallback: inverse-distance interpolation over the witness
  // table in rho-coordinates.
  auto table_rho = rho_w;
  auto table_val = push_w;
  auto fn = [table_rho, table_val](const Vec& s) -> Vec {
    double wsum = 0.0;
    Vec acc = Vec::Zero(table_val[0].size());
    for (std::size_t i = 0; i < table_rho.size(); ++i) {
      const double d2 = (s - table_rho[i]).squaredNorm();
      if (d2 <= 1e-24) return table_val[i];
      const double w = 1.0 / d2;
      acc += w * table_val[i];
      wsum += w;
    }
    return acc / wsum;
  };
  VectorField down(SmoothMap::blackbox(k, k, std::move(fn)), quotient, X.label);
  return ReducedVectorField{std::move(down), X.label, false};
}

CommutationResult reduction_commutation_residual(const VectorField& X, const InvariantMap& inv,
                                                 const ReducedVectorField& reduced, const Vec& x0,
                                                 const std::vector<double>& t_grid,
                                                 const IntegratorConfig& cfg) {
  CommutationResult out;
  const Vec s0 = inv.rho()(x0);
  for (double t : t_grid) {
    const IntegralCurve up = integrate(X, x0, t, cfg);
    const IntegralCurve down = integrate(reduced.field, s0, t, cfg);
    if (!up.reached(t) || !down.reached(t)) {
      ++out.points_skipped;
      continue;
    }
    const double r = (inv.rho()(up.endpoint(t)) - down.endpoint(t)).norm();
    out.residual = std::max(out.residual, r);
    ++out.points_used;
  }
  return out;
}

Vec horizontal_lift(const ReducedVectorField& xbar, const InvariantMap& inv, const Vec& x) {
  if (x.size() != inv.upstairs_dim())
    throw std::invalid_argument("horizontal_lift: dimension mismatch");
  if (!inv.action().is_free_at(x))
    throw NonFreePointError("horizontal_lift: action is not locally free at " + point_to_string(x));

  const int n = inv.upstairs_dim();
  const Mat J = inv.rho().jacobian(x); // k x n
  const Vec b = xbar.field(inv.rho()(x));
  const auto tangents = inv.action().generator_vectors_at(x);
  const int d = static_cast<int>(tangents.size());

  Mat M(J.rows() + d, n);
  M.topRows(J.rows()) = J;
  for (int i = 0; i < d; ++i) M.row(J.rows() + i) = tangents[i].transpose();
  Vec rhs = Vec::Zero(M.rows());
  rhs.head(J.rows()) = b;

  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-12 * std::max(1.0, smax)) ++rank;
  if (rank < n)
    throw NonFreePointError("horizontal_lift: orbit directions rank-deficient at " +
                            point_to_string(x) + ", lift not unique");

  const Vec v = svd.solve(rhs);
  const double scale = std::max(1.0, b.norm());
  if ((J * v - b).norm() > 1e-10 * scale)
    throw std::runtime_error("horizontal_lift: defining system unsolvable at " + point_to_string(x));
  for (const auto& tg : tangents)
    if (std::fabs(tg.dot(v)) > 1e-10 * scale * std::max(1.0, tg.norm()))
      throw std::runtime_error("horizontal_lift: orthogonality unattained at " + point_to_string(x));
  return v;
}

} // namespace orbitkit
