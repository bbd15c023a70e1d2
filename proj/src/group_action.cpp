#include "orbitkit/group_action.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace orbitkit {

namespace {

constexpr double kGroupTol = 1e-10;

bool contains_matrix(const std::vector<Mat>& elems, const Mat& m, double tol) {
  for (const auto& g : elems)
    if ((g - m).lpNorm<Eigen::Infinity>() <= tol) return true;
  return false;
}

} // namespace

GroupAction GroupAction::finite(std::vector<Mat> elements) {
  if (elements.empty()) throw std::invalid_argument("group action: empty element list");
  const int n = static_cast<int>(elements[0].rows());
  for (const auto& g : elements)
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("group action: elements must be square matrices of equal size");

  const Mat id = Mat::Identity(n, n);
  if (!contains_matrix(elements, id, kGroupTol))
    throw std::invalid_argument("group action: identity element missing");
  for (const auto& g : elements) {
    for (const auto& h : elements)
      if (!contains_matrix(elements, g * h, kGroupTol))
        throw std::invalid_argument("group action: element list not closed under products");
    bool has_inverse = false;
    for (const auto& h : elements)
      if ((g * h - id).lpNorm<Eigen::Infinity>() <= kGroupTol) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw std::invalid_argument("group action: element without inverse");
  }

  GroupAction a;
  a.kind_ = Kind::Finite;
  a.dim_ = n;
  a.elements_ = std::move(elements);
  return a;
}

GroupAction GroupAction::one_parameter(Mat generator, std::vector<double> sample_params) {
  if (generator.rows() != generator.cols() || generator.rows() < 1)
    throw std::invalid_argument("group action: generator must be square");
  GroupAction a;
  a.kind_ = Kind::OneParameter;
  a.dim_ = static_cast<int>(generator.rows());
  a.generator_ = std::move(generator);
  if (sample_params.empty()) {
    // 8 parameters spread over [-pi, pi].
    for (int k = 0; k < 8; ++k)
      sample_params.push_back(-M_PI + 2.0 * M_PI * static_cast<double>(k) / 7.0);
  }
  a.sample_params_ = std::move(sample_params);

  const Mat id = Mat::Identity(a.dim_, a.dim_);
  if ((a.element(0.0) - id).lpNorm<Eigen::Infinity>() > 1e-12)
    throw std::invalid_argument("group action: element(0) is not the identity");
  for (double s : a.sample_params_)
    for (double t : a.sample_params_) {
      const Mat lhs = a.element(s) * a.element(t);
      const Mat rhs = a.element(s + t);
      if ((lhs - rhs).lpNorm<Eigen::Infinity>() > 1e-9)
        throw std::invalid_argument("group action: one-parameter property violated on samples");
    }
  return a;
}

const std::vector<Mat>& GroupAction::elements() const {
  if (kind_ != Kind::Finite) throw std::logic_error("group action: not a finite group");
  return elements_;
}

Mat GroupAction::element(double t) const {
  if (kind_ != Kind::OneParameter) throw std::logic_error("group action: not a one-parameter group");
  return (t * generator_).exp();
}

const Mat& GroupAction::generator() const {
  if (kind_ != Kind::OneParameter) throw std::logic_error("group action: not a one-parameter group");
  return generator_;
}

std::vector<Mat> GroupAction::sample_elements() const {
  if (kind_ == Kind::Finite) return elements_;
  std::vector<Mat> out;
  out.reserve(sample_params_.size());
  for (double t : sample_params_) out.push_back(element(t));
  return out;
}

std::vector<Vec> GroupAction::generator_vectors_at(const Vec& x) const {
  if (kind_ == Kind::Finite) return {};
  return {Vec(generator_ * x)};
}

bool GroupAction::is_free_at(const Vec& x, double tol) const {
  if (x.size() != dim_) throw std::invalid_argument("group action: dimension mismatch");
  if (kind_ == Kind::OneParameter) return (generator_ * x).norm() > tol;
  const Mat id = Mat::Identity(dim_, dim_);
  for (const auto& g : elements_) {
    if ((g - id).lpNorm<Eigen::Infinity>() <= kGroupTol) continue;
    if ((g * x - x).norm() <= tol) return false;
  }
  return true;
}

} // namespace orbitkit
