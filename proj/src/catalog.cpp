#include "orbitkit/catalog.hpp"

#include "orbitkit/errors.hpp"
#include "orbitkit/polynomial.hpp"

namespace orbitkit {

namespace {

std::vector<Vec> default_grid(int dim) {
  const std::vector<double> axis{-1.5, -0.5, 0.0, 0.75, 1.5};
  std::vector<Vec> pts;
  if (dim == 1) {
    for (double a : axis) {
      Vec v(1);
      v << a;
      pts.push_back(v);
    }
  } else {
    for (double a : axis)
      for (double b : axis) {
        Vec v(2);
        v << a, b;
        pts.push_back(v);
      }
  }
  return pts;
}

std::pair<GroupAction, InvariantMap> make_z2_line() {
  GroupAction action = GroupAction::finite({Mat::Identity(1, 1), -Mat::Identity(1, 1)});
  // rho = x^2
  SmoothMap rho = SmoothMap::scalar(Polynomial(1, {Term{1.0, {2}}}));
  SubsetModel image(1, {}, {SmoothMap::scalar(Polynomial::variable(1, 0))});
  return {action, InvariantMap(rho, action, QuotientModel{image})};
}

std::pair<GroupAction, InvariantMap> make_so2_plane() {
  Mat gen(2, 2);
  gen << 0, -1, 1, 0;
  GroupAction action = GroupAction::one_parameter(gen);
  // rho = x^2 + y^2
  SmoothMap rho = SmoothMap::scalar(Polynomial(2, {Term{1.0, {2, 0}}, Term{1.0, {0, 2}}}));
  SubsetModel image(1, {}, {SmoothMap::scalar(Polynomial::variable(1, 0))});
  return {action, InvariantMap(rho, action, QuotientModel{image})};
}

std::pair<GroupAction, InvariantMap> make_z2_plane() {
  GroupAction action = GroupAction::finite({Mat::Identity(2, 2), -Mat::Identity(2, 2)});
  // rho = (x^2, x y, y^2); image is the cone s0 s2 = s1^2, s0, s2 >= 0.
  std::vector<Polynomial> comps{Polynomial(2, {Term{1.0, {2, 0}}}),
                                Polynomial(2, {Term{1.0, {1, 1}}}),
                                Polynomial(2, {Term{1.0, {0, 2}}})};
  SmoothMap rho = SmoothMap::polynomial(comps);
  Polynomial cone(3, {Term{1.0, {1, 0, 1}}, Term{-1.0, {0, 2, 0}}});
  SubsetModel image(3, {SmoothMap::scalar(cone)},
                    {SmoothMap::scalar(Polynomial::variable(3, 0)),
                     SmoothMap::scalar(Polynomial::variable(3, 2))});
  return {action, InvariantMap(rho, action, QuotientModel{image})};
}

} // namespace

std::pair<GroupAction, InvariantMap> catalog_action(const std::string& name) {
  std::pair<GroupAction, InvariantMap> pair = [&] {
    if (name == "z2-line") return make_z2_line();
    if (name == "so2-plane") return make_so2_plane();
    if (name == "z2-plane") return make_z2_plane();
    throw InputError("catalog_action: unknown name '" + name + "'");
  }();
  pair.second.validate(default_grid(pair.first.dim()));
  return pair;
}

std::vector<std::string> catalog_action_names() { return {"z2-line", "so2-plane", "z2-plane"}; }

} // namespace orbitkit
