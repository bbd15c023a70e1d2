#ifndef ORBITKIT_CATALOG_HPP
#define ORBITKIT_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitkit/invariant_map.hpp"

namespace orbitkit {

/// Built-in validated (action, invariant map) pairs:
///   z2-line   Z2 on R by x -> -x; rho = x^2; image s >= 0.
///   so2-plane SO(2) on R^2; rho = x^2 + y^2; image s >= 0.
///   z2-plane  Z2 on R^2 by -I; rho = (x^2, xy, y^2); image the cone
///             s1 s3 - s2^2 = 0, s1 >= 0, s3 >= 0 (singular vertex at 0).
std::pair<GroupAction, InvariantMap> catalog_action(const std::string& name);

std::vector<std::string> catalog_action_names();

} // namespace orbitkit

#endif
