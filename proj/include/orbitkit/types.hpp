#ifndef ORBITKIT_TYPES_HPP
#define ORBITKIT_TYPES_HPP

#include <Eigen/Core>

namespace orbitkit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// States with any coordinate beyond this bound are treated as numerically
/// blown up rather than as finite-time subset escapes.
inline constexpr double kBlowUpBound = 1e12;

} // namespace orbitkit

#endif
