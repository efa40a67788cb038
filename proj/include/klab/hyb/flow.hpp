#pragma once

#include <Eigen/Dense>

namespace klab::hyb {

/// Matrix exponential by scaling and squaring over a truncated series with
/// relative tolerance 1e-12. For nilpotent matrices the series terminates
/// exactly, so polynomial flows (constant acceleration, clocks) are exact.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

/// Value at time t >= 0 of the affine flow x' = a x + b, x(0) = x0, through
/// the exponential of the augmented (n+1) x (n+1) system.
Eigen::VectorXd solve_flow(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& x0, double t);

}  // namespace klab::hyb
