#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace normcurv {

struct Ball {
  Eigen::VectorXd center;
  /// Max distance from `center` to any input point, so the ball always
  /// encloses the input.
  double radius = 0.0;
  /// Dual certificate: the true minimal radius lies in [lower_bound, radius].
  double lower_bound = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Minimal enclosing ball to relative accuracy `tol`: on convergence
/// radius <= (1 + tol) * lower_bound <= (1 + tol) * optimum.
///
/// Primal active-set method on the dual simplex. A small support set is
/// kept; its circumcenter in the affine hull is computed exactly, points
/// with negative barycentric weight are dropped, and the farthest input
/// point is added until every point lies within (1 + tol) of the support
/// radius. Hitting `max_iterations` is reported through `converged`, not
/// thrown.
Ball min_enclosing_ball(const std::vector<Eigen::VectorXd>& points, double tol = 1e-6,
                        std::size_t max_iterations = 100000);

}  // namespace normcurv
