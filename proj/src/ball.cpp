#include "normcurv/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace normcurv {

namespace {

constexpr double kDependenceTol = 1e-10;

Eigen::Index farthest_from(const Eigen::MatrixXd& p, const Eigen::VectorXd& x) {
  Eigen::Index idx = 0;
  (p.colwise() - x).colwise().squaredNorm().maxCoeff(&idx);
  return idx;
}

// Moves weights from the current values toward `target` and stops at the
// first weight that reaches zero. Returns the index of that weight, or
// weight.size() when the full step was taken.
std::size_t ratio_step(std::vector<double>& weight, const Eigen::VectorXd& target) {
  double t = 1.0;
  std::size_t blocking = weight.size();
  for (std::size_t i = 0; i < weight.size(); ++i) {
    const double ti = target[static_cast<Eigen::Index>(i)];
    if (ti < 0.0) {
      const double s = weight[i] / (weight[i] - ti);
      if (s < t) {
        t = s;
        blocking = i;
      }
    }
  }
  for (std::size_t i = 0; i < weight.size(); ++i) weight[i] += t * (target[static_cast<Eigen::Index>(i)] - weight[i]);
  return blocking;
}

}  // namespace

Ball min_enclosing_ball(const std::vector<Eigen::VectorXd>& points, double tol, std::size_t max_iterations) {
  if (points.empty()) throw std::invalid_argument("min_enclosing_ball: empty point set");
  if (!(tol > 0.0)) throw std::invalid_argument("min_enclosing_ball: tolerance must be positive");
  const Eigen::Index dim = points.front().size();
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd p(dim, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (points[static_cast<std::size_t>(i)].size() != dim) {
      throw std::invalid_argument("min_enclosing_ball: points have different dimensions");
    }
    p.col(i) = points[static_cast<std::size_t>(i)];
  }

  Ball ball;
  const Eigen::Index alpha = farthest_from(p, p.col(0));
  const Eigen::Index beta = farthest_from(p, p.col(alpha));
  std::vector<Eigen::Index> support{alpha};
  std::vector<double> weight{1.0};
  if (beta != alpha) {
    support.push_back(beta);
    weight = {0.5, 0.5};
  }

  auto center_of = [&] {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
    for (std::size_t i = 0; i < support.size(); ++i) c += weight[i] * p.col(support[i]);
    return c;
  };
  auto drop = [&](std::size_t i) {
    support.erase(support.begin() + static_cast<std::ptrdiff_t>(i));
    weight.erase(weight.begin() + static_cast<std::ptrdiff_t>(i));
    double total = 0.0;
    for (double w : weight) total += w;
    for (double& w : weight) w /= total;
  };

  const double slack = (1.0 + tol) * (1.0 + tol);
  Eigen::VectorXd c = center_of();
  Eigen::VectorXd d = (p.colwise() - c).colwise().squaredNorm().transpose();
  double gamma = 0.0;

  for (; ball.iterations < max_iterations; ++ball.iterations) {
    const Eigen::Index m = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd q(dim, m);
    for (Eigen::Index i = 0; i < m; ++i) q.col(i) = p.col(support[static_cast<std::size_t>(i)]) - c;

    if (m > 1) {
      // An affine dependency sum delta_i q_i = 0, sum delta_i = 0 moves the
      // weights without moving the center; follow it until a point drops.
      Eigen::MatrixXd a(dim + 1, m);
      a.topRows(dim) = q;
      a.bottomRows(1).setOnes();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
      const Eigen::VectorXd& s = svd.singularValues();
      const double smallest = m > dim + 1 ? 0.0 : s[m - 1];
      if (smallest <= kDependenceTol * s[0]) {
        Eigen::VectorXd delta = svd.matrixV().col(m - 1);
        if (delta[m - 1] < 0.0) delta = -delta;  // grow the newest point
        double t = std::numeric_limits<double>::infinity();
        std::size_t blocking = weight.size();
        for (Eigen::Index i = 0; i < m; ++i) {
          if (delta[i] < 0.0) {
            const double ti = weight[static_cast<std::size_t>(i)] / -delta[i];
            if (ti < t) {
              t = ti;
              blocking = static_cast<std::size_t>(i);
            }
          }
        }
        if (blocking == weight.size()) break;  // no dependency direction; give up
        for (Eigen::Index i = 0; i < m; ++i) weight[static_cast<std::size_t>(i)] += t * delta[i];
        weight[blocking] = 0.0;
        drop(blocking);
        c = center_of();
        d = (p.colwise() - c).colwise().squaredNorm().transpose();
        continue;
      }
    }

    // Circumcenter of the support within its affine hull: stationarity of
    // sum u_i |q_i|^2 - |Q u|^2 under sum u_i = 1.
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    kkt.topLeftCorner(m, m) = 2.0 * q.transpose() * q;
    kkt.topRightCorner(m, 1).setOnes();
    kkt.bottomLeftCorner(1, m).setOnes();
    Eigen::VectorXd rhs(m + 1);
    rhs.head(m) = q.colwise().squaredNorm().transpose();
    rhs[m] = 1.0;
    const Eigen::VectorXd lambda = kkt.partialPivLu().solve(rhs).head(m);

    const std::size_t blocking = ratio_step(weight, lambda);
    const bool dropped = blocking < weight.size();
    if (dropped) drop(blocking);
    c = center_of();
    d = (p.colwise() - c).colwise().squaredNorm().transpose();
    if (dropped) continue;  // re-solve on the smaller support

    gamma = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) gamma += weight[i] * d[support[i]];
    Eigen::Index j = 0;
    const double dmax = d.maxCoeff(&j);
    if (dmax <= gamma * slack) {
      ball.converged = true;
      break;
    }
    if (std::find(support.begin(), support.end(), j) != support.end()) break;  // stalled by rounding
    support.push_back(j);
    weight.push_back(0.0);
  }

  gamma = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) gamma += weight[i] * d[support[i]];
  ball.center = c;
  ball.radius = std::sqrt(d.maxCoeff());
  ball.lower_bound = std::sqrt(std::max(gamma, 0.0));
  return ball;
}

}  // namespace normcurv
