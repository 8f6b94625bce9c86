#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace normcurv {

/// Flat n-torus embedded by theta -> (+)_j w_j (cos<k_j, theta>, sin<k_j, theta>).
///
/// The induced metric is g = sum_j w_j^2 k_j k_j^T and the image lies on the
/// sphere of radius R = sqrt(sum_j w_j^2).
struct TorusEmbedding {
  int n = 0;
  std::vector<Eigen::VectorXi> freqs;
  std::vector<double> weights;

  /// Throws std::invalid_argument unless frequencies are nonzero, pairwise
  /// non-parallel, weights positive and the metric positive definite.
  void validate() const;
  Eigen::MatrixXd metric() const;
  double radius() const;
  /// Point in R^{2J}, J = number of frequencies.
  Eigen::VectorXd point(const Eigen::VectorXd& theta) const;
  TorusEmbedding with_weights(std::vector<double> w) const;
};

/// Frequencies {e_i}: the product torus.
std::vector<Eigen::VectorXi> coordinate_family(int n);
/// Frequencies {e_i} together with {e_i + e_j : i < j}.
std::vector<Eigen::VectorXi> coordinate_pair_family(int n);
TorusEmbedding equal_weight_torus(int n, std::vector<Eigen::VectorXi> freqs);

/// Target constant sqrt(3n / (n + 2)).
double torus_curvature_bound(int n);

/// Curvature of the geodesic with direction u (rescaled so that u^T g u = 1):
/// sqrt(sum_j w_j^2 <k_j, u>^4).
double torus_normal_curvature(const TorusEmbedding& t, const Eigen::VectorXd& u);

struct WorstDirection {
  Eigen::VectorXd direction;  // Euclidean unit vector in R^n
  double max_value = 0.0;     // max of kappa(u) * R
  std::size_t samples = 0;
  /// Covering radius (radians) of the sample grid on the direction sphere.
  double grid_resolution = 0.0;
  /// Largest tangential gradient of kappa * R seen on the grid.
  double lipschitz_estimate = 0.0;
  /// max_value + lipschitz_estimate * grid_resolution.
  double upper_bound = 0.0;
  /// True when the grid is deterministic (n <= 3) so the bound applies.
  bool certified = false;
};

struct WorstDirectionOptions {
  std::size_t grid_points = 2048;
  std::size_t polish_starts = 6;
  std::uint64_t seed = 0;  // only used for random sampling when n > 3
};

WorstDirection torus_worst_direction(const TorusEmbedding& t, const WorstDirectionOptions& opts = {});

struct OptimizeOptions {
  std::size_t budget = 10000;  // objective evaluations
  double tolerance = 1e-11;    // simplex value spread at convergence
  std::uint64_t seed = 0;
  WorstDirectionOptions inner{256, 4, 0};
};

struct OptimizeResult {
  std::vector<double> weights;  // normalized to sum w^2 = 1
  double value = 0.0;           // achieved max kappa * R
  std::size_t evaluations = 0;
  std::size_t restarts = 0;
  bool converged = false;
  std::vector<double> history;  // best value after each restart round
};

/// Minimizes the worst-direction value of kappa * R over positive weights with
/// Nelder-Mead on log-weights and seeded restarts.
OptimizeResult optimize_weights(const std::vector<Eigen::VectorXi>& freqs, const std::vector<double>& initial,
                                const OptimizeOptions& opts = {});

/// Reads "k_1 ... k_n w" lines; '#' starts a comment.
TorusEmbedding read_torus_config(std::istream& in);

}  // namespace normcurv
