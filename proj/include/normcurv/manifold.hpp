#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "normcurv/curves.hpp"
#include "normcurv/veronese.hpp"

namespace normcurv {

struct SingularPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProjectionDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Quadratic map c: R^D -> R^C, c_k(x) = x^T A_k x + L_k x + b_k.
/// Its Hessian D^2c[u, v]_k = 2 u^T A_k v does not depend on x.
class QuadraticConstraint {
 public:
  QuadraticConstraint(std::vector<Eigen::MatrixXd> quadratic, Eigen::MatrixXd linear, Eigen::VectorXd constant);

  std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(linear_.cols()); }
  std::size_t constraint_count() const noexcept { return static_cast<std::size_t>(linear_.rows()); }

  Eigen::VectorXd value(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;
  Eigen::VectorXd hessian(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

 private:
  std::vector<Eigen::MatrixXd> quadratic_;
  Eigen::MatrixXd stacked_;  // the A_k stacked vertically, (C*D) x D
  Eigen::MatrixXd linear_;
  Eigen::VectorXd constant_;
};

class ImplicitManifold;

/// Tangent/normal splitting of R^D at one point, from an SVD of the
/// constraint Jacobian with singular values below rank_tol * sigma_max
/// treated as zero.
class LocalFrame {
 public:
  LocalFrame(const ImplicitManifold& m, const Eigen::VectorXd& point);

  const Eigen::VectorXd& point() const noexcept { return point_; }
  /// Orthonormal tangent basis, one vector per column.
  const Eigen::MatrixXd& tangent_basis() const noexcept { return tangent_; }
  std::size_t rank() const noexcept { return rank_; }

  /// Minimum-norm solution of J w = rhs (lies in the normal space).
  Eigen::VectorXd solve_normal(const Eigen::VectorXd& rhs) const;
  Eigen::VectorXd project_tangent(const Eigen::VectorXd& v) const;

  Eigen::VectorXd second_fundamental_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  double normal_curvature(const Eigen::VectorXd& u) const;
  double sectional_curvature(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  /// Trace of II over the tangent basis.
  Eigen::VectorXd mean_curvature_vector() const;
  /// Random unit tangent vector, uniformly distributed on the tangent sphere.
  Eigen::VectorXd random_unit_tangent(std::mt19937_64& rng) const;

 private:
  void require_tangent(const Eigen::VectorXd& u) const;

  const ImplicitManifold* manifold_;
  Eigen::VectorXd point_;
  Eigen::MatrixXd jacobian_;
  Eigen::MatrixXd tangent_;
  Eigen::MatrixXd pinv_;  // D x C pseudo-inverse of the Jacobian
  std::size_t rank_ = 0;
};

/// Submanifold {x : c(x) = 0} of R^D for a quadratic constraint map with
/// possibly redundant components.
class ImplicitManifold {
 public:
  ImplicitManifold(QuadraticConstraint constraint, Eigen::VectorXd base_point, double rank_tol = 1e-8);

  std::size_t ambient_dim() const noexcept { return constraint_.ambient_dim(); }
  std::size_t intrinsic_dim() const noexcept { return intrinsic_dim_; }
  double rank_tol() const noexcept { return rank_tol_; }
  const Eigen::VectorXd& base_point() const noexcept { return base_point_; }
  const QuadraticConstraint& constraint() const noexcept { return constraint_; }

  LocalFrame frame_at(const Eigen::VectorXd& p) const { return LocalFrame(*this, p); }

 private:
  QuadraticConstraint constraint_;
  Eigen::VectorXd base_point_;
  double rank_tol_;
  std::size_t intrinsic_dim_ = 0;
};

/// The scaled Veronese image as {X o X = X, tr X = 1} written in the ambient
/// coordinates of `embed_matrix`.
ImplicitManifold projection_variety(const VeroneseSpace& space);
/// {x in R^dim : |x|^2 = radius^2}
ImplicitManifold round_sphere(std::size_t dim, double radius);
/// {x : normals x = offsets}, a flat affine subspace.
ImplicitManifold affine_subspace(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                                 const Eigen::VectorXd& base_point);

// Operations at a point; each builds a LocalFrame. Use frame_at() directly
// when querying many directions at the same point.
Eigen::MatrixXd tangent_basis(const ImplicitManifold& m, const Eigen::VectorXd& p);
Eigen::VectorXd second_fundamental_form(const ImplicitManifold& m, const Eigen::VectorXd& p,
                                        const Eigen::VectorXd& u, const Eigen::VectorXd& v);
double normal_curvature(const ImplicitManifold& m, const Eigen::VectorXd& p, const Eigen::VectorXd& u);
double sectional_curvature(const ImplicitManifold& m, const Eigen::VectorXd& p, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v);

struct GeodesicState {
  Eigen::VectorXd position;
  Eigen::VectorXd velocity;
  double arc_length = 0.0;
};

struct GeodesicRun {
  DiscreteCurve curve;
  GeodesicState end;
  double max_constraint_residual = 0.0;
  double max_speed_deviation = 0.0;
};

/// Integrates gamma'' = II(gamma', gamma') with classical RK4, projecting the
/// position back onto c = 0 (Gauss-Newton, at most 5 iterations) and the
/// velocity onto the tangent space after every step. The step is shrunk
/// slightly so that an integer number of steps covers `length`.
GeodesicRun integrate_geodesic(const ImplicitManifold& m, const GeodesicState& start, double length, double step);

/// Gauss-Newton projection of x onto c = 0.
Eigen::VectorXd project_to_manifold(const ImplicitManifold& m, const Eigen::VectorXd& x);

}  // namespace normcurv
