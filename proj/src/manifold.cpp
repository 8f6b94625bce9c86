#include "normcurv/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace normcurv {

namespace {

constexpr double kBaseResidualTol = 1e-12;
constexpr double kOnManifoldTol = 1e-8;
constexpr double kProjectionTarget = 1e-13;
constexpr double kProjectionAccept = 1e-10;
constexpr int kProjectionIterations = 5;

struct Pseudoinverse {
  Eigen::MatrixXd pinv;
  Eigen::MatrixXd kernel;
  std::size_t rank = 0;
};

// With `fixed_rank` set, the decomposition is truncated to that rank and
// `rank` still reports the numerical rank. Off the manifold a redundant
// constraint system has larger rank; truncation keeps the normal space
// dimension of the nearby manifold.
Pseudoinverse decompose(const Eigen::MatrixXd& j, double rank_tol, std::size_t fixed_rank = 0) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = s.size() > 0 ? rank_tol * s[0] : 0.0;
  Pseudoinverse out;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff) ++out.rank;
  }
  if (fixed_rank > 0) out.rank = std::min(out.rank, fixed_rank);
  const Eigen::Index r = static_cast<Eigen::Index>(out.rank);
  const Eigen::MatrixXd& u = svd.matrixU();
  const Eigen::MatrixXd& v = svd.matrixV();
  out.pinv = v.leftCols(r) * s.head(r).cwiseInverse().asDiagonal() * u.leftCols(r).transpose();
  out.kernel = v.rightCols(v.cols() - r);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadraticConstraint

QuadraticConstraint::QuadraticConstraint(std::vector<Eigen::MatrixXd> quadratic, Eigen::MatrixXd linear,
                                         Eigen::VectorXd constant)
    : quadratic_(std::move(quadratic)), linear_(std::move(linear)), constant_(std::move(constant)) {
  const Eigen::Index c = linear_.rows();
  const Eigen::Index d = linear_.cols();
  if (constant_.size() != c || static_cast<Eigen::Index>(quadratic_.size()) != c) {
    throw std::invalid_argument("QuadraticConstraint: inconsistent component counts");
  }
  stacked_.resize(c * d, d);
  for (Eigen::Index k = 0; k < c; ++k) {
    const auto& a = quadratic_[static_cast<std::size_t>(k)];
    if (a.rows() != d || a.cols() != d) throw std::invalid_argument("QuadraticConstraint: bad quadratic block");
    stacked_.middleRows(k * d, d) = 0.5 * (a + a.transpose());
  }
}

Eigen::VectorXd QuadraticConstraint::value(const Eigen::VectorXd& x) const {
  const Eigen::Index d = linear_.cols();
  const Eigen::VectorXd ax = stacked_ * x;
  Eigen::VectorXd out = linear_ * x + constant_;
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] += x.dot(ax.segment(k * d, d));
  return out;
}

Eigen::MatrixXd QuadraticConstraint::jacobian(const Eigen::VectorXd& x) const {
  const Eigen::Index d = linear_.cols();
  const Eigen::VectorXd ax = stacked_ * x;
  Eigen::MatrixXd j = linear_;
  for (Eigen::Index k = 0; k < j.rows(); ++k) j.row(k) += 2.0 * ax.segment(k * d, d).transpose();
  return j;
}

Eigen::VectorXd QuadraticConstraint::hessian(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  const Eigen::Index d = linear_.cols();
  const Eigen::VectorXd av = stacked_ * v;
  Eigen::VectorXd out(linear_.rows());
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] = 2.0 * u.dot(av.segment(k * d, d));
  return out;
}

// ---------------------------------------------------------------------------
// ImplicitManifold

ImplicitManifold::ImplicitManifold(QuadraticConstraint constraint, Eigen::VectorXd base_point, double rank_tol)
    : constraint_(std::move(constraint)), base_point_(std::move(base_point)), rank_tol_(rank_tol) {
  if (static_cast<std::size_t>(base_point_.size()) != constraint_.ambient_dim()) {
    throw std::invalid_argument("ImplicitManifold: base point dimension mismatch");
  }
  const double residual = constraint_.value(base_point_).norm();
  if (residual > kBaseResidualTol) {
    throw std::invalid_argument("ImplicitManifold: base point violates the constraint (residual " +
                                std::to_string(residual) + ")");
  }
  const Pseudoinverse p = decompose(constraint_.jacobian(base_point_), rank_tol_);
  intrinsic_dim_ = constraint_.ambient_dim() - p.rank;
}

// ---------------------------------------------------------------------------
// LocalFrame

LocalFrame::LocalFrame(const ImplicitManifold& m, const Eigen::VectorXd& point)
    : manifold_(&m), point_(point) {
  if (static_cast<std::size_t>(point.size()) != m.ambient_dim()) {
    throw std::invalid_argument("LocalFrame: point dimension mismatch");
  }
  const double residual = m.constraint().value(point).norm();
  if (residual > kOnManifoldTol) {
    throw std::invalid_argument("LocalFrame: point is not on the manifold (residual " + std::to_string(residual) + ")");
  }
  jacobian_ = m.constraint().jacobian(point);
  Pseudoinverse p = decompose(jacobian_, m.rank_tol());
  rank_ = p.rank;
  if (rank_ != m.ambient_dim() - m.intrinsic_dim()) {
    throw SingularPointError("constraint rank " + std::to_string(rank_) + " differs from the base-point rank " +
                             std::to_string(m.ambient_dim() - m.intrinsic_dim()));
  }
  pinv_ = std::move(p.pinv);
  tangent_ = std::move(p.kernel);
}

Eigen::VectorXd LocalFrame::solve_normal(const Eigen::VectorXd& rhs) const { return pinv_ * rhs; }

Eigen::VectorXd LocalFrame::project_tangent(const Eigen::VectorXd& v) const {
  return tangent_ * (tangent_.transpose() * v);
}

void LocalFrame::require_tangent(const Eigen::VectorXd& u) const {
  if (static_cast<std::size_t>(u.size()) != manifold_->ambient_dim()) {
    throw std::invalid_argument("vector dimension does not match the ambient space");
  }
  const double off = (u - project_tangent(u)).norm();
  if (off > 1e-8 * std::max(1.0, u.norm())) {
    throw std::invalid_argument("vector is not tangent (normal component " + std::to_string(off) + ")");
  }
}

Eigen::VectorXd LocalFrame::second_fundamental_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  require_tangent(u);
  require_tangent(v);
  return -solve_normal(manifold_->constraint().hessian(u, v));
}

double LocalFrame::normal_curvature(const Eigen::VectorXd& u) const {
  const double len = u.norm();
  if (std::abs(len - 1.0) > 1e-9) throw std::invalid_argument("normal_curvature needs a unit tangent");
  return second_fundamental_form(u, u).norm();
}

double LocalFrame::sectional_curvature(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  if (std::abs(u.norm() - 1.0) > 1e-9 || std::abs(v.norm() - 1.0) > 1e-9 || std::abs(u.dot(v)) > 1e-9) {
    throw std::invalid_argument("sectional_curvature needs orthonormal tangents");
  }
  const Eigen::VectorXd uu = second_fundamental_form(u, u);
  const Eigen::VectorXd vv = second_fundamental_form(v, v);
  const Eigen::VectorXd uv = second_fundamental_form(u, v);
  return uu.dot(vv) - uv.squaredNorm();
}

Eigen::VectorXd LocalFrame::mean_curvature_vector() const {
  Eigen::VectorXd h = Eigen::VectorXd::Zero(point_.size());
  for (Eigen::Index i = 0; i < tangent_.cols(); ++i) {
    const Eigen::VectorXd e = tangent_.col(i);
    h += second_fundamental_form(e, e);
  }
  return h;
}

Eigen::VectorXd LocalFrame::random_unit_tangent(std::mt19937_64& rng) const {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd g(tangent_.cols());
  do {
    for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = normal(rng);
  } while (g.norm() < 1e-12);
  return (tangent_ * g).normalized();
}

// ---------------------------------------------------------------------------
// Builders

ImplicitManifold projection_variety(const VeroneseSpace& space) {
  const AlgebraTag tag = space.tag();
  const std::size_t m = space.matrix_size();
  const Eigen::Index d = static_cast<Eigen::Index>(space.ambient_dim());
  const double sqrt2 = std::sqrt(2.0);
  const double md = static_cast<double>(m);

  // With X = sqrt(2) U(y) + I/m:
  //   X o X - X = 2 U o U + (2 sqrt(2)/m - sqrt(2)) U + (1/m^2 - 1/m) I
  //   tr X - 1 = sqrt(2) tr U
  std::vector<HermitianMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) basis.push_back(unflatten(tag, m, Eigen::VectorXd::Unit(d, i)));

  std::vector<Eigen::MatrixXd> quad(static_cast<std::size_t>(d + 1), Eigen::MatrixXd::Zero(d, d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i; j < d; ++j) {
      const FlatVector f = flatten(jordan_product(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]));
      for (Eigen::Index k = 0; k < d; ++k) {
        quad[static_cast<std::size_t>(k)](i, j) = 2.0 * f[k];
        quad[static_cast<std::size_t>(k)](j, i) = 2.0 * f[k];
      }
    }
  }
  Eigen::MatrixXd lin(d + 1, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    lin.col(i).head(d) = (2.0 * sqrt2 / md - sqrt2) * flatten(basis[static_cast<std::size_t>(i)]);
    lin(d, i) = sqrt2 * basis[static_cast<std::size_t>(i)].trace();
  }
  Eigen::VectorXd constant = Eigen::VectorXd::Zero(d + 1);
  constant.head(d) = flatten(HermitianMatrix::identity(tag, m) * (1.0 / (md * md) - 1.0 / md));

  return ImplicitManifold(QuadraticConstraint(std::move(quad), std::move(lin), std::move(constant)), base_point(space));
}

ImplicitManifold round_sphere(std::size_t dim, double radius) {
  if (dim < 2 || !(radius > 0.0)) throw std::invalid_argument("round_sphere: bad arguments");
  const Eigen::Index d = static_cast<Eigen::Index>(dim);
  std::vector<Eigen::MatrixXd> quad{Eigen::MatrixXd::Identity(d, d)};
  Eigen::VectorXd constant(1);
  constant[0] = -radius * radius;
  return ImplicitManifold(QuadraticConstraint(std::move(quad), Eigen::MatrixXd::Zero(1, d), std::move(constant)),
                          radius * Eigen::VectorXd::Unit(d, 0));
}

ImplicitManifold affine_subspace(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                                 const Eigen::VectorXd& base_point) {
  const Eigen::Index d = normals.cols();
  std::vector<Eigen::MatrixXd> quad(static_cast<std::size_t>(normals.rows()), Eigen::MatrixXd::Zero(d, d));
  return ImplicitManifold(QuadraticConstraint(std::move(quad), normals, -offsets), base_point);
}

Eigen::MatrixXd tangent_basis(const ImplicitManifold& m, const Eigen::VectorXd& p) {
  return m.frame_at(p).tangent_basis();
}

Eigen::VectorXd second_fundamental_form(const ImplicitManifold& m, const Eigen::VectorXd& p,
                                        const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return m.frame_at(p).second_fundamental_form(u, v);
}

double normal_curvature(const ImplicitManifold& m, const Eigen::VectorXd& p, const Eigen::VectorXd& u) {
  return m.frame_at(p).normal_curvature(u);
}

double sectional_curvature(const ImplicitManifold& m, const Eigen::VectorXd& p, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v) {
  return m.frame_at(p).sectional_curvature(u, v);
}

// ---------------------------------------------------------------------------
// Geodesics

namespace {

class GeodesicStepper {
 public:
  explicit GeodesicStepper(const ImplicitManifold& m) : m_(m) {}

  Pseudoinverse checked(const Eigen::VectorXd& x) const {
    const std::size_t codim = m_.ambient_dim() - m_.intrinsic_dim();
    Pseudoinverse p = decompose(m_.constraint().jacobian(x), m_.rank_tol(), codim);
    if (p.rank != codim) {
      throw SingularPointError("singular point encountered during geodesic integration");
    }
    return p;
  }

  Eigen::VectorXd acceleration(const Eigen::MatrixXd& pinv, const Eigen::VectorXd& v) const {
    return -pinv * m_.constraint().hessian(v, v);
  }

  // Returns the projected point and its decomposition.
  std::pair<Eigen::VectorXd, Pseudoinverse> project(Eigen::VectorXd x) const {
    Pseudoinverse p = checked(x);
    for (int it = 0; it < kProjectionIterations; ++it) {
      const Eigen::VectorXd r = m_.constraint().value(x);
      if (r.norm() <= kProjectionTarget) break;
      x -= p.pinv * r;
      p = checked(x);
    }
    const double residual = m_.constraint().value(x).norm();
    if (residual > kProjectionAccept) {
      throw ProjectionDivergence("projection onto the constraint set did not converge (residual " +
                                 std::to_string(residual) + ")");
    }
    return {std::move(x), std::move(p)};
  }

 private:
  const ImplicitManifold& m_;
};

}  // namespace

Eigen::VectorXd project_to_manifold(const ImplicitManifold& m, const Eigen::VectorXd& x) {
  return GeodesicStepper(m).project(x).first;
}

GeodesicRun integrate_geodesic(const ImplicitManifold& m, const GeodesicState& start, double length, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("integrate_geodesic: step must be positive");
  if (!(length >= 0.0)) throw std::invalid_argument("integrate_geodesic: length must be non-negative");
  if (static_cast<std::size_t>(start.position.size()) != m.ambient_dim() ||
      start.velocity.size() != start.position.size()) {
    throw std::invalid_argument("integrate_geodesic: state dimension mismatch");
  }
  if (std::abs(start.velocity.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("integrate_geodesic: initial velocity must be a unit vector");
  }

  const GeodesicStepper stepper(m);
  GeodesicRun run;
  const std::size_t steps = length == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(length / step - 1e-9));
  const double h = steps == 0 ? step : length / static_cast<double>(steps);
  run.curve.nominal_step = h;
  run.curve.vertices.reserve(steps + 1);

  auto [x, frame] = stepper.project(start.position);
  Eigen::VectorXd v = frame.kernel * (frame.kernel.transpose() * start.velocity);
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("integrate_geodesic: initial velocity is not tangent");
  }
  v.normalize();
  run.curve.vertices.push_back(x);
  run.max_constraint_residual = m.constraint().value(x).norm();

  for (std::size_t i = 0; i < steps; ++i) {
    const Eigen::VectorXd k1x = v;
    const Eigen::VectorXd k1v = stepper.acceleration(frame.pinv, v);
    const Eigen::VectorXd x2 = x + 0.5 * h * k1x;
    const Eigen::VectorXd k2x = v + 0.5 * h * k1v;
    const Eigen::VectorXd k2v = stepper.acceleration(stepper.checked(x2).pinv, k2x);
    const Eigen::VectorXd x3 = x + 0.5 * h * k2x;
    const Eigen::VectorXd k3x = v + 0.5 * h * k2v;
    const Eigen::VectorXd k3v = stepper.acceleration(stepper.checked(x3).pinv, k3x);
    const Eigen::VectorXd x4 = x + h * k3x;
    const Eigen::VectorXd k4x = v + h * k3v;
    const Eigen::VectorXd k4v = stepper.acceleration(stepper.checked(x4).pinv, k4x);

    Eigen::VectorXd xn = x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    Eigen::VectorXd vn = v + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

    auto projected = stepper.project(std::move(xn));
    x = std::move(projected.first);
    frame = std::move(projected.second);
    vn = frame.kernel * (frame.kernel.transpose() * vn);
    run.max_speed_deviation = std::max(run.max_speed_deviation, std::abs(vn.norm() - 1.0));
    v = vn.normalized();
    run.max_constraint_residual = std::max(run.max_constraint_residual, m.constraint().value(x).norm());
    run.curve.vertices.push_back(x);
  }

  run.end.position = x;
  run.end.velocity = v;
  run.end.arc_length = start.arc_length + length;
  return run;
}

}  // namespace normcurv
