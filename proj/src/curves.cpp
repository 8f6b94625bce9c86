#include "normcurv/curves.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "normcurv/ball.hpp"

namespace normcurv {

namespace {

constexpr double kPi = std::numbers::pi;

// Angle between two nonzero vectors, accurate for nearly parallel inputs.
double angle_between(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const Eigen::VectorXd ua = a.normalized();
  const Eigen::VectorXd ub = b.normalized();
  return 2.0 * std::atan2((ua - ub).norm(), (ua + ub).norm());
}

Eigen::MatrixXd centered_rows(const std::vector<Eigen::VectorXd>& pts, Eigen::VectorXd* mean_out = nullptr,
                              Eigen::Index dim = -1) {
  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  const Eigen::Index d = dim < 0 ? pts.front().size() : dim;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, d);
  for (Eigen::Index i = 0; i < n; ++i) m.row(i).head(pts[i].size()) = pts[i].transpose();
  Eigen::VectorXd mean = m.colwise().mean().transpose();
  m.rowwise() -= mean.transpose();
  if (mean_out) *mean_out = mean;
  return m;
}

void require_vertices(const DiscreteCurve& c, std::size_t n, const char* what) {
  if (c.size() < n) {
    throw DegenerateCurve(std::string(what) + ": curve needs at least " + std::to_string(n) + " vertices");
  }
}

Eigen::VectorXd random_unit_orthogonal(const Eigen::VectorXd& t, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::VectorXd n(t.size());
    for (Eigen::Index i = 0; i < n.size(); ++i) n[i] = normal(rng);
    n -= n.dot(t) * t;
    n -= n.dot(t) * t;
    const double len = n.norm();
    if (len > 1e-6) return n / len;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DiscreteCurve

std::size_t DiscreteCurve::edge_count() const noexcept {
  if (vertices.size() < 2) return 0;
  return closed ? vertices.size() : vertices.size() - 1;
}

Eigen::VectorXd DiscreteCurve::edge(std::size_t i) const {
  const std::size_t j = (i + 1) % vertices.size();
  return vertices[j] - vertices[i];
}

double DiscreteCurve::length() const {
  double s = 0.0;
  for (std::size_t i = 0; i < edge_count(); ++i) s += edge(i).norm();
  return s;
}

double DiscreteCurve::max_step_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < edge_count(); ++i) worst = std::max(worst, std::abs(edge(i).norm() - nominal_step));
  return worst;
}

double DiscreteCurve::endpoint_gap() const {
  if (vertices.empty()) return 0.0;
  return (vertices.back() - vertices.front()).norm();
}

std::vector<double> turning_angles(const DiscreteCurve& c) {
  const std::size_t edges = c.edge_count();
  for (std::size_t i = 0; i < edges; ++i) {
    if (c.edge(i).norm() == 0.0) throw DegenerateCurve("zero-length edge at index " + std::to_string(i));
  }
  std::vector<double> out;
  if (c.closed) {
    if (c.size() < 3) throw DegenerateCurve("closed curve needs at least 3 vertices");
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t prev = (i + c.size() - 1) % c.size();
      out.push_back(angle_between(c.edge(prev), c.edge(i)));
    }
  } else {
    if (c.size() < 3) return out;
    out.reserve(c.size() - 2);
    for (std::size_t i = 1; i + 1 < c.size(); ++i) out.push_back(angle_between(c.edge(i - 1), c.edge(i)));
  }
  return out;
}

std::vector<double> discrete_curvature(const DiscreteCurve& c) {
  if (!(c.nominal_step > 0.0)) throw DegenerateCurve("nominal step must be positive");
  std::vector<double> k = turning_angles(c);
  for (double& v : k) v /= c.nominal_step;
  return k;
}

Eigen::VectorXd discrete_tangent(const DiscreteCurve& c, std::size_t i) {
  require_vertices(c, 2, "discrete_tangent");
  if (i >= c.size()) throw std::out_of_range("discrete_tangent: vertex index out of range");
  Eigen::VectorXd d;
  if (c.closed) {
    d = c.vertices[(i + 1) % c.size()] - c.vertices[(i + c.size() - 1) % c.size()];
  } else if (i == 0) {
    d = c.vertices[1] - c.vertices[0];
  } else if (i + 1 == c.size()) {
    d = c.vertices[i] - c.vertices[i - 1];
  } else {
    d = c.vertices[i + 1] - c.vertices[i - 1];
  }
  const double len = d.norm();
  if (len == 0.0) throw DegenerateCurve("zero tangent at vertex " + std::to_string(i));
  return d / len;
}

// ---------------------------------------------------------------------------
// Circle fitting

CircleFit fit_circle(const std::vector<Eigen::VectorXd>& points) {
  if (points.size() < 3) throw std::invalid_argument("fit_circle needs at least 3 points");
  Eigen::VectorXd mean;
  const Eigen::MatrixXd a = centered_rows(points, &mean);
  if (a.cols() < 2) throw std::invalid_argument("fit_circle needs points in at least two dimensions");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  CircleFit fit;
  fit.planarity = (s.size() > 2 && s[0] > 0.0) ? s[2] / s[0] : 0.0;

  const Eigen::VectorXd e1 = svd.matrixV().col(0);
  const Eigen::VectorXd e2 = svd.matrixV().col(1);
  // Algebraic fit x^2 + y^2 = 2 a x + 2 b y + c in plane coordinates.
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd lhs(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = a.row(i).dot(e1);
    const double y = a.row(i).dot(e2);
    lhs(i, 0) = 2.0 * x;
    lhs(i, 1) = 2.0 * y;
    lhs(i, 2) = 1.0;
    rhs[i] = x * x + y * y;
  }
  const Eigen::Vector3d sol = lhs.colPivHouseholderQr().solve(rhs);
  fit.center = mean + sol[0] * e1 + sol[1] * e2;
  fit.radius = std::sqrt(sol[2] + sol[0] * sol[0] + sol[1] * sol[1]);
  for (const auto& p : points) {
    fit.max_radial_residual = std::max(fit.max_radial_residual, std::abs((p - fit.center).norm() - fit.radius));
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Bow lemma

bool is_planar_convex_arc(const DiscreteCurve& c, double tol, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (c.closed) return fail("curve is closed");
  if (c.size() < 3) return fail("fewer than 3 vertices");

  Eigen::VectorXd mean;
  const Eigen::MatrixXd a = centered_rows(c.vertices, &mean, std::max<Eigen::Index>(2, c.vertices.front().size()));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
  const Eigen::MatrixXd& v = svd.matrixV();
  const double extent = std::max(1.0, svd.singularValues()[0]);
  // Off-plane residual of every vertex.
  if (v.cols() > 2) {
    const Eigen::MatrixXd off = a * v.rightCols(v.cols() - 2);
    if (off.rowwise().norm().maxCoeff() > tol * extent) return fail("arc is not planar");
  }
  std::vector<Eigen::Vector2d> p(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    p[i] = {a.row(static_cast<Eigen::Index>(i)).dot(v.col(0)), a.row(static_cast<Eigen::Index>(i)).dot(v.col(1))};
  }
  int sign = 0;
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const Eigen::Vector2d e0 = p[i] - p[i - 1];
    const Eigen::Vector2d e1 = p[i + 1] - p[i];
    const double turn = std::atan2(e0.x() * e1.y() - e0.y() * e1.x(), e0.dot(e1));
    total += turn;
    if (std::abs(turn) <= tol) continue;
    const int s = turn > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return fail("turning angles change sign");
  }
  if (std::abs(total) > kPi + tol) return fail("total turning exceeds pi");
  return true;
}

BowReport bow_check(const DiscreteCurve& c1, const DiscreteCurve& c2, double tol) {
  BowReport r;
  auto invalid = [&](std::string msg) {
    r.status = ComparisonStatus::Invalid;
    r.reason = std::move(msg);
    return r;
  };
  if (c1.closed || c2.closed) return invalid("curves must be open arcs");
  if (c1.size() < 3 || c2.size() != c1.size()) return invalid("curves need equal vertex counts (at least 3)");
  if (std::abs(c1.nominal_step - c2.nominal_step) > tol) return invalid("curves have different steps");
  const double step_tol = 1e-6 * c1.nominal_step;
  if (c1.max_step_deviation() > step_tol || c2.max_step_deviation() > step_tol) {
    return invalid("curves are not unit-speed polylines");
  }
  std::string why;
  if (!is_planar_convex_arc(c1, tol, &why)) return invalid("c1 is not a planar convex arc: " + why);

  const auto k1 = turning_angles(c1);
  const auto k2 = turning_angles(c2);
  for (std::size_t i = 0; i < k1.size(); ++i) {
    if (k2[i] > k1[i] + tol) {
      return invalid("curvature of c2 exceeds that of c1 at vertex " + std::to_string(i + 1));
    }
  }

  r.endpoint_gap_1 = c1.endpoint_gap();
  r.endpoint_gap_2 = c2.endpoint_gap();
  r.inequality_holds = r.endpoint_gap_1 <= r.endpoint_gap_2 + tol;

  // Best isometric alignment of c2 onto c1 (reflections allowed).
  const Eigen::Index dim = static_cast<Eigen::Index>(std::max(c1.dim(), c2.dim()));
  const Eigen::MatrixXd a = centered_rows(c1.vertices, nullptr, dim);
  const Eigen::MatrixXd b = centered_rows(c2.vertices, nullptr, dim);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b.transpose() * a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd rot = svd.matrixU() * svd.matrixV().transpose();
  r.alignment_residual = (b * rot - a).rowwise().norm().maxCoeff();
  r.rigidity_detected = std::abs(r.endpoint_gap_1 - r.endpoint_gap_2) <= tol && r.alignment_residual <= tol;
  return r;
}

// ---------------------------------------------------------------------------
// Reflection surgery

Hyperplane Hyperplane::bisector(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::VectorXd d = y - x;
  const double len = d.norm();
  if (len == 0.0) throw std::invalid_argument("bisector of coincident points");
  Hyperplane h;
  h.normal = d / len;
  h.offset = h.normal.dot(0.5 * (x + y));
  return h;
}

Eigen::VectorXd Hyperplane::reflect(const Eigen::VectorXd& p) const {
  return p - 2.0 * signed_distance(p) * normal;
}

DiscreteCurve reflect_concat(const DiscreteCurve& c, std::size_t split_index, const Hyperplane& mirror,
                             double tol) {
  require_vertices(c, 2, "reflect_concat");
  if (split_index >= c.size()) throw std::out_of_range("reflect_concat: split index out of range");
  if (static_cast<std::size_t>(mirror.normal.size()) != c.dim()) {
    throw std::invalid_argument("reflect_concat: mirror dimension does not match the curve");
  }
  const Eigen::VectorXd& s = c.vertices[split_index];
  if (std::abs(mirror.signed_distance(s)) > tol) {
    throw std::invalid_argument("reflect_concat: split vertex is not on the mirror");
  }
  if (std::abs(discrete_tangent(c, split_index).dot(mirror.normal)) > tol) {
    throw std::invalid_argument("reflect_concat: curve is not tangent to the mirror at the split vertex");
  }
  DiscreteCurve out = c;
  for (std::size_t i = 0; i <= split_index; ++i) out.vertices[i] = mirror.reflect(c.vertices[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Monotonicity and Fary checks

double monotonicity_check(const DiscreteCurve& c, std::size_t t0_index, double tol) {
  require_vertices(c, 3, "monotonicity_check");
  if (c.closed) throw std::invalid_argument("monotonicity_check: curve must be open");
  if (std::abs(c.nominal_length() - kPi / 2.0) > 1e-6) {
    throw std::invalid_argument("monotonicity_check: curve length must be pi/2");
  }
  const auto k = discrete_curvature(c);
  const double kmax = *std::max_element(k.begin(), k.end());
  if (!(kmax < 2.0 - tol)) {
    throw std::invalid_argument("monotonicity_check: curvature precondition violated (max " +
                                std::to_string(kmax) + ")");
  }
  return (c.vertices.back() - c.vertices.front()).dot(discrete_tangent(c, t0_index));
}

FaryReport fary_check(const DiscreteCurve& c, double tol) {
  if (!c.closed) throw std::invalid_argument("fary_check: curve must be closed");
  const auto angles = turning_angles(c);
  FaryReport r;
  // Any enclosing radius bounds the minimal one from above; the ball about
  // the origin is often the tighter certificate for pre-scaled curves.
  double origin_radius = 0.0;
  for (const auto& x : c.vertices) origin_radius = std::max(origin_radius, x.norm());
  r.enclosing_radius = std::min(min_enclosing_ball(c.vertices, 1e-10).radius, origin_radius);
  if (r.enclosing_radius > 1.0 + 1e-9) {
    throw std::invalid_argument("fary_check: curve does not fit in a unit ball (radius " +
                                std::to_string(r.enclosing_radius) + ")");
  }
  double total = 0.0;
  for (double a : angles) total += a;
  r.average_curvature = total / c.length();
  r.bound_satisfied = r.average_curvature >= 1.0 - tol;
  return r;
}

// ---------------------------------------------------------------------------
// Generators

DiscreteCurve sample_circle_arc(double rho, double step, std::size_t vertex_count, std::size_t dim) {
  if (!(rho > 0.0) || !(step > 0.0) || dim < 2) throw std::invalid_argument("sample_circle_arc: bad arguments");
  DiscreteCurve c;
  c.nominal_step = step;
  c.vertices.reserve(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) {
    const double phi = static_cast<double>(i) * step / rho;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    x[0] = rho * std::cos(phi);
    x[1] = rho * std::sin(phi);
    c.vertices.push_back(std::move(x));
  }
  return c;
}

DiscreteCurve inscribed_circle_arc(double rho, double step, std::size_t vertex_count, std::size_t dim) {
  if (!(step < 2.0 * rho)) throw std::invalid_argument("inscribed_circle_arc: step must be below the diameter");
  // A chord of length step subtends 2 asin(step / 2 rho).
  const double subtended = 2.0 * std::asin(step / (2.0 * rho));
  DiscreteCurve c = sample_circle_arc(rho, subtended * rho, vertex_count, dim);
  c.nominal_step = step;
  return c;
}

DiscreteCurve planar_curve_from_turning(const std::vector<double>& signed_angles, double step) {
  DiscreteCurve c;
  c.nominal_step = step;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
  double heading = 0.0;
  c.vertices.push_back(x);
  for (std::size_t i = 0; i <= signed_angles.size(); ++i) {
    if (i > 0) heading += signed_angles[i - 1];
    x += step * Eigen::Vector2d(std::cos(heading), std::sin(heading));
    c.vertices.push_back(x);
  }
  return c;
}

DiscreteCurve space_curve_from_turning(const std::vector<double>& angles, double step, std::size_t dim,
                                       std::mt19937_64& rng) {
  if (dim < 2) throw std::invalid_argument("space_curve_from_turning: dimension must be at least 2");
  DiscreteCurve c;
  c.nominal_step = step;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  Eigen::VectorXd t = Eigen::VectorXd::Unit(static_cast<Eigen::Index>(dim), 0);
  c.vertices.push_back(x);
  for (std::size_t i = 0; i <= angles.size(); ++i) {
    if (i > 0) {
      const Eigen::VectorXd n = random_unit_orthogonal(t, rng);
      t = (std::cos(angles[i - 1]) * t + std::sin(angles[i - 1]) * n).normalized();
    }
    x += step * t;
    c.vertices.push_back(x);
  }
  return c;
}

DiscreteCurve random_convex_arc(std::size_t edges, double step, double max_curvature, std::mt19937_64& rng) {
  if (edges < 2) throw std::invalid_argument("random_convex_arc: need at least two edges");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> angles(edges - 1);
  double total = 0.0;
  for (double& a : angles) {
    a = unit(rng) * max_curvature * step;
    total += a;
  }
  if (total > kPi) {
    for (double& a : angles) a *= kPi / total;
  }
  return planar_curve_from_turning(angles, step);
}

DiscreteCurve random_bounded_curve(std::size_t edges, double step, double max_curvature, std::size_t dim,
                                   std::mt19937_64& rng) {
  if (edges < 2) throw std::invalid_argument("random_bounded_curve: need at least two edges");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> angles(edges - 1);
  for (double& a : angles) a = unit(rng) * max_curvature * step;
  return space_curve_from_turning(angles, step, dim, rng);
}

DiscreteCurve random_closed_curve_in_ball(std::size_t vertex_count, std::mt19937_64& rng) {
  if (vertex_count < 3) throw std::invalid_argument("random_closed_curve_in_ball: need at least 3 vertices");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> harmonics(1, 5);
  const int k_max = harmonics(rng);
  std::vector<Eigen::Vector3d> a(static_cast<std::size_t>(k_max)), b(static_cast<std::size_t>(k_max));
  for (int k = 0; k < k_max; ++k) {
    const double decay = 1.0 / ((k + 1.0) * (k + 1.0));
    a[static_cast<std::size_t>(k)] = decay * Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
    b[static_cast<std::size_t>(k)] = decay * Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
  }
  const Eigen::Vector3d offset(normal(rng), normal(rng), normal(rng));

  DiscreteCurve c;
  c.closed = true;
  for (std::size_t i = 0; i < vertex_count; ++i) {
    const double s = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(vertex_count);
    Eigen::Vector3d x = offset;
    for (int k = 0; k < k_max; ++k) {
      x += a[static_cast<std::size_t>(k)] * std::cos((k + 1) * s) + b[static_cast<std::size_t>(k)] * std::sin((k + 1) * s);
    }
    c.vertices.emplace_back(x);
  }
  // Rescale about the enclosing-ball center so the curve fits in a ball of
  // radius in [0.3, 1].
  const Ball ball = min_enclosing_ball(c.vertices, 1e-10);
  const double target = 0.3 + 0.7 * unit(rng);
  const double factor = target / (ball.radius * (1.0 + 1e-9));
  for (auto& x : c.vertices) x = (x - ball.center) * factor;
  c.nominal_step = c.length() / static_cast<double>(vertex_count);
  return c;
}

void write_curve_csv(std::ostream& out, const DiscreteCurve& c) {
  out << "index";
  for (std::size_t d = 0; d < c.dim(); ++d) out << ",x" << d;
  out << '\n';
  out << std::setprecision(17);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << i;
    for (Eigen::Index d = 0; d < c.vertices[i].size(); ++d) out << ',' << c.vertices[i][d];
    out << '\n';
  }
}

}  // namespace normcurv
