#pragma once

#include <cstddef>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace normcurv {

/// Polyline approximation of a unit-speed curve in R^D. `nominal_step` is the
/// arc length carried by each edge; closed curves have an implicit edge from
/// the last vertex back to the first.
struct DiscreteCurve {
  std::vector<Eigen::VectorXd> vertices;
  double nominal_step = 0.0;
  bool closed = false;

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t dim() const noexcept { return vertices.empty() ? 0 : static_cast<std::size_t>(vertices.front().size()); }
  std::size_t edge_count() const noexcept;
  Eigen::VectorXd edge(std::size_t i) const;
  double length() const;
  /// Nominal length: nominal_step times the number of edges.
  double nominal_length() const noexcept { return nominal_step * static_cast<double>(edge_count()); }
  /// max_i | |edge_i| - nominal_step |
  double max_step_deviation() const;
  double endpoint_gap() const;
};

struct DegenerateCurve : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Unsigned turning angle at every vertex that has two incident edges
/// (interior vertices, or all vertices for closed curves).
std::vector<double> turning_angles(const DiscreteCurve& c);

/// Turning angle divided by nominal_step at each such vertex.
std::vector<double> discrete_curvature(const DiscreteCurve& c);

/// Unit tangent at vertex i: normalized central difference in the interior,
/// the incident edge at the ends of an open curve.
Eigen::VectorXd discrete_tangent(const DiscreteCurve& c, std::size_t i);

// ---------------------------------------------------------------------------
// Circle fitting

struct CircleFit {
  Eigen::VectorXd center;
  double radius = 0.0;
  /// sigma_3 / sigma_1 of the centered samples (0 for an exactly planar set).
  double planarity = 0.0;
  /// max | |x_i - center| - radius |
  double max_radial_residual = 0.0;
};

/// Least-squares circle in the best-fit plane of the samples (at least 3).
CircleFit fit_circle(const std::vector<Eigen::VectorXd>& points);

// ---------------------------------------------------------------------------
// Bow lemma (Schur comparison)

enum class ComparisonStatus { Valid, Invalid };

struct BowReport {
  ComparisonStatus status = ComparisonStatus::Valid;
  std::string reason;  // set when status is Invalid
  double endpoint_gap_1 = 0.0;
  double endpoint_gap_2 = 0.0;
  bool inequality_holds = false;
  bool rigidity_detected = false;
  /// Max vertex residual of the best isometric alignment of c2 onto c1.
  double alignment_residual = 0.0;
};

/// Compares a planar convex arc c1 against a curve c2 of the same length and
/// pointwise smaller-or-equal curvature. Precondition failures are reported as
/// an Invalid status, never as an inequality failure.
BowReport bow_check(const DiscreteCurve& c1, const DiscreteCurve& c2, double tol = 1e-9);

/// Planar with one-signed turning and total turning at most pi (+tol).
bool is_planar_convex_arc(const DiscreteCurve& c, double tol, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Reflection surgery

struct Hyperplane {
  Eigen::VectorXd normal;  // unit
  double offset = 0.0;     // plane is {x : <normal, x> = offset}

  static Hyperplane bisector(const Eigen::VectorXd& x, const Eigen::VectorXd& y);
  double signed_distance(const Eigen::VectorXd& p) const { return normal.dot(p) - offset; }
  Eigen::VectorXd reflect(const Eigen::VectorXd& p) const;
};

/// Reflects vertices [0, split_index] across the mirror and keeps the rest.
/// The split vertex must lie on the mirror and the curve must be tangent to
/// it there (both within tol).
DiscreteCurve reflect_concat(const DiscreteCurve& c, std::size_t split_index, const Hyperplane& mirror,
                             double tol = 1e-6);

// ---------------------------------------------------------------------------
// Monotonicity and Fary checks

/// <end - start, tangent at t0_index> for a curve whose discrete curvature
/// stays below 2 - tol. Throws std::invalid_argument otherwise.
double monotonicity_check(const DiscreteCurve& c, std::size_t t0_index, double tol = 1e-9);

struct FaryReport {
  double average_curvature = 0.0;  // total turning / length
  double enclosing_radius = 0.0;
  bool bound_satisfied = false;
};

/// Average curvature of a closed curve contained in the unit ball (centered
/// at its minimal enclosing ball); the bound is average >= 1 - tol.
FaryReport fary_check(const DiscreteCurve& c, double tol = 5e-3);

// ---------------------------------------------------------------------------
// Generators

/// Circle arc of radius rho through `vertex_count` vertices spaced by arc
/// length `step`, lying in the plane spanned by the first two axes of R^dim.
DiscreteCurve sample_circle_arc(double rho, double step, std::size_t vertex_count, std::size_t dim = 2);
/// Same circle, but with chords of length exactly `step` (a unit-speed
/// polyline inscribed in the circle). Requires step < 2 rho.
DiscreteCurve inscribed_circle_arc(double rho, double step, std::size_t vertex_count, std::size_t dim = 2);
/// Open polyline built from prescribed turning angles with equal edges; turns
/// happen in the plane of the first two axes (planar) with signed angles.
DiscreteCurve planar_curve_from_turning(const std::vector<double>& signed_angles, double step);
/// Unit-speed polyline in R^dim that turns by angles[i] at vertex i + 1 toward
/// a random direction orthogonal to the current tangent.
DiscreteCurve space_curve_from_turning(const std::vector<double>& angles, double step, std::size_t dim,
                                       std::mt19937_64& rng);
/// Random convex planar arc of `edges` edges with curvature in [0, max_curvature]
/// and total turning at most pi.
DiscreteCurve random_convex_arc(std::size_t edges, double step, double max_curvature, std::mt19937_64& rng);
/// Random unit-speed curve with turning angles in [0, max_curvature * step].
DiscreteCurve random_bounded_curve(std::size_t edges, double step, double max_curvature, std::size_t dim,
                                   std::mt19937_64& rng);
/// Random closed trigonometric curve in R^3 scaled into the unit ball.
DiscreteCurve random_closed_curve_in_ball(std::size_t vertex_count, std::mt19937_64& rng);

/// CSV with header "index,x0,...,x{D-1}", one vertex per row.
void write_curve_csv(std::ostream& out, const DiscreteCurve& c);

}  // namespace normcurv
