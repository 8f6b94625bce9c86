#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "normcurv/algebra.hpp"
#include "normcurv/ambient.hpp"

namespace normcurv {

/// Homogeneous coordinates: a vector of n + 1 algebra elements.
using HomogeneousVector = std::vector<AlgebraElement>;

/// Euclidean coordinates of a point on a scaled Veronese image.
using AmbientPoint = FlatVector;

/// Projective space over R, C, H (any n >= 1) or O (n = 2 only), embedded by
///   [v] -> flatten((v v* - I/(n+1)) / sqrt(2)).
/// With this normalization geodesics of length pi map to unit-speed circles
/// of radius 1/2 and the image lies on the sphere of radius sqrt(n/(2n+2)).
class VeroneseSpace {
 public:
  VeroneseSpace(AlgebraTag tag, int n);

  /// Parses names such as "RP2", "CP3", "HP2", "OP2".
  static VeroneseSpace parse(const std::string& name);

  AlgebraTag tag() const noexcept { return tag_; }
  int n() const noexcept { return n_; }
  std::size_t matrix_size() const noexcept { return static_cast<std::size_t>(n_) + 1; }
  /// Flat coordinate count D of (n+1)x(n+1) Hermitian matrices.
  std::size_t ambient_dim() const noexcept { return flat_dimension(tag_, matrix_size()); }
  /// Dimension of the trace-zero slice that actually contains the image: D - 1.
  std::size_t slice_dim() const noexcept { return ambient_dim() - 1; }
  std::size_t intrinsic_dim() const noexcept { return static_cast<std::size_t>(n_) * tag_.real_dim(); }
  double sphere_radius() const noexcept;
  std::string name() const;

  static double scale() noexcept;

 private:
  AlgebraTag tag_;
  int n_;
};

/// Rank-one projection P_ij = v_i conj(v_j).
HermitianMatrix projection_matrix(AlgebraTag tag, const HomogeneousVector& v);

/// Centered and scaled coordinates of a Hermitian matrix, and the inverse map.
AmbientPoint embed_matrix(const VeroneseSpace& space, const HermitianMatrix& p);
HermitianMatrix matrix_from_point(const VeroneseSpace& space, const AmbientPoint& x);

/// Image of [v]. Requires |v| = 1; octonionic representatives must have at
/// least one real entry so that all entries lie in an associative subalgebra.
AmbientPoint point_from_homogeneous(const VeroneseSpace& space, const HomogeneousVector& v);

/// Haar-distributed unit representative. In the octonionic case a random
/// coordinate is rotated to be real and positive.
HomogeneousVector random_homogeneous(const VeroneseSpace& space, std::mt19937_64& rng);
/// Image of diag(1, 0, ..., 0).
AmbientPoint base_point(const VeroneseSpace& space);

/// sum_i conj(v_i) w_i
AlgebraElement hermitian_inner(const HomogeneousVector& v, const HomogeneousVector& w);
double homogeneous_norm(const HomogeneousVector& v);

/// Random unit w with hermitian_inner(v, w) = 0 (associative algebras only).
HomogeneousVector random_orthogonal(const VeroneseSpace& space, const HomogeneousVector& v,
                                    std::mt19937_64& rng);

/// Closed-form geodesic t -> [cos t v + sin t w] of period pi.
class GeodesicCircle {
 public:
  GeodesicCircle(VeroneseSpace space, HomogeneousVector v, HomogeneousVector w);

  AmbientPoint operator()(double t) const;
  /// Center (vv* + ww*)/2 of the image circle, in ambient coordinates.
  AmbientPoint center() const;
  const VeroneseSpace& space() const noexcept { return space_; }

 private:
  VeroneseSpace space_;
  HomogeneousVector v_, w_;
};

GeodesicCircle geodesic_circle(const VeroneseSpace& space, const HomogeneousVector& v,
                               const HomogeneousVector& w);

/// Euclidean distance between two ambient points.
double chordal_distance(const AmbientPoint& p, const AmbientPoint& q);

/// Intrinsic distance arccos |<v, w>| in [0, pi/2] (associative algebras).
double intrinsic_distance(const VeroneseSpace& space, const HomogeneousVector& v,
                          const HomogeneousVector& w);

/// Circumradius of k points pairwise at distance `edge` (a regular (k-1)-simplex).
double simplex_circumradius(int k, double edge);

}  // namespace normcurv
