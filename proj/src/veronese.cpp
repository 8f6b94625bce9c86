#include "normcurv/veronese.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>

namespace normcurv {

namespace {

constexpr double kUnitTol = 1e-10;

void require_size(const VeroneseSpace& space, const HomogeneousVector& v) {
  if (v.size() != space.matrix_size()) {
    throw std::invalid_argument("homogeneous vector has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(space.matrix_size()));
  }
  for (const auto& e : v) {
    if (e.tag() != space.tag()) throw AlgebraMismatch("homogeneous entry has the wrong algebra");
  }
}

void require_unit(const HomogeneousVector& v, const char* what) {
  if (std::abs(homogeneous_norm(v) - 1.0) > kUnitTol) {
    throw std::invalid_argument(std::string(what) + " must be a unit vector");
  }
}

HomogeneousVector normalized(HomogeneousVector v) {
  const double s = homogeneous_norm(v);
  if (s == 0.0) throw std::invalid_argument("cannot normalize a zero homogeneous vector");
  for (auto& e : v) e *= 1.0 / s;
  return v;
}

}  // namespace

VeroneseSpace::VeroneseSpace(AlgebraTag tag, int n) : tag_(tag), n_(n) {
  if (n < 1) throw std::invalid_argument("projective dimension must be at least 1");
  if (tag.kind == AlgebraKind::Octonion && n != 2) {
    throw std::invalid_argument("the octonionic projective space exists only for n = 2");
  }
}

VeroneseSpace VeroneseSpace::parse(const std::string& name) {
  static const std::regex pattern("^([RCHO])P([0-9]+)$");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) {
    throw std::invalid_argument("unrecognized space name '" + name + "' (expected e.g. RP2, CP3, OP2)");
  }
  return VeroneseSpace(algebra_from_letter(m[1].str()[0]), std::stoi(m[2].str()));
}

double VeroneseSpace::sphere_radius() const noexcept {
  return std::sqrt(static_cast<double>(n_) / (2.0 * n_ + 2.0));
}

std::string VeroneseSpace::name() const {
  return std::string(1, algebra_letter(tag_)) + "P" + std::to_string(n_);
}

double VeroneseSpace::scale() noexcept { return 1.0 / std::sqrt(2.0); }

double homogeneous_norm(const HomogeneousVector& v) {
  double s = 0.0;
  for (const auto& e : v) s += e.norm_squared();
  return std::sqrt(s);
}

AlgebraElement hermitian_inner(const HomogeneousVector& v, const HomogeneousVector& w) {
  if (v.size() != w.size() || v.empty()) throw std::invalid_argument("hermitian_inner: size mismatch");
  AlgebraElement acc(v.front().tag());
  for (std::size_t i = 0; i < v.size(); ++i) acc += multiply(conjugate(v[i]), w[i]);
  return acc;
}

HermitianMatrix projection_matrix(AlgebraTag tag, const HomogeneousVector& v) {
  HermitianMatrix p(tag, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    p.set_diagonal(i, v[i].norm_squared());
    for (std::size_t j = i + 1; j < v.size(); ++j) p.set(i, j, multiply(v[i], conjugate(v[j])));
  }
  return p;
}

AmbientPoint embed_matrix(const VeroneseSpace& space, const HermitianMatrix& p) {
  const double m = static_cast<double>(space.matrix_size());
  HermitianMatrix centered = p - HermitianMatrix::identity(space.tag(), space.matrix_size()) * (1.0 / m);
  return flatten(centered) * VeroneseSpace::scale();
}

HermitianMatrix matrix_from_point(const VeroneseSpace& space, const AmbientPoint& x) {
  const double m = static_cast<double>(space.matrix_size());
  return unflatten(space.tag(), space.matrix_size(), x / VeroneseSpace::scale()) +
         HermitianMatrix::identity(space.tag(), space.matrix_size()) * (1.0 / m);
}

AmbientPoint point_from_homogeneous(const VeroneseSpace& space, const HomogeneousVector& v) {
  require_size(space, v);
  require_unit(v, "homogeneous representative");
  if (!space.tag().associative()) {
    const bool has_real_entry = std::any_of(v.begin(), v.end(), [](const AlgebraElement& e) {
      return e.imag_norm() <= 1e-12;
    });
    if (!has_real_entry) {
      throw std::invalid_argument("octonionic representative needs at least one real entry");
    }
  }
  return embed_matrix(space, projection_matrix(space.tag(), v));
}

HomogeneousVector random_homogeneous(const VeroneseSpace& space, std::mt19937_64& rng) {
  HomogeneousVector v;
  v.reserve(space.matrix_size());
  for (std::size_t i = 0; i < space.matrix_size(); ++i) v.push_back(AlgebraElement::gaussian(space.tag(), rng));
  if (!space.tag().associative()) {
    std::uniform_int_distribution<std::size_t> pick(0, space.matrix_size() - 1);
    const std::size_t k = pick(rng);
    v[k] = AlgebraElement::scalar(space.tag(), v[k].norm());
  }
  return normalized(std::move(v));
}

AmbientPoint base_point(const VeroneseSpace& space) {
  std::vector<double> diag(space.matrix_size(), 0.0);
  diag[0] = 1.0;
  return embed_matrix(space, HermitianMatrix::diagonal(space.tag(), diag));
}

HomogeneousVector random_orthogonal(const VeroneseSpace& space, const HomogeneousVector& v,
                                    std::mt19937_64& rng) {
  if (!space.tag().associative()) {
    throw std::invalid_argument("random_orthogonal requires an associative algebra");
  }
  require_size(space, v);
  for (int attempt = 0; attempt < 16; ++attempt) {
    HomogeneousVector w;
    for (std::size_t i = 0; i < space.matrix_size(); ++i) w.push_back(AlgebraElement::gaussian(space.tag(), rng));
    // Two Gram-Schmidt passes; the second removes rounding left by the first.
    for (int pass = 0; pass < 2; ++pass) {
      const AlgebraElement lambda = hermitian_inner(v, w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= multiply(v[i], lambda);
    }
    if (homogeneous_norm(w) > 1e-6) return normalized(std::move(w));
  }
  throw std::runtime_error("random_orthogonal: failed to draw a non-degenerate vector");
}

GeodesicCircle::GeodesicCircle(VeroneseSpace space, HomogeneousVector v, HomogeneousVector w)
    : space_(space), v_(std::move(v)), w_(std::move(w)) {
  if (!space_.tag().associative()) {
    throw std::invalid_argument("closed-form geodesics need an associative algebra; integrate instead");
  }
  require_size(space_, v_);
  require_size(space_, w_);
  require_unit(v_, "geodesic start v");
  require_unit(w_, "geodesic direction w");
  if (hermitian_inner(v_, w_).norm() > kUnitTol) {
    throw std::invalid_argument("geodesic_circle: v and w must be orthogonal");
  }
}

AmbientPoint GeodesicCircle::operator()(double t) const {
  const double c = std::cos(t);
  const double s = std::sin(t);
  HomogeneousVector u(v_.size(), AlgebraElement(space_.tag()));
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = v_[i] * c + w_[i] * s;
  return embed_matrix(space_, projection_matrix(space_.tag(), u));
}

AmbientPoint GeodesicCircle::center() const {
  HermitianMatrix mid = (projection_matrix(space_.tag(), v_) + projection_matrix(space_.tag(), w_)) * 0.5;
  return embed_matrix(space_, mid);
}

GeodesicCircle geodesic_circle(const VeroneseSpace& space, const HomogeneousVector& v,
                               const HomogeneousVector& w) {
  return GeodesicCircle(space, v, w);
}

double chordal_distance(const AmbientPoint& p, const AmbientPoint& q) {
  if (p.size() != q.size()) throw std::invalid_argument("chordal_distance: dimension mismatch");
  return (p - q).norm();
}

double intrinsic_distance(const VeroneseSpace& space, const HomogeneousVector& v,
                          const HomogeneousVector& w) {
  if (!space.tag().associative()) {
    throw std::invalid_argument("intrinsic_distance from representatives needs an associative algebra");
  }
  require_size(space, v);
  require_size(space, w);
  const double c = hermitian_inner(v, w).norm() / (homogeneous_norm(v) * homogeneous_norm(w));
  return std::acos(std::clamp(c, 0.0, 1.0));
}

double simplex_circumradius(int k, double edge) {
  if (k < 2) throw std::invalid_argument("simplex_circumradius needs at least two points");
  if (!(edge > 0.0)) throw std::invalid_argument("simplex edge must be positive");
  return edge * std::sqrt((k - 1.0) / (2.0 * k));
}

}  // namespace normcurv
