#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "normcurv/veronese.hpp"

using namespace normcurv;

namespace {

const double kPi = std::numbers::pi;

std::vector<VeroneseSpace> planes() {
  return {VeroneseSpace(AlgebraTag::real(), 2), VeroneseSpace(AlgebraTag::complex(), 2),
          VeroneseSpace(AlgebraTag::quaternion(), 2), VeroneseSpace(AlgebraTag::octonion(), 2)};
}

HomogeneousVector scaled(HomogeneousVector v, const AlgebraElement& q) {
  for (auto& e : v) e = e * q;
  return v;
}

// Independent oracle for CP^n: (vv* - I/m) / sqrt(2) as a complex matrix.
Eigen::MatrixXcd complex_projection(const HomogeneousVector& v) {
  const Eigen::Index m = static_cast<Eigen::Index>(v.size());
  Eigen::VectorXcd z(m);
  for (Eigen::Index i = 0; i < m; ++i) z[i] = {v[static_cast<std::size_t>(i)][0], v[static_cast<std::size_t>(i)][1]};
  return (z * z.adjoint() - Eigen::MatrixXcd::Identity(m, m) / static_cast<double>(m)) / std::sqrt(2.0);
}

}  // namespace

TEST_SUITE("veronese") {

TEST_CASE("space names and dimensions") {
  const auto cp3 = VeroneseSpace::parse("CP3");
  CHECK(cp3.n() == 3);
  CHECK(cp3.intrinsic_dim() == 6);
  CHECK(cp3.ambient_dim() == 16);
  CHECK(VeroneseSpace::parse("OP2").ambient_dim() == 27);
  CHECK(VeroneseSpace::parse("HP2").name() == "HP2");
  CHECK_THROWS_AS(VeroneseSpace::parse("OP3"), std::invalid_argument);
  CHECK_THROWS_AS(VeroneseSpace::parse("XP2"), std::invalid_argument);
  CHECK_THROWS_AS(VeroneseSpace::parse("RP0"), std::invalid_argument);
}

TEST_CASE("sphere radius matches the regular simplex circumradius") {
  for (int n = 1; n <= 6; ++n) {
    const VeroneseSpace s(AlgebraTag::real(), n);
    CHECK(s.sphere_radius() == doctest::Approx(simplex_circumradius(n + 1, 1.0)).epsilon(1e-15));
  }
  CHECK(VeroneseSpace(AlgebraTag::real(), 2).sphere_radius() == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(VeroneseSpace(AlgebraTag::real(), 3).sphere_radius() == doctest::Approx(std::sqrt(3.0 / 8.0)));
}

TEST_CASE("sampled points lie on the sphere of radius r_n") {
  std::mt19937_64 rng(1);
  for (const auto& s : planes()) {
    for (int t = 0; t < 50; ++t) {
      const auto x = point_from_homogeneous(s, random_homogeneous(s, rng));
      CHECK(x.norm() == doctest::Approx(s.sphere_radius()).epsilon(1e-13));
    }
  }
}

TEST_CASE("the image depends only on the projective point") {
  std::mt19937_64 rng(2);
  for (const auto& s : planes()) {
    if (!s.tag().associative()) continue;
    const auto v = random_homogeneous(s, rng);
    auto q = AlgebraElement::gaussian(s.tag(), rng);
    q = q * (1.0 / q.norm());
    const auto a = point_from_homogeneous(s, v);
    const auto b = point_from_homogeneous(s, scaled(v, q));
    CHECK((a - b).norm() < 1e-14);
  }
}

TEST_CASE("octonionic representatives need a real entry") {
  const VeroneseSpace op2(AlgebraTag::octonion(), 2);
  const auto o = AlgebraTag::octonion();
  HomogeneousVector v{AlgebraElement::unit(o, 1), AlgebraElement::unit(o, 2), AlgebraElement::unit(o, 4)};
  for (auto& e : v) e *= 1.0 / std::sqrt(3.0);
  CHECK_THROWS_AS(point_from_homogeneous(op2, v), std::invalid_argument);
  HomogeneousVector w{AlgebraElement::scalar(o, 0.6), AlgebraElement::unit(o, 5) * 0.8, AlgebraElement(o)};
  CHECK_NOTHROW(point_from_homogeneous(op2, w));
}

TEST_CASE("non-unit representatives are rejected") {
  const VeroneseSpace rp2(AlgebraTag::real(), 2);
  const auto r = AlgebraTag::real();
  HomogeneousVector v{AlgebraElement::scalar(r, 1.0), AlgebraElement::scalar(r, 1.0), AlgebraElement(r)};
  CHECK_THROWS_AS(point_from_homogeneous(rp2, v), std::invalid_argument);
}

TEST_CASE("embedding agrees with a complex-matrix oracle") {
  std::mt19937_64 rng(3);
  const VeroneseSpace cp2(AlgebraTag::complex(), 2);
  const auto v = random_homogeneous(cp2, rng);
  const auto w = random_homogeneous(cp2, rng);
  const double oracle = (complex_projection(v) - complex_projection(w)).norm();
  const double chord = chordal_distance(point_from_homogeneous(cp2, v), point_from_homogeneous(cp2, w));
  CHECK(chord == doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("chord equals sin of the intrinsic distance") {
  std::mt19937_64 rng(4);
  for (const auto& s : {VeroneseSpace(AlgebraTag::real(), 3), VeroneseSpace(AlgebraTag::complex(), 2),
                        VeroneseSpace(AlgebraTag::quaternion(), 2)}) {
    for (int t = 0; t < 20; ++t) {
      const auto v = random_homogeneous(s, rng);
      const auto w = random_homogeneous(s, rng);
      const double d = intrinsic_distance(s, v, w);
      const double chord = chordal_distance(point_from_homogeneous(s, v), point_from_homogeneous(s, w));
      CHECK(chord == doctest::Approx(std::sin(d)).epsilon(1e-12));
    }
  }
}

TEST_CASE("geodesic circles: radius 1/2, unit speed, period pi") {
  std::mt19937_64 rng(5);
  for (const auto& s : planes()) {
    if (!s.tag().associative()) continue;
    const auto v = random_homogeneous(s, rng);
    const auto w = random_orthogonal(s, v, rng);
    const auto g = geodesic_circle(s, v, w);
    const auto c = g.center();
    const double h = 1e-5;
    for (double t : {0.0, 0.3, 1.1, 2.5}) {
      CHECK((g(t) - c).norm() == doctest::Approx(0.5).epsilon(1e-13));
      const double speed = (g(t + h) - g(t - h)).norm() / (2.0 * h);
      CHECK(speed == doctest::Approx(1.0).epsilon(1e-8));
      CHECK((g(t + kPi) - g(t)).norm() < 1e-13);
    }
    // Chord at pi/4 against the closed form sin(pi/4).
    CHECK(chordal_distance(g(0.0), g(kPi / 4.0)) == doctest::Approx(std::sin(kPi / 4.0)).epsilon(1e-13));
    CHECK(chordal_distance(g(0.0), g(kPi / 2.0)) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("geodesic circle preconditions") {
  std::mt19937_64 rng(6);
  const VeroneseSpace cp2(AlgebraTag::complex(), 2);
  const auto v = random_homogeneous(cp2, rng);
  CHECK_THROWS_AS(geodesic_circle(cp2, v, v), std::invalid_argument);
  const VeroneseSpace op2(AlgebraTag::octonion(), 2);
  const auto o = random_homogeneous(op2, rng);
  CHECK_THROWS_AS(geodesic_circle(op2, o, o), std::invalid_argument);
}

TEST_CASE("simplex circumradius against a constructed simplex") {
  // Oracle: k points e_i / sqrt(2) in R^k have unit pairwise distance; their
  // circumcenter is the centroid.
  for (int k = 2; k <= 8; ++k) {
    Eigen::MatrixXd pts = Eigen::MatrixXd::Identity(k, k) / std::sqrt(2.0);
    const Eigen::VectorXd centroid = pts.rowwise().mean();
    const double r = (pts.col(0) - centroid).norm();
    CHECK(simplex_circumradius(k, 1.0) == doctest::Approx(r).epsilon(1e-14));
    CHECK(simplex_circumradius(k, 2.5) == doctest::Approx(2.5 * r).epsilon(1e-14));
  }
  CHECK(simplex_circumradius(4, 1.0) > simplex_circumradius(3, 1.0));
  CHECK_THROWS_AS(simplex_circumradius(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(simplex_circumradius(3, 0.0), std::invalid_argument);
}

TEST_CASE("matrix_from_point inverts the embedding") {
  std::mt19937_64 rng(8);
  for (const auto& s : planes()) {
    const auto v = random_homogeneous(s, rng);
    const auto x = point_from_homogeneous(s, v);
    CHECK((embed_matrix(s, matrix_from_point(s, x)) - x).norm() < 1e-14);
    const auto p = matrix_from_point(s, x);
    CHECK(p.trace() == doctest::Approx(1.0));
    CHECK((jordan_product(p, p) - p).frobenius_norm() < 1e-13);
  }
}

}  // TEST_SUITE
