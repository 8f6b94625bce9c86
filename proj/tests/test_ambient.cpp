#include <doctest.h>

#include <cmath>
#include <random>

#include "normcurv/ambient.hpp"

using namespace normcurv;

TEST_SUITE("ambient") {

TEST_CASE("flat dimensions") {
  CHECK(flat_dimension(AlgebraTag::real(), 3) == 6);
  CHECK(flat_dimension(AlgebraTag::complex(), 3) == 9);
  CHECK(flat_dimension(AlgebraTag::quaternion(), 3) == 15);
  CHECK(flat_dimension(AlgebraTag::octonion(), 3) == 27);
  CHECK(flat_dimension(AlgebraTag::real(), 4) == 10);
}

TEST_CASE("octonionic matrices stop at 3x3") {
  CHECK_NOTHROW(HermitianMatrix(AlgebraTag::octonion(), 3));
  CHECK_THROWS_AS(HermitianMatrix(AlgebraTag::octonion(), 4), std::invalid_argument);
  CHECK_THROWS_AS(HermitianMatrix(AlgebraTag::real(), 0), std::invalid_argument);
}

TEST_CASE("entries below the diagonal are conjugates") {
  std::mt19937_64 rng(3);
  const auto x = HermitianMatrix::gaussian(AlgebraTag::quaternion(), 3, rng);
  CHECK(x.entry(2, 0) == conjugate(x.entry(0, 2)));
  CHECK(x.entry(1, 1).imag_norm() == 0.0);
}

TEST_CASE("flatten is an isometry and round-trips") {
  std::mt19937_64 rng(5);
  for (auto tag : {AlgebraTag::real(), AlgebraTag::complex(), AlgebraTag::quaternion(), AlgebraTag::octonion()}) {
    const auto x = HermitianMatrix::gaussian(tag, 3, rng);
    const auto y = HermitianMatrix::gaussian(tag, 3, rng);
    const FlatVector fx = flatten(x);
    CHECK(static_cast<std::size_t>(fx.size()) == flat_dimension(tag, 3));
    CHECK(fx.norm() == doctest::Approx(x.frobenius_norm()));
    CHECK((flatten(x) - flatten(y)).norm() == doctest::Approx((x - y).frobenius_norm()));
    CHECK((flatten(unflatten(tag, 3, fx)) - fx).norm() < 1e-14);
  }
  CHECK_THROWS_AS(unflatten(AlgebraTag::real(), 3, FlatVector::Zero(5)), std::invalid_argument);
}

TEST_CASE("Jordan square of a complex matrix equals the matrix square") {
  std::mt19937_64 rng(9);
  const auto tag = AlgebraTag::complex();
  const auto x = HermitianMatrix::gaussian(tag, 3, rng);
  // Oracle: the same matrix as Eigen::Matrix3cd.
  Eigen::Matrix3cd m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto e = x.entry(i, j);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {e[0], e[1]};
    }
  }
  const Eigen::Matrix3cd sq = m * m;
  const auto jsq = jordan_product(x, x);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto e = jsq.entry(i, j);
      CHECK(e[0] == doctest::Approx(sq(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).real()));
      CHECK(e[1] == doctest::Approx(sq(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).imag()));
    }
  }
  CHECK(x.trace() == doctest::Approx(m.trace().real()));
}

TEST_CASE("Jordan product is commutative and the identity is a unit") {
  std::mt19937_64 rng(21);
  const auto tag = AlgebraTag::octonion();
  const auto x = HermitianMatrix::gaussian(tag, 3, rng);
  const auto y = HermitianMatrix::gaussian(tag, 3, rng);
  CHECK((jordan_product(x, y) - jordan_product(y, x)).frobenius_norm() < 1e-13);
  CHECK((jordan_product(HermitianMatrix::identity(tag, 3), x) - x).frobenius_norm() < 1e-13);
}

TEST_CASE("mismatched matrices are rejected") {
  HermitianMatrix a(AlgebraTag::real(), 2);
  HermitianMatrix b(AlgebraTag::real(), 3);
  CHECK_THROWS(a + b);
}

}  // TEST_SUITE
