#include <doctest.h>

#include <random>

#include "normcurv/algebra.hpp"

using namespace normcurv;

namespace {

constexpr AlgebraTag kAll[] = {AlgebraTag::real(), AlgebraTag::complex(), AlgebraTag::quaternion(),
                               AlgebraTag::octonion()};

double distance(const AlgebraElement& a, const AlgebraElement& b) { return (a - b).norm(); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("quaternion units follow ij = k") {
  const auto h = AlgebraTag::quaternion();
  const auto one = AlgebraElement::unit(h, 0);
  const auto i = AlgebraElement::unit(h, 1);
  const auto j = AlgebraElement::unit(h, 2);
  const auto k = AlgebraElement::unit(h, 3);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
}

TEST_CASE("complex product matches std::complex") {
  const auto c = AlgebraTag::complex();
  const double za[] = {1.5, -0.25};
  const double zb[] = {-2.0, 3.0};
  const auto p = AlgebraElement(c, za) * AlgebraElement(c, zb);
  // (1.5 - 0.25i)(-2 + 3i) = -3 + 4.5i + 0.5i + 0.75 = -2.25 + 5i
  CHECK(p[0] == doctest::Approx(-2.25));
  CHECK(p[1] == doctest::Approx(5.0));
}

TEST_CASE("norm is multiplicative in every division algebra") {
  std::mt19937_64 rng(7);
  for (auto tag : kAll) {
    for (int t = 0; t < 200; ++t) {
      const auto x = AlgebraElement::gaussian(tag, rng);
      const auto y = AlgebraElement::gaussian(tag, rng);
      CHECK((x * y).norm() == doctest::Approx(x.norm() * y.norm()).epsilon(1e-13));
    }
  }
}

TEST_CASE("associativity holds up to the quaternions and fails for octonions") {
  std::mt19937_64 rng(11);
  for (auto tag : {AlgebraTag::real(), AlgebraTag::complex(), AlgebraTag::quaternion()}) {
    const auto x = AlgebraElement::gaussian(tag, rng);
    const auto y = AlgebraElement::gaussian(tag, rng);
    const auto z = AlgebraElement::gaussian(tag, rng);
    CHECK(associator(x, y, z).norm() < 1e-12);
  }
  const auto o = AlgebraTag::octonion();
  const auto e1 = AlgebraElement::unit(o, 1);
  const auto e2 = AlgebraElement::unit(o, 2);
  const auto e4 = AlgebraElement::unit(o, 4);
  CHECK(associator(e1, e2, e4).norm() == doctest::Approx(2.0));
}

TEST_CASE("octonions are alternative") {
  std::mt19937_64 rng(13);
  const auto o = AlgebraTag::octonion();
  for (int t = 0; t < 100; ++t) {
    const auto x = AlgebraElement::gaussian(o, rng);
    const auto y = AlgebraElement::gaussian(o, rng);
    CHECK(associator(x, x, y).norm() < 1e-12);
    CHECK(associator(x, y, y).norm() < 1e-12);
    CHECK(associator(x, y, x).norm() < 1e-12);  // flexible
  }
}

TEST_CASE("conjugation reverses products and gives the norm") {
  std::mt19937_64 rng(17);
  for (auto tag : kAll) {
    const auto x = AlgebraElement::gaussian(tag, rng);
    const auto y = AlgebraElement::gaussian(tag, rng);
    CHECK(distance(conjugate(x * y), conjugate(y) * conjugate(x)) < 1e-12);
    const auto n = x * conjugate(x);
    CHECK(n.real() == doctest::Approx(x.norm_squared()));
    CHECK(n.imag_norm() < 1e-12);
    CHECK(real_inner(x, y) == doctest::Approx((x * conjugate(y)).real()));
  }
}

TEST_CASE("mixing algebras is rejected") {
  const auto a = AlgebraElement::scalar(AlgebraTag::real(), 1.0);
  const auto b = AlgebraElement::scalar(AlgebraTag::complex(), 1.0);
  CHECK_THROWS_AS(multiply(a, b), AlgebraMismatch);
  CHECK_THROWS_AS(algebra_from_letter('Q'), std::invalid_argument);
  CHECK(algebra_letter(algebra_from_letter('O')) == 'O');
}

}  // TEST_SUITE
