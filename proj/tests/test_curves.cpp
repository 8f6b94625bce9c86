#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "normcurv/curves.hpp"
#include "normcurv/suites.hpp"

using namespace normcurv;

namespace {

const double kPi = std::numbers::pi;
const double kQuarterStep = (kPi / 2.0) / 400.0;

DiscreteCurve segment(std::size_t edges, double step) {
  return planar_curve_from_turning(std::vector<double>(edges - 1, 0.0), step);
}

Eigen::MatrixXd random_rotation(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(dim, dim);
  for (auto& v : g.reshaped()) v = normal(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
}

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("curvature of arc-length sampled circles is exact") {
  const auto c = sample_circle_arc(0.5, 1e-3, 500);
  for (double k : discrete_curvature(c)) CHECK(k == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("discretization bias of chord-length sampling") {
  // Oracle: with chords of length h on a circle of radius rho, each chord
  // subtends 2 asin(h / (2 rho)), which is the turning angle between chords.
  for (double rho : {0.5, 1.0, 3.0}) {
    for (double h : {1e-3, 1e-2, 0.1}) {
      const auto c = inscribed_circle_arc(rho, h, 50);
      CHECK(c.max_step_deviation() < 1e-14);
      const double expected = (2.0 / h) * std::asin(h / (2.0 * rho));
      // Vertex rounding limits the turning angle to about 1e-16 * rho / h^2.
      for (double k : discrete_curvature(c)) CHECK(k == doctest::Approx(expected).epsilon(1e-8));
      CHECK(std::abs(expected - 1.0 / rho) <= h * h / (24.0 * rho * rho * rho) * 1.01 + 1e-15);
    }
  }
}

TEST_CASE("straight segments have zero curvature") {
  for (double k : discrete_curvature(segment(20, 0.1))) CHECK(k == 0.0);
}

TEST_CASE("Veronese geodesic samples have curvature 2") {
  const auto run = sample_geodesic(VeroneseSpace::parse("CP2"), 1.0, 1e-3, 3);
  for (double k : discrete_curvature(run.curve)) CHECK(k == doctest::Approx(2.0).epsilon(5e-6));
}

TEST_CASE("curvature is invariant under rigid motions") {
  std::mt19937_64 rng(1);
  auto c = random_bounded_curve(100, 0.01, 1.5, 4, rng);
  const auto k0 = turning_angles(c);
  const Eigen::MatrixXd q = random_rotation(4, rng);
  for (auto& x : c.vertices) x = q * x + Eigen::VectorXd::Constant(4, 0.3);
  const auto k1 = turning_angles(c);
  for (std::size_t i = 0; i < k0.size(); ++i) CHECK(k1[i] == doctest::Approx(k0[i]).epsilon(1e-9));
}

TEST_CASE("degenerate edges are rejected") {
  DiscreteCurve c{{Eigen::Vector2d(0, 0), Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)}, 1.0, false};
  CHECK_THROWS_AS(turning_angles(c), DegenerateCurve);
}

TEST_CASE("circle fit in higher dimension") {
  std::mt19937_64 rng(2);
  const Eigen::MatrixXd q = random_rotation(5, rng);
  std::vector<Eigen::VectorXd> pts;
  for (const auto& x : sample_circle_arc(0.8, 0.05, 60, 5).vertices) pts.push_back(q * x);
  const auto fit = fit_circle(pts);
  CHECK(fit.radius == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(fit.planarity < 1e-12);
  CHECK(fit.max_radial_residual < 1e-12);
}

TEST_CASE("bow check: half circle against a segment") {
  const auto half = inscribed_circle_arc(0.5, kQuarterStep, 401);
  const auto r = bow_check(half, segment(400, kQuarterStep));
  REQUIRE(r.status == ComparisonStatus::Valid);
  CHECK(r.endpoint_gap_1 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.endpoint_gap_2 == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(r.inequality_holds);
  CHECK_FALSE(r.rigidity_detected);
}

TEST_CASE("bow check: identical curves are rigid") {
  const auto q = inscribed_circle_arc(1.0, kQuarterStep, 401);
  const auto r = bow_check(q, q);
  CHECK(r.inequality_holds);
  CHECK(r.rigidity_detected);
  // Any congruent copy is detected as well.
  std::mt19937_64 rng(3);
  auto moved = q;
  const Eigen::MatrixXd rot = random_rotation(2, rng);
  for (auto& x : moved.vertices) x = rot * x + Eigen::Vector2d(2.0, -1.0);
  CHECK(bow_check(q, moved).rigidity_detected);
}

TEST_CASE("bow check: violated preconditions are invalid, not failures") {
  const auto half = inscribed_circle_arc(0.5, kQuarterStep, 401);
  const auto seg = segment(400, kQuarterStep);
  // The segment is less curved than the half circle, so it cannot play c1.
  auto r = bow_check(seg, half);
  CHECK(r.status == ComparisonStatus::Invalid);
  CHECK_FALSE(r.reason.empty());
  // An S-shaped c1 is not convex.
  std::vector<double> s_turns(399, 0.004);
  for (std::size_t i = 200; i < s_turns.size(); ++i) s_turns[i] = -0.004;
  r = bow_check(planar_curve_from_turning(s_turns, kQuarterStep), seg);
  CHECK(r.status == ComparisonStatus::Invalid);
  CHECK(r.reason.find("convex") != std::string::npos);
  // Different discretizations.
  CHECK(bow_check(half, segment(300, kQuarterStep)).status == ComparisonStatus::Invalid);
  CHECK(bow_check(half, segment(400, 2.0 * kQuarterStep)).status == ComparisonStatus::Invalid);
}

TEST_CASE("bow lemma holds on random comparison pairs") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const auto c1 = random_convex_arc(200, 0.01, 3.0, rng);
    auto angles = turning_angles(c1);
    for (double& a : angles) a *= unit(rng);
    const auto c2 = space_curve_from_turning(angles, 0.01, 2 + static_cast<std::size_t>(t % 4), rng);
    const auto r = bow_check(c1, c2);
    REQUIRE(r.status == ComparisonStatus::Valid);
    CHECK(r.inequality_holds);
  }
}

TEST_CASE("reflection across a plane containing the curve is the identity") {
  auto c = sample_circle_arc(1.0, 0.05, 30, 3);
  Hyperplane z;
  z.normal = Eigen::Vector3d::UnitZ();
  const auto out = reflect_concat(c, 10, z);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK((out.vertices[i] - c.vertices[i]).norm() < 1e-15);
}

TEST_CASE("reflection keeps turning angles away from the split") {
  const auto arc = inscribed_circle_arc(0.7, 0.01, 120);
  const std::size_t split = 50;
  Hyperplane mirror;
  mirror.normal = arc.vertices[split].normalized();
  mirror.offset = mirror.normal.dot(arc.vertices[split]);
  const auto out = reflect_concat(arc, split, mirror);
  const auto k0 = turning_angles(arc);
  const auto k1 = turning_angles(out);
  for (std::size_t i = 0; i < k0.size(); ++i) {
    const std::size_t vertex = i + 1;
    if (vertex == split) {
      CHECK(k1[i] <= k0[i] + 1e-12);
    } else {
      CHECK(k1[i] == doctest::Approx(k0[i]).epsilon(1e-9));
    }
  }
  CHECK(out.max_step_deviation() < 1e-12);
}

TEST_CASE("reflection preconditions") {
  const auto arc = inscribed_circle_arc(0.7, 0.01, 120);
  Hyperplane off;
  off.normal = Eigen::Vector2d::UnitX();
  off.offset = 10.0;
  CHECK_THROWS_AS(reflect_concat(arc, 50, off), std::invalid_argument);
  // Through the split vertex but transverse to the curve.
  Hyperplane transverse = Hyperplane::bisector(arc.vertices[49], arc.vertices[51]);
  CHECK_THROWS_AS(reflect_concat(arc, 50, transverse), std::invalid_argument);
}

TEST_CASE("reflection surgery at a tangency gives an endpoint gap above 1") {
  const auto arc = inscribed_circle_arc(0.6, kQuarterStep, 401);
  Hyperplane mirror;
  mirror.normal = arc.vertices[133].normalized();
  mirror.offset = mirror.normal.dot(arc.vertices[133]);
  const auto out = reflect_concat(arc, 133, mirror);
  const auto r = bow_check(inscribed_circle_arc(0.5, kQuarterStep, 401), out);
  REQUIRE(r.status == ComparisonStatus::Valid);
  CHECK(r.endpoint_gap_2 > 1.0);
}

TEST_CASE("monotonicity: closed forms") {
  CHECK(monotonicity_check(segment(400, kQuarterStep), 123) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  // Arc of radius 0.6: the midpoint tangent is parallel to the chord, so the
  // value is the chord length 2 rho sin(L / (2 rho)).
  const double rho = 0.6;
  const auto arc = inscribed_circle_arc(rho, kQuarterStep, 401);
  const double oracle = 2.0 * rho * std::sin((kPi / 2.0) / (2.0 * rho));
  CHECK(monotonicity_check(arc, 200) == doctest::Approx(oracle).epsilon(1e-5));
  CHECK(monotonicity_check(arc, 200) > 0.0);
}

TEST_CASE("monotonicity preconditions") {
  CHECK_THROWS_AS(monotonicity_check(inscribed_circle_arc(0.5, kQuarterStep, 401), 10), std::invalid_argument);
  CHECK_THROWS_AS(monotonicity_check(segment(300, kQuarterStep), 10), std::invalid_argument);
}

TEST_CASE("monotonicity is positive on random curves") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_bounded_curve(400, kQuarterStep, 1.9, 3, rng);
    CHECK(monotonicity_check(c, static_cast<std::size_t>(t * 2)) > 0.0);
  }
}

TEST_CASE("Fary: circles") {
  for (std::size_t n : {50, 400, 2000}) {
    auto great = sample_circle_arc(1.0, 2.0 * kPi / static_cast<double>(n), n, 3);
    great.closed = true;
    // Oracle: regular n-gon, total turning 2 pi over perimeter 2 n sin(pi/n).
    const double oracle = (kPi / static_cast<double>(n)) / std::sin(kPi / static_cast<double>(n));
    const auto r = fary_check(great);
    CHECK(r.average_curvature == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(r.bound_satisfied);
  }
  auto small = sample_circle_arc(0.5, 2.0 * kPi * 0.5 / 500.0, 500, 3);
  small.closed = true;
  CHECK(fary_check(small).average_curvature == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("Fary: random closed curves in the unit ball") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const auto c = random_closed_curve_in_ball(800, rng);
    const auto r = fary_check(c);
    CHECK(r.enclosing_radius <= 1.0);
    CHECK(r.average_curvature >= 1.0 / r.enclosing_radius - 1e-9);
  }
}

TEST_CASE("Fary preconditions") {
  const auto open = sample_circle_arc(1.0, 0.1, 20, 3);
  CHECK_THROWS_AS(fary_check(open), std::invalid_argument);
  auto big = sample_circle_arc(2.0, 0.1, 126, 3);
  big.closed = true;
  CHECK_THROWS_AS(fary_check(big), std::invalid_argument);
}

TEST_CASE("curve CSV") {
  std::ostringstream out;
  write_curve_csv(out, segment(2, 0.5));
  CHECK(out.str() == "index,x0,x1\n0,0,0\n1,0.5,0\n2,1,0\n");
}

}  // TEST_SUITE
