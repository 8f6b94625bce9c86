#include "normcurv/suites.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string_view>

#include "normcurv/ball.hpp"
#include "normcurv/curves.hpp"

namespace normcurv {

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64 make_rng(std::uint64_t seed, std::string_view stream) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char ch : stream) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

std::vector<VeroneseSpace> projective_planes() {
  return {VeroneseSpace(AlgebraTag::real(), 2), VeroneseSpace(AlgebraTag::complex(), 2),
          VeroneseSpace(AlgebraTag::quaternion(), 2), VeroneseSpace(AlgebraTag::octonion(), 2)};
}

AmbientPoint random_point(const VeroneseSpace& space, std::mt19937_64& rng) {
  return point_from_homogeneous(space, random_homogeneous(space, rng));
}

VerificationReport make_report(const std::string& suite, const SuiteConfig& config, std::uint64_t seed) {
  VerificationReport r;
  r.suite = suite;
  r.environment.emplace_back("seed", std::to_string(seed));
  for (auto& kv : config.echo()) r.environment.push_back(std::move(kv));
  return r;
}

}  // namespace

SuiteName parse_suite_name(const std::string& name) {
  if (name == "veronese") return SuiteName::Veronese;
  if (name == "rigidity") return SuiteName::Rigidity;
  if (name == "torus") return SuiteName::Torus;
  if (name == "curves") return SuiteName::Curves;
  if (name == "all") return SuiteName::All;
  throw UnknownSuite("unknown suite '" + name + "' (expected veronese, rigidity, torus, curves or all)");
}

std::string to_string(SuiteName name) {
  switch (name) {
    case SuiteName::Veronese: return "veronese";
    case SuiteName::Rigidity: return "rigidity";
    case SuiteName::Torus: return "torus";
    case SuiteName::Curves: return "curves";
    case SuiteName::All: return "all";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// veronese

VerificationReport run_veronese_suite(const SuiteConfig& config, std::uint64_t seed) {
  VerificationReport report = make_report("veronese", config, seed);
  const auto spaces = projective_planes();

  ClaimRow curvature{claim_id::kNormalCurvature,
                     "Veronese images of RP2, CP2, HP2, OP2 scaled into a 1/sqrt(3)-ball have every normal "
                     "curvature equal to 2",
                     {}};
  ClaimRow radius{claim_id::kSphereRadius,
                  "the scaled Veronese image of an n-dimensional projective space lies on a sphere of radius "
                  "sqrt(n/(2n+2))",
                  {}};
  ClaimRow circles{claim_id::kCircleGeodesics,
                   "every geodesic of the scaled Veronese image is a planar circle of radius 1/2 closing after "
                   "length pi",
                   {}};
  ClaimRow mean{claim_id::kMeanCurvature,
                "mean curvature |H| equals dim/r, the equality case of the average bound |H| >= dim/r",
                {}};
  ClaimRow sectional{claim_id::kSectionalCurvature,
                     "sectional curvature from the Gauss equation: constant 1 on RP2 and within [1, 4] otherwise",
                     {}};

  for (const auto& space : spaces) {
    const std::string name = space.name();
    const ImplicitManifold m = projection_variety(space);

    // normal curvature at random points and directions
    {
      auto rng = make_rng(seed, "curvature/" + name);
      const std::size_t per_point = 100;
      double worst = 2.0;
      for (std::size_t done = 0; done < config.curvature_directions;) {
        const LocalFrame frame = m.frame_at(random_point(space, rng));
        for (std::size_t i = 0; i < per_point && done < config.curvature_directions; ++i, ++done) {
          const double k = frame.normal_curvature(frame.random_unit_tangent(rng));
          if (std::abs(k - 2.0) > std::abs(worst - 2.0)) worst = k;
        }
      }
      curvature.add(name, worst, 2.0, 1e-8);
    }

    // enclosing ball of sampled points
    {
      auto rng = make_rng(seed, "ball/" + name);
      std::vector<Eigen::VectorXd> pts;
      for (std::size_t i = 0; i < config.ball_samples; ++i) pts.push_back(random_point(space, rng));
      radius.add(name, min_enclosing_ball(pts, config.ball_tolerance).radius, space.sphere_radius(), 1e-4);
    }

    // integrated geodesics
    {
      auto rng = make_rng(seed, "geodesic/" + name);
      double closure = 0.0, radius_dev = 0.0, planarity = 0.0, fitted = 0.5;
      for (std::size_t g = 0; g < config.geodesics_per_space; ++g) {
        const AmbientPoint x = random_point(space, rng);
        const Eigen::VectorXd u = m.frame_at(x).random_unit_tangent(rng);
        const GeodesicRun run = integrate_geodesic(m, {x, u, 0.0}, kPi, config.geodesic_step);
        closure = std::max(closure, (run.curve.vertices.back() - run.curve.vertices.front()).norm());
        std::vector<Eigen::VectorXd> samples(run.curve.vertices.begin(), run.curve.vertices.end() - 1);
        const CircleFit fit = fit_circle(samples);
        if (std::abs(fit.radius - 0.5) >= radius_dev) {
          radius_dev = std::abs(fit.radius - 0.5);
          fitted = fit.radius;
        }
        planarity = std::max(planarity, fit.planarity);
      }
      circles.add(name + ".closure", closure, 0.0, 1e-6);
      circles.add(name + ".radius", fitted, 0.5, 1e-6);
      circles.add(name + ".planarity", planarity, 0.0, 1e-8, Comparison::AtMost);
    }

    // mean curvature
    {
      auto rng = make_rng(seed, "mean/" + name);
      const double expected = static_cast<double>(space.intrinsic_dim()) / space.sphere_radius();
      double worst = expected;
      for (std::size_t i = 0; i < config.mean_curvature_points; ++i) {
        const double h = m.frame_at(random_point(space, rng)).mean_curvature_vector().norm();
        if (std::abs(h - expected) > std::abs(worst - expected)) worst = h;
      }
      mean.add(name, worst, expected, 1e-6);
    }

    // sectional curvature
    {
      auto rng = make_rng(seed, "sectional/" + name);
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t p = 0; p < config.sectional_points; ++p) {
        const LocalFrame frame = m.frame_at(random_point(space, rng));
        for (std::size_t i = 0; i < config.sectional_planes_per_point; ++i) {
          const Eigen::VectorXd u = frame.random_unit_tangent(rng);
          Eigen::VectorXd v = frame.random_unit_tangent(rng);
          v = (v - v.dot(u) * u).normalized();
          const double k = frame.sectional_curvature(u, v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
      }
      if (space.tag().kind == AlgebraKind::Real) {
        sectional.add(name + ".min", lo, 1.0, 1e-6);
        sectional.add(name + ".max", hi, 1.0, 1e-6);
      } else {
        sectional.add(name + ".min", lo, 1.0, 1e-6, Comparison::AtLeast);
        sectional.add(name + ".max", hi, 4.0, 1e-6, Comparison::AtMost);
      }
    }
  }

  // RP3 for the n = 3 radius.
  {
    const VeroneseSpace rp3(AlgebraTag::real(), 3);
    auto rng = make_rng(seed, "ball/RP3");
    std::vector<Eigen::VectorXd> pts;
    for (std::size_t i = 0; i < config.ball_samples; ++i) pts.push_back(random_point(rp3, rng));
    radius.add("RP3", min_enclosing_ball(pts, config.ball_tolerance).radius, rp3.sphere_radius(), 1e-4);
  }

  report.claims = {std::move(curvature), std::move(radius), std::move(circles), std::move(mean), std::move(sectional)};
  return report;
}

// ---------------------------------------------------------------------------
// rigidity

VerificationReport run_rigidity_suite(const SuiteConfig& config, std::uint64_t seed) {
  VerificationReport report = make_report("rigidity", config, seed);
  ClaimRow row{claim_id::kRigidityArithmetic,
               "points at intrinsic distance pi/2 are at chordal distance 1, and four such points cannot fit in a "
               "1/sqrt(3)-ball since a unit regular tetrahedron has circumradius sqrt(3/8)",
               {}};

  const std::vector<VeroneseSpace> spaces{
      VeroneseSpace(AlgebraTag::real(), 2),       VeroneseSpace(AlgebraTag::complex(), 2),
      VeroneseSpace(AlgebraTag::quaternion(), 2), VeroneseSpace(AlgebraTag::octonion(), 2),
      VeroneseSpace(AlgebraTag::real(), 3),       VeroneseSpace(AlgebraTag::complex(), 3),
      VeroneseSpace(AlgebraTag::quaternion(), 3)};

  for (const auto& space : spaces) {
    const std::string name = space.name();
    auto rng = make_rng(seed, "chord/" + name);
    // Coordinate points e_0, e_1 and, in the associative cases, random orthogonal pairs.
    auto basis_vector = [&](std::size_t i) {
      HomogeneousVector v(space.matrix_size(), AlgebraElement(space.tag()));
      v[i] = AlgebraElement::scalar(space.tag(), 1.0);
      return v;
    };
    double worst = chordal_distance(point_from_homogeneous(space, basis_vector(0)),
                                    point_from_homogeneous(space, basis_vector(1)));
    if (space.tag().associative()) {
      for (int trial = 0; trial < 100; ++trial) {
        const HomogeneousVector v = random_homogeneous(space, rng);
        const HomogeneousVector w = random_orthogonal(space, v, rng);
        const double d = chordal_distance(point_from_homogeneous(space, v), point_from_homogeneous(space, w));
        if (std::abs(d - 1.0) > std::abs(worst - 1.0)) worst = d;
      }
    }
    row.add(name + ".chord_at_pi_over_2", worst, 1.0, 1e-9);

    if (space.n() >= 3) {
      // Four mutually orthogonal representatives: a unit regular tetrahedron.
      std::vector<HomogeneousVector> reps{random_homogeneous(space, rng)};
      while (reps.size() < 4) {
        HomogeneousVector w = random_orthogonal(space, reps.front(), rng);
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& r : reps) {
            const AlgebraElement lambda = hermitian_inner(r, w);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= multiply(r[i], lambda);
          }
        }
        const double s = homogeneous_norm(w);
        for (auto& e : w) e *= 1.0 / s;
        reps.push_back(std::move(w));
      }
      std::vector<Eigen::VectorXd> pts;
      for (const auto& r : reps) pts.push_back(point_from_homogeneous(space, r));
      double edge_dev = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) edge_dev = std::max(edge_dev, std::abs(chordal_distance(pts[i], pts[j]) - 1.0));
      }
      row.add(name + ".four_point_edge_deviation", edge_dev, 0.0, 1e-9);
      row.add(name + ".four_point_enclosing_radius", min_enclosing_ball(pts, 1e-12).radius,
              simplex_circumradius(4, 1.0), 1e-9);
    }
  }

  const double r3 = simplex_circumradius(3, 1.0);
  const double r4 = simplex_circumradius(4, 1.0);
  row.add("simplex_circumradius(3,1)", r3, 1.0 / std::sqrt(3.0), 1e-12);
  row.add("simplex_circumradius(4,1)", r4, std::sqrt(3.0 / 8.0), 1e-12);
  row.add("simplex_circumradius(4,1) - 1/sqrt(3)", r4 - 1.0 / std::sqrt(3.0), 0.0, 0.0, Comparison::StrictlyAbove);
  report.claims.push_back(std::move(row));
  return report;
}

// ---------------------------------------------------------------------------
// torus

VerificationReport run_torus_suite(const SuiteConfig& config, std::uint64_t seed) {
  VerificationReport report = make_report("torus", config, seed);
  const double target2 = torus_curvature_bound(2);

  ClaimRow row{claim_id::kTorusConstant,
               "the A2 flat-torus embedding has every normal curvature equal to sqrt(3n/(n+2))/R at n = 2, and "
               "weight optimization recovers it",
               {}};

  const TorusEmbedding a2 = equal_weight_torus(2, coordinate_pair_family(2));
  {
    const double radius = a2.radius();
    double sum = 0.0, sum_sq = 0.0;
    const std::size_t count = config.torus_directions;
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double phi = kPi * static_cast<double>(i) / static_cast<double>(count);
      values[i] = torus_normal_curvature(a2, Eigen::Vector2d(std::cos(phi), std::sin(phi))) * radius;
      sum += values[i];
    }
    const double mean = sum / static_cast<double>(count);
    for (double v : values) sum_sq += (v - mean) * (v - mean);
    row.add("a2.mean_kappa_R", mean, target2, 1e-12);
    row.add("a2.variance_kappa_R", sum_sq / static_cast<double>(count), 0.0, 1e-18, Comparison::AtMost);
  }

  {
    auto rng = make_rng(seed, "torus/starts");
    std::uniform_real_distribution<double> perturb(0.7, 1.3);
    std::vector<std::vector<double>> starts{config.torus_start};
    for (std::size_t i = 0; i < config.torus_random_starts; ++i) starts.push_back({perturb(rng), perturb(rng), perturb(rng)});
    for (std::size_t i = 0; i < starts.size(); ++i) {
      OptimizeOptions opts;
      opts.budget = config.torus_budget;
      opts.seed = seed + i;
      const OptimizeResult res = optimize_weights(a2.freqs, starts[i], opts);
      const std::string label = "optimizer.start" + std::to_string(i);
      row.add(label + ".value", res.value, target2, 1e-4);
      row.add(label + ".evaluations", static_cast<double>(res.evaluations), 10000.0, 0.0, Comparison::AtMost);
    }
  }

  {
    TorusEmbedding circle;
    circle.n = 1;
    circle.freqs = {Eigen::VectorXi::Ones(1)};
    circle.weights = {1.0};
    row.add("n1.kappa_R", torus_worst_direction(circle).max_value, torus_curvature_bound(1), 1e-12);
  }
  report.claims.push_back(std::move(row));

  // Supporting rows: product torus and the n = 3 experiment.
  {
    ClaimRow product{"torus.product_torus",
                     "the plain product torus is worse than the bound: max kappa*R = sqrt(n) at axis directions",
                     {}};
    product.add("n2.max_kappa_R", torus_worst_direction(equal_weight_torus(2, coordinate_family(2))).max_value,
                std::sqrt(2.0), 1e-9);
    product.add("n3.max_kappa_R", torus_worst_direction(equal_weight_torus(3, coordinate_family(3))).max_value,
                std::sqrt(3.0), 1e-9);
    report.claims.push_back(std::move(product));
  }
  {
    ClaimRow n3{"torus.n3_experiment",
                "n = 3 family {e_i} + {e_i + e_j}: optimized max kappa*R lies between sqrt(9/5) and the product "
                "torus value sqrt(3)",
                {}};
    const auto freqs = coordinate_pair_family(3);
    OptimizeOptions opts;
    opts.budget = config.torus_budget;
    opts.seed = seed;
    opts.inner = {2000, 6, seed};
    const OptimizeResult res = optimize_weights(freqs, std::vector<double>(freqs.size(), 1.0), opts);
    const double bound = torus_curvature_bound(3);
    n3.add("optimized_value", res.value, std::sqrt(3.0), 1e-9, Comparison::AtMost);
    n3.add("optimized_value_vs_bound", res.value, bound, 1e-6, Comparison::AtLeast);
    n3.add("gap_to_bound", res.value - bound, 0.0, std::numeric_limits<double>::infinity(), Comparison::AtLeast);
    report.claims.push_back(std::move(n3));
  }
  return report;
}

// ---------------------------------------------------------------------------
// curves

VerificationReport run_curves_suite(const SuiteConfig& config, std::uint64_t seed) {
  VerificationReport report = make_report("curves", config, seed);
  const std::size_t edges = config.curve_edges;
  const double step = (kPi / 2.0) / static_cast<double>(edges);

  {
    ClaimRow row{claim_id::kBowLemma,
                 "a planar convex arc has endpoint distance at most that of any equal-length curve with pointwise "
                 "smaller curvature, with equality only for congruent curves",
                 {}};
    auto rng = make_rng(seed, "bow");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> dims(2, 5);
    std::size_t invalid = 0, violations = 0;
    for (std::size_t t = 0; t < config.bow_trials; ++t) {
      const DiscreteCurve c1 = random_convex_arc(edges, step, 2.0, rng);
      std::vector<double> angles = turning_angles(c1);
      // Every fourth trial keeps the curvature profile exactly (pure twisting).
      if (t % 4 != 0) {
        for (double& a : angles) a *= unit(rng);
      }
      const DiscreteCurve c2 = space_curve_from_turning(angles, step, dims(rng), rng);
      const BowReport r = bow_check(c1, c2);
      if (r.status != ComparisonStatus::Valid) {
        ++invalid;
      } else if (!r.inequality_holds) {
        ++violations;
      }
    }
    row.add("random_pairs.violations", static_cast<double>(violations), 0.0, 0.0);
    row.add("random_pairs.invalid", static_cast<double>(invalid), 0.0, 0.0);

    const DiscreteCurve half_circle = inscribed_circle_arc(0.5, step, edges + 1);
    const DiscreteCurve segment = planar_curve_from_turning(std::vector<double>(edges - 1, 0.0), step);
    const BowReport hs = bow_check(half_circle, segment);
    row.add("half_circle_vs_segment.valid", hs.status == ComparisonStatus::Valid ? 1.0 : 0.0, 1.0, 0.0);
    row.add("half_circle_vs_segment.gap1", hs.endpoint_gap_1, 1.0, 1e-9);
    row.add("half_circle_vs_segment.gap2", hs.endpoint_gap_2, kPi / 2.0, 1e-9);
    row.add("half_circle_vs_segment.holds", hs.inequality_holds ? 1.0 : 0.0, 1.0, 0.0);

    const DiscreteCurve quarter = inscribed_circle_arc(1.0, step, edges + 1);
    const BowReport same = bow_check(quarter, quarter);
    row.add("identical.rigidity_detected", same.rigidity_detected ? 1.0 : 0.0, 1.0, 0.0);
    report.claims.push_back(std::move(row));
  }

  {
    ClaimRow row{claim_id::kFary,
                 "a closed curve in a unit ball has average curvature at least 1, with equality for great circles",
                 {}};
    auto rng = make_rng(seed, "fary");
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < config.fary_trials; ++t) {
      worst = std::min(worst, fary_check(random_closed_curve_in_ball(config.fary_vertices, rng)).average_curvature);
    }
    row.add("random_closed.min_average", worst, 1.0, 5e-3, Comparison::AtLeast);

    DiscreteCurve great = sample_circle_arc(1.0, 2.0 * kPi / static_cast<double>(config.fary_vertices),
                                            config.fary_vertices, 3);
    great.closed = true;
    row.add("great_circle.average", fary_check(great).average_curvature, 1.0, 1e-6);
    report.claims.push_back(std::move(row));
  }

  {
    ClaimRow row{claim_id::kMonotonicity,
                 "for a length pi/2 curve with curvature below 2, <y - x, gamma'(t0)> > 0 at every t0", {}};
    auto rng = make_rng(seed, "monotonicity");
    std::uniform_int_distribution<std::size_t> dims(2, 5);
    std::uniform_int_distribution<std::size_t> index(0, edges);
    double worst = std::numeric_limits<double>::infinity();
    std::size_t positive = 0;
    for (std::size_t t = 0; t < config.monotonicity_trials; ++t) {
      const DiscreteCurve c = random_bounded_curve(edges, step, 1.9, dims(rng), rng);
      const double v = monotonicity_check(c, index(rng));
      worst = std::min(worst, v);
      positive += v > 0.0 ? 1 : 0;
    }
    row.add("random_curves.min_inner_product", worst, 0.0, 0.0, Comparison::StrictlyAbove);
    row.add("random_curves.positive_fraction",
            config.monotonicity_trials ? static_cast<double>(positive) / static_cast<double>(config.monotonicity_trials) : 1.0,
            1.0, 0.0);
    report.claims.push_back(std::move(row));
  }

  {
    // Reflection surgery at a tangency: the reflected curve still has
    // curvature below 2, so its endpoint gap exceeds 1.
    ClaimRow row{"curves.reflection_surgery",
                 "reflecting the part of a curve before a tangency with a hyperplane keeps curvature below 2 and "
                 "the endpoint gap above 1",
                 {}};
    const double rho = 0.6;
    const DiscreteCurve arc = inscribed_circle_arc(rho, step, edges + 1);
    const std::size_t split = edges / 3;
    const Eigen::VectorXd touch = arc.vertices[split];
    Hyperplane mirror;
    mirror.normal = touch.normalized();
    mirror.offset = mirror.normal.dot(touch);
    const DiscreteCurve reflected = reflect_concat(arc, split, mirror);
    const DiscreteCurve half_circle = inscribed_circle_arc(0.5, step, edges + 1);
    const BowReport r = bow_check(half_circle, reflected);
    row.add("valid", r.status == ComparisonStatus::Valid ? 1.0 : 0.0, 1.0, 0.0);
    row.add("reflected_gap", r.endpoint_gap_2, 1.0, 0.0, Comparison::StrictlyAbove);
    report.claims.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------

VerificationReport run_suite(SuiteName name, const SuiteConfig& config, std::uint64_t seed, bool parallel) {
  switch (name) {
    case SuiteName::Veronese: return run_veronese_suite(config, seed);
    case SuiteName::Rigidity: return run_rigidity_suite(config, seed);
    case SuiteName::Torus: return run_torus_suite(config, seed);
    case SuiteName::Curves: return run_curves_suite(config, seed);
    case SuiteName::All: break;
  }
  using Runner = VerificationReport (*)(const SuiteConfig&, std::uint64_t);
  const Runner runners[] = {run_veronese_suite, run_rigidity_suite, run_torus_suite, run_curves_suite};
  VerificationReport all;
  all.suite = "all";
  if (parallel) {
    std::vector<std::future<VerificationReport>> jobs;
    for (Runner r : runners) jobs.push_back(std::async(std::launch::async, r, std::cref(config), seed));
    for (auto& j : jobs) all.append(j.get());
  } else {
    for (Runner r : runners) all.append(r(config, seed));
  }
  return all;
}

GeodesicRun sample_geodesic(const VeroneseSpace& space, double length, double step, std::uint64_t seed) {
  auto rng = make_rng(seed, "dump/" + space.name());
  const ImplicitManifold m = projection_variety(space);
  const AmbientPoint x = random_point(space, rng);
  const Eigen::VectorXd u = m.frame_at(x).random_unit_tangent(rng);
  return integrate_geodesic(m, {x, u, 0.0}, length, step);
}

void write_geodesic_csv(std::ostream& out, const ImplicitManifold& m, const GeodesicRun& run) {
  out << "s";
  for (std::size_t d = 0; d < m.ambient_dim(); ++d) out << ",x" << d;
  out << ",residual\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < run.curve.size(); ++i) {
    const Eigen::VectorXd& x = run.curve.vertices[i];
    out << static_cast<double>(i) * run.curve.nominal_step;
    for (Eigen::Index d = 0; d < x.size(); ++d) out << ',' << x[d];
    out << ',' << m.constraint().value(x).norm() << '\n';
  }
}

VerificationReport run_torus_optimize(const TorusEmbedding& start, const OptimizeOptions& options) {
  start.validate();
  VerificationReport report;
  report.suite = "torus-optimize";
  report.environment.emplace_back("seed", std::to_string(options.seed));
  report.environment.emplace_back("budget", std::to_string(options.budget));
  report.environment.emplace_back("n", std::to_string(start.n));
  for (std::size_t j = 0; j < start.freqs.size(); ++j) {
    std::string k;
    for (Eigen::Index i = 0; i < start.freqs[j].size(); ++i) k += (i ? " " : "") + std::to_string(start.freqs[j][i]);
    report.environment.emplace_back("freq." + std::to_string(j), k);
  }

  const OptimizeResult res = optimize_weights(start.freqs, start.weights, options);
  for (std::size_t j = 0; j < res.weights.size(); ++j) {
    report.environment.emplace_back("weight." + std::to_string(j), format_real(res.weights[j]));
  }
  report.environment.emplace_back("evaluations", std::to_string(res.evaluations));
  report.environment.emplace_back("restarts", std::to_string(res.restarts));
  report.environment.emplace_back("converged", res.converged ? "true" : "false");
  for (std::size_t i = 0; i < res.history.size(); ++i) {
    report.environment.emplace_back("history." + std::to_string(i), format_real(res.history[i]));
  }

  const double bound = torus_curvature_bound(start.n);
  ClaimRow row{"torus.optimize",
               "optimized max kappa*R never falls below the lower bound sqrt(3n/(n+2))", {}};
  row.add("optimized_value", res.value, bound, 1e-6, Comparison::AtLeast);
  row.add("gap_to_bound", res.value - bound, 0.0, std::numeric_limits<double>::infinity(), Comparison::AtLeast);
  report.claims.push_back(std::move(row));
  return report;
}

}  // namespace normcurv
