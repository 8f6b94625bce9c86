#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "normcurv/config.hpp"
#include "normcurv/flat_torus.hpp"
#include "normcurv/manifold.hpp"
#include "normcurv/report.hpp"
#include "normcurv/veronese.hpp"

namespace normcurv {

enum class SuiteName { Veronese, Rigidity, Torus, Curves, All };

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SuiteName parse_suite_name(const std::string& name);
std::string to_string(SuiteName name);

// Claim ids of the acceptance rows, one per criterion.
namespace claim_id {
inline constexpr const char* kNormalCurvature = "veronese.normal_curvature";
inline constexpr const char* kSphereRadius = "veronese.enclosing_radius";
inline constexpr const char* kCircleGeodesics = "veronese.circle_geodesics";
inline constexpr const char* kRigidityArithmetic = "rigidity.chord_and_simplex";
inline constexpr const char* kMeanCurvature = "veronese.mean_curvature";
inline constexpr const char* kSectionalCurvature = "veronese.sectional_curvature";
inline constexpr const char* kTorusConstant = "torus.a2_constant";
inline constexpr const char* kBowLemma = "curves.bow_lemma";
inline constexpr const char* kFary = "curves.fary";
inline constexpr const char* kMonotonicity = "curves.monotonicity";
}  // namespace claim_id

VerificationReport run_veronese_suite(const SuiteConfig& config, std::uint64_t seed);
VerificationReport run_rigidity_suite(const SuiteConfig& config, std::uint64_t seed);
VerificationReport run_torus_suite(const SuiteConfig& config, std::uint64_t seed);
VerificationReport run_curves_suite(const SuiteConfig& config, std::uint64_t seed);

/// Runs one suite, or all four in a fixed order. With `parallel`, the suites
/// of "all" execute concurrently; the assembled report is identical.
VerificationReport run_suite(SuiteName name, const SuiteConfig& config, std::uint64_t seed, bool parallel = false);

/// Geodesic of the given length from a seeded random point and direction.
GeodesicRun sample_geodesic(const VeroneseSpace& space, double length, double step, std::uint64_t seed);

/// CSV columns: s, x0..x{D-1}, residual (constraint norm at the vertex).
void write_geodesic_csv(std::ostream& out, const ImplicitManifold& m, const GeodesicRun& run);

/// Weight optimization for a user frequency family, reported against the
/// lower bound sqrt(3n/(n+2)).
VerificationReport run_torus_optimize(const TorusEmbedding& start, const OptimizeOptions& options);

}  // namespace normcurv
