// Acceptance run: executes every suite with the default configuration and
// re-checks each criterion against thresholds pinned here, independent of the
// tolerances the suites record in their reports. Prints one PASS/FAIL line
// per criterion; the exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "normcurv/config.hpp"
#include "normcurv/report.hpp"
#include "normcurv/suites.hpp"

using namespace normcurv;

namespace {

constexpr std::uint64_t kSeed = 0;
constexpr double kRuntimeLimitSeconds = 60.0;

const double kSqrt3 = std::sqrt(3.0);

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Accumulates the outcome for one criterion together with the worst margin.
struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

const ClaimEntry* entry(const ClaimRow& row, const std::string& label) {
  for (const auto& e : row.entries) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

double value(Verdict& v, const ClaimRow& row, const std::string& label) {
  const ClaimEntry* e = entry(row, label);
  v.require(e != nullptr, "missing entry " + label);
  return e ? e->measured : std::nan("");
}

void near(Verdict& v, const ClaimRow& row, const std::string& label, double expected, double tol) {
  const double m = value(v, row, label);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s = %.17g, expected %.17g +- %g", label.c_str(), m, expected, tol);
  v.require(std::abs(m - expected) <= tol, buf);
}

void at_most(Verdict& v, const ClaimRow& row, const std::string& label, double bound) {
  const double m = value(v, row, label);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s = %.17g exceeds %g", label.c_str(), m, bound);
  v.require(m <= bound, buf);
}

void at_least(Verdict& v, const ClaimRow& row, const std::string& label, double bound) {
  const double m = value(v, row, label);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s = %.17g below %g", label.c_str(), m, bound);
  v.require(m >= bound, buf);
}

const char* kPlanes[] = {"RP2", "CP2", "HP2", "OP2"};

struct Criterion {
  int number;
  const char* claim;
  const char* title;
  std::function<void(Verdict&, const ClaimRow&)> check;
};

}  // namespace

int main() {
  const SuiteConfig config;  // defaults
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport report = run_suite(SuiteName::All, config, kSeed);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::vector<Criterion> criteria{
      {1, claim_id::kNormalCurvature, "normal curvature equals 2 on RP2, CP2, HP2, OP2",
       [&](Verdict& v, const ClaimRow& row) {
         v.require(config.curvature_directions >= 1000, "fewer than 1000 directions per space");
         for (const char* s : kPlanes) near(v, row, s, 2.0, 1e-8);
         char buf[80];
         std::snprintf(buf, sizeof buf, "total runtime %.1f s over %.0f s", seconds, kRuntimeLimitSeconds);
         v.require(seconds <= kRuntimeLimitSeconds, buf);
       }},
      {2, claim_id::kSphereRadius, "enclosing radius equals sqrt(n/(2n+2))",
       [&](Verdict& v, const ClaimRow& row) {
         v.require(config.ball_samples >= 1000, "fewer than 1000 samples per space");
         for (const char* s : kPlanes) near(v, row, s, 1.0 / kSqrt3, 1e-4);
         near(v, row, "RP3", std::sqrt(3.0 / 8.0), 1e-4);
       }},
      {3, claim_id::kCircleGeodesics, "geodesics of length pi are planar circles of radius 1/2",
       [&](Verdict& v, const ClaimRow& row) {
         for (const char* s : kPlanes) {
           at_most(v, row, std::string(s) + ".closure", 1e-6);
           near(v, row, std::string(s) + ".radius", 0.5, 1e-6);
           at_most(v, row, std::string(s) + ".planarity", 1e-8);
         }
       }},
      {4, claim_id::kRigidityArithmetic, "chord 1 at distance pi/2; four-point simplex obstruction",
       [&](Verdict& v, const ClaimRow& row) {
         std::size_t chords = 0;
         for (const auto& e : row.entries) {
           if (ends_with(e.label, ".chord_at_pi_over_2")) {
             ++chords;
             near(v, row, e.label, 1.0, 1e-9);
           }
         }
         v.require(chords >= 4, "chord entries missing");
         near(v, row, "simplex_circumradius(3,1)", 1.0 / kSqrt3, 1e-12);
         near(v, row, "simplex_circumradius(4,1)", std::sqrt(3.0 / 8.0), 1e-12);
         v.require(value(v, row, "simplex_circumradius(4,1)") > 1.0 / kSqrt3, "sqrt(3/8) not above 1/sqrt(3)");
       }},
      {5, claim_id::kMeanCurvature, "|H| = dim / r_n",
       [&](Verdict& v, const ClaimRow& row) {
         v.require(config.mean_curvature_points >= 100, "fewer than 100 points per space");
         const double dims[] = {2, 4, 8, 16};
         for (int i = 0; i < 4; ++i) near(v, row, kPlanes[i], dims[i] * kSqrt3, 1e-6);
       }},
      {6, claim_id::kSectionalCurvature, "sectional curvature 1 on RP2, in [1, 4] otherwise",
       [&](Verdict& v, const ClaimRow& row) {
         near(v, row, "RP2.min", 1.0, 1e-6);
         near(v, row, "RP2.max", 1.0, 1e-6);
         for (const char* s : {"CP2", "HP2", "OP2"}) {
           at_least(v, row, std::string(s) + ".min", 1.0 - 1e-6);
           at_most(v, row, std::string(s) + ".max", 4.0 + 1e-6);
         }
       }},
      {7, claim_id::kTorusConstant, "A2 torus: kappa*R = sqrt(3/2); optimizer recovers it",
       [&](Verdict& v, const ClaimRow& row) {
         v.require(config.torus_directions >= 10000, "fewer than 10^4 directions");
         near(v, row, "a2.mean_kappa_R", std::sqrt(1.5), 1e-12);
         at_most(v, row, "a2.variance_kappa_R", 1e-18);
         std::size_t starts = 0;
         for (const auto& e : row.entries) {
           if (starts_with(e.label, "optimizer.") && ends_with(e.label, ".value")) {
             ++starts;
             near(v, row, e.label, std::sqrt(1.5), 1e-4);
           }
           if (ends_with(e.label, ".evaluations")) at_most(v, row, e.label, 10000.0);
         }
         v.require(starts >= 2, "need the fixed start and at least one perturbed start");
         near(v, row, "n1.kappa_R", 1.0, 1e-12);
       }},
      {8, claim_id::kBowLemma, "bow lemma: no violations, half circle vs segment, rigidity",
       [&](Verdict& v, const ClaimRow& row) {
         v.require(config.bow_trials >= 1000, "fewer than 1000 trials");
         near(v, row, "random_pairs.violations", 0.0, 0.0);
         near(v, row, "random_pairs.invalid", 0.0, 0.0);
         near(v, row, "half_circle_vs_segment.gap1", 1.0, 1e-9);
         near(v, row, "half_circle_vs_segment.gap2", std::numbers::pi / 2.0, 1e-9);
         near(v, row, "half_circle_vs_segment.holds", 1.0, 0.0);
         near(v, row, "identical.rigidity_detected", 1.0, 0.0);
       }},
      {9, claim_id::kFary, "average curvature of closed curves in the unit ball is at least 1",
       [&](Verdict& v, const ClaimRow& row) {
         v.require(config.fary_trials >= 100, "fewer than 100 curves");
         at_least(v, row, "random_closed.min_average", 1.0 - 5e-3);
         near(v, row, "great_circle.average", 1.0, 1e-6);
       }},
      {10, claim_id::kMonotonicity, "<y - x, gamma'(t0)> > 0 for curvature below 2",
       [&](Verdict& v, const ClaimRow& row) {
         v.require(config.monotonicity_trials >= 1000, "fewer than 1000 curves");
         v.require(value(v, row, "random_curves.min_inner_product") > 0.0, "non-positive inner product");
         near(v, row, "random_curves.positive_fraction", 1.0, 0.0);
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    std::size_t rows = 0;
    const ClaimRow* row = nullptr;
    for (const auto& r : report.claims) {
      if (r.id == c.claim) {
        ++rows;
        row = &r;
      }
    }
    v.require(rows == 1, "expected exactly one claim row, found " + std::to_string(rows));
    if (row) {
      c.check(v, *row);
      v.require(row->pass(), "report marks the row as failing");
    }
    if (!v.ok) ++failures;
    std::printf("criterion %2d %-4s %s [%s]%s%s\n", c.number, v.ok ? "PASS" : "FAIL", c.title, c.claim,
                v.ok ? "" : ": ", v.note.c_str());
  }
  std::printf("runtime %.2f s (limit %.0f s), seed %llu\n", seconds, kRuntimeLimitSeconds,
              static_cast<unsigned long long>(kSeed));
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures, criteria.size());
  return failures ? 1 : 0;
}
