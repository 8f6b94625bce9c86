#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace normcurv {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plain-text "key = value" pairs grouped under "[section]" headers.
/// Keys are stored as "section.key"; '#' starts a comment.
std::map<std::string, std::string> parse_key_values(std::istream& in);

/// Settings for the verification suites. Every field has a default, so an
/// empty config file is valid.
struct SuiteConfig {
  // [veronese]
  std::size_t curvature_directions = 1000;
  std::size_t ball_samples = 1000;
  double ball_tolerance = 1e-7;
  std::size_t geodesics_per_space = 2;
  double geodesic_step = 1e-3;
  std::size_t mean_curvature_points = 100;
  std::size_t sectional_points = 20;
  std::size_t sectional_planes_per_point = 50;

  // [torus]
  std::size_t torus_directions = 10000;
  std::vector<double> torus_start{1.2, 0.9, 1.0};
  std::size_t torus_random_starts = 2;
  std::size_t torus_budget = 10000;

  // [curves]
  std::size_t bow_trials = 1000;
  std::size_t fary_trials = 100;
  std::size_t monotonicity_trials = 1000;
  std::size_t curve_edges = 400;
  std::size_t fary_vertices = 2000;

  static SuiteConfig from_key_values(const std::map<std::string, std::string>& kv);
  static SuiteConfig load(std::istream& in);
  static SuiteConfig load_file(const std::string& path);

  /// All settings as (key, value) pairs in a fixed order, for report headers.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

}  // namespace normcurv
