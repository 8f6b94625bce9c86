#include "normcurv/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "normcurv/report.hpp"

namespace normcurv {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError("config key '" + key + "' expects a non-negative integer");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  double out = 0.0;
  in >> out;
  if (!in || !(in >> std::ws).eof()) throw ConfigError("config key '" + key + "' expects a real number");
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) out.push_back(parse_real(key, trim(item)));
  if (out.empty()) throw ConfigError("config key '" + key + "' expects a comma-separated list");
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_real(v[i]);
  return s;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string section;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    kv[section.empty() ? key : section + "." + key] = trim(line.substr(eq + 1));
  }
  return kv;
}

SuiteConfig SuiteConfig::from_key_values(const std::map<std::string, std::string>& kv) {
  SuiteConfig c;
  std::set<std::string> used;
  auto count = [&](const char* key, std::size_t& field) {
    if (auto it = kv.find(key); it != kv.end()) {
      field = parse_count(key, it->second);
      used.insert(key);
    }
  };
  auto real = [&](const char* key, double& field) {
    if (auto it = kv.find(key); it != kv.end()) {
      field = parse_real(key, it->second);
      used.insert(key);
    }
  };

  count("veronese.curvature_directions", c.curvature_directions);
  count("veronese.ball_samples", c.ball_samples);
  real("veronese.ball_tolerance", c.ball_tolerance);
  count("veronese.geodesics_per_space", c.geodesics_per_space);
  real("veronese.geodesic_step", c.geodesic_step);
  count("veronese.mean_curvature_points", c.mean_curvature_points);
  count("veronese.sectional_points", c.sectional_points);
  count("veronese.sectional_planes_per_point", c.sectional_planes_per_point);
  count("torus.directions", c.torus_directions);
  if (auto it = kv.find("torus.start"); it != kv.end()) {
    c.torus_start = parse_list("torus.start", it->second);
    used.insert("torus.start");
  }
  count("torus.random_starts", c.torus_random_starts);
  count("torus.budget", c.torus_budget);
  count("curves.bow_trials", c.bow_trials);
  count("curves.fary_trials", c.fary_trials);
  count("curves.monotonicity_trials", c.monotonicity_trials);
  count("curves.edges", c.curve_edges);
  count("curves.fary_vertices", c.fary_vertices);

  for (const auto& [key, value] : kv) {
    if (!used.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  if (!(c.geodesic_step > 0.0)) throw ConfigError("veronese.geodesic_step must be positive");
  if (!(c.ball_tolerance > 0.0)) throw ConfigError("veronese.ball_tolerance must be positive");
  if (c.torus_start.size() != 3) throw ConfigError("torus.start needs three weights (one per A2 frequency)");
  if (c.curve_edges < 4) throw ConfigError("curves.edges must be at least 4");
  if (c.fary_vertices < 3) throw ConfigError("curves.fary_vertices must be at least 3");
  return c;
}

SuiteConfig SuiteConfig::load(std::istream& in) { return from_key_values(parse_key_values(in)); }

SuiteConfig SuiteConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  return load(in);
}

std::vector<std::pair<std::string, std::string>> SuiteConfig::echo() const {
  return {
      {"veronese.curvature_directions", std::to_string(curvature_directions)},
      {"veronese.ball_samples", std::to_string(ball_samples)},
      {"veronese.ball_tolerance", format_real(ball_tolerance)},
      {"veronese.geodesics_per_space", std::to_string(geodesics_per_space)},
      {"veronese.geodesic_step", format_real(geodesic_step)},
      {"veronese.mean_curvature_points", std::to_string(mean_curvature_points)},
      {"veronese.sectional_points", std::to_string(sectional_points)},
      {"veronese.sectional_planes_per_point", std::to_string(sectional_planes_per_point)},
      {"torus.directions", std::to_string(torus_directions)},
      {"torus.start", join(torus_start)},
      {"torus.random_starts", std::to_string(torus_random_starts)},
      {"torus.budget", std::to_string(torus_budget)},
      {"curves.bow_trials", std::to_string(bow_trials)},
      {"curves.fary_trials", std::to_string(fary_trials)},
      {"curves.monotonicity_trials", std::to_string(monotonicity_trials)},
      {"curves.edges", std::to_string(curve_edges)},
      {"curves.fary_vertices", std::to_string(fary_vertices)},
  };
}

}  // namespace normcurv
