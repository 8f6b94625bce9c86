#include "normcurv/flat_torus.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace normcurv {

namespace {

constexpr double kPi = std::numbers::pi;

bool parallel(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = i + 1; j < a.size(); ++j) {
      if (static_cast<long long>(a[i]) * b[j] != static_cast<long long>(a[j]) * b[i]) return false;
    }
  }
  return true;
}

// kappa * R as a degree-0 homogeneous function of u, together with its gradient.
class CurvatureObjective {
 public:
  explicit CurvatureObjective(const TorusEmbedding& t) : g_(t.metric()), radius_(t.radius()) {
    k_.resize(t.n, static_cast<Eigen::Index>(t.freqs.size()));
    w2_.resize(static_cast<Eigen::Index>(t.freqs.size()));
    for (std::size_t j = 0; j < t.freqs.size(); ++j) {
      k_.col(static_cast<Eigen::Index>(j)) = t.freqs[j].cast<double>();
      w2_[static_cast<Eigen::Index>(j)] = t.weights[j] * t.weights[j];
    }
  }

  double value(const Eigen::VectorXd& u) const {
    const Eigen::ArrayXd p = (k_.transpose() * u).array();
    const double num = (w2_.array() * p.square().square()).sum();
    const double q = u.dot(g_ * u);
    return radius_ * std::sqrt(num) / q;
  }

  // Gradient restricted to the tangent space of the unit sphere at u.
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const {
    const Eigen::ArrayXd p = (k_.transpose() * u).array();
    const double num = (w2_.array() * p.square().square()).sum();
    const double q = u.dot(g_ * u);
    if (num == 0.0) return Eigen::VectorXd::Zero(u.size());
    const Eigen::VectorXd dnum = 4.0 * k_ * (w2_.array() * p.cube()).matrix();
    const Eigen::VectorXd dq = 2.0 * g_ * u;
    Eigen::VectorXd grad = radius_ * (0.5 / std::sqrt(num) * dnum / q - std::sqrt(num) * dq / (q * q));
    grad -= grad.dot(u) * u;
    return grad;
  }

 private:
  Eigen::MatrixXd g_;
  Eigen::MatrixXd k_;
  Eigen::VectorXd w2_;
  double radius_;
};

Eigen::VectorXd polish(const CurvatureObjective& f, Eigen::VectorXd u) {
  double fu = f.value(u);
  double alpha = 0.1;
  for (int it = 0; it < 400; ++it) {
    const Eigen::VectorXd g = f.gradient(u);
    const double gn = g.norm();
    if (gn < 1e-14) break;
    bool moved = false;
    while (alpha > 1e-18) {
      const Eigen::VectorXd cand = (u + (alpha / gn) * g).normalized();
      const double fc = f.value(cand);
      if (fc > fu) {
        u = cand;
        fu = fc;
        alpha *= 2.0;
        moved = true;
        break;
      }
      alpha *= 0.25;
    }
    if (!moved) break;
  }
  return u;
}

std::vector<Eigen::VectorXd> direction_grid(int n, std::size_t count, std::uint64_t seed, double* resolution,
                                            bool* certified) {
  std::vector<Eigen::VectorXd> dirs;
  dirs.reserve(count);
  if (n == 2) {
    for (std::size_t i = 0; i < count; ++i) {
      const double phi = kPi * static_cast<double>(i) / static_cast<double>(count);
      dirs.push_back(Eigen::Vector2d(std::cos(phi), std::sin(phi)));
    }
    *resolution = kPi / (2.0 * static_cast<double>(count));
    *certified = true;
  } else if (n == 3) {
    // Fibonacci lattice on the full sphere.
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * static_cast<double>(i);
      dirs.push_back(Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), z));
    }
    *resolution = 2.0 * std::sqrt(kPi / static_cast<double>(count));
    *certified = true;
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < count; ++i) {
      Eigen::VectorXd u(n);
      for (int d = 0; d < n; ++d) u[d] = normal(rng);
      dirs.push_back(u.normalized());
    }
    *resolution = std::numeric_limits<double>::infinity();
    *certified = false;
  }
  return dirs;
}

}  // namespace

void TorusEmbedding::validate() const {
  if (n < 1) throw std::invalid_argument("torus dimension must be at least 1");
  if (freqs.empty()) throw std::invalid_argument("torus needs at least one frequency");
  if (freqs.size() != weights.size()) throw std::invalid_argument("frequency and weight counts differ");
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    if (freqs[j].size() != n) throw std::invalid_argument("frequency vector has the wrong dimension");
    if (freqs[j].isZero()) throw std::invalid_argument("zero frequency vector");
    if (!(weights[j] > 0.0)) throw std::invalid_argument("weights must be positive");
    for (std::size_t i = 0; i < j; ++i) {
      if (parallel(freqs[i], freqs[j])) throw std::invalid_argument("frequency vectors must be pairwise non-parallel");
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(metric());
  if (eig.eigenvalues().minCoeff() <= 1e-12 * std::max(1.0, eig.eigenvalues().maxCoeff())) {
    throw std::invalid_argument("torus metric is degenerate (not an immersion)");
  }
}

Eigen::MatrixXd TorusEmbedding::metric() const {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const Eigen::VectorXd k = freqs[j].cast<double>();
    g += weights[j] * weights[j] * k * k.transpose();
  }
  return g;
}

double TorusEmbedding::radius() const {
  double s = 0.0;
  for (double w : weights) s += w * w;
  return std::sqrt(s);
}

Eigen::VectorXd TorusEmbedding::point(const Eigen::VectorXd& theta) const {
  Eigen::VectorXd x(2 * static_cast<Eigen::Index>(freqs.size()));
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const double phase = freqs[j].cast<double>().dot(theta);
    x[2 * static_cast<Eigen::Index>(j)] = weights[j] * std::cos(phase);
    x[2 * static_cast<Eigen::Index>(j) + 1] = weights[j] * std::sin(phase);
  }
  return x;
}

TorusEmbedding TorusEmbedding::with_weights(std::vector<double> w) const {
  TorusEmbedding t = *this;
  t.weights = std::move(w);
  return t;
}

std::vector<Eigen::VectorXi> coordinate_family(int n) {
  std::vector<Eigen::VectorXi> f;
  for (int i = 0; i < n; ++i) f.push_back(Eigen::VectorXi::Unit(n, i));
  return f;
}

std::vector<Eigen::VectorXi> coordinate_pair_family(int n) {
  std::vector<Eigen::VectorXi> f = coordinate_family(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) f.push_back(Eigen::VectorXi::Unit(n, i) + Eigen::VectorXi::Unit(n, j));
  }
  return f;
}

TorusEmbedding equal_weight_torus(int n, std::vector<Eigen::VectorXi> freqs) {
  TorusEmbedding t;
  t.n = n;
  t.weights.assign(freqs.size(), 1.0 / std::sqrt(static_cast<double>(freqs.size())));
  t.freqs = std::move(freqs);
  t.validate();
  return t;
}

double torus_curvature_bound(int n) { return std::sqrt(3.0 * n / (n + 2.0)); }

double torus_normal_curvature(const TorusEmbedding& t, const Eigen::VectorXd& u) {
  if (u.size() != t.n) throw std::invalid_argument("direction has the wrong dimension");
  if (u.isZero()) throw std::invalid_argument("direction must be nonzero");
  const double q = u.dot(t.metric() * u);
  if (!(q > 0.0)) throw std::invalid_argument("degenerate metric along the direction");
  const Eigen::VectorXd v = u / std::sqrt(q);
  double s = 0.0;
  for (std::size_t j = 0; j < t.freqs.size(); ++j) {
    const double p = t.freqs[j].cast<double>().dot(v);
    s += t.weights[j] * t.weights[j] * p * p * p * p;
  }
  return std::sqrt(s);
}

WorstDirection torus_worst_direction(const TorusEmbedding& t, const WorstDirectionOptions& opts) {
  t.validate();
  const CurvatureObjective f(t);
  WorstDirection out;
  if (t.n == 1) {
    out.direction = Eigen::VectorXd::Ones(1);
    out.max_value = f.value(out.direction);
    out.upper_bound = out.max_value;
    out.samples = 1;
    out.certified = true;
    return out;
  }

  bool certified = false;
  const auto dirs = direction_grid(t.n, std::max<std::size_t>(opts.grid_points, 8), opts.seed,
                                   &out.grid_resolution, &certified);
  std::vector<double> values(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    values[i] = f.value(dirs[i]);
    out.lipschitz_estimate = std::max(out.lipschitz_estimate, f.gradient(dirs[i]).norm());
  }
  out.samples = dirs.size();

  // Polish the best few well-separated grid points.
  std::vector<std::size_t> order(dirs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  const double separation = std::cos(std::min(kPi / 4.0, 4.0 * std::max(out.grid_resolution, 1e-3)));
  std::vector<std::size_t> starts;
  for (std::size_t idx : order) {
    if (starts.size() >= std::max<std::size_t>(opts.polish_starts, 1)) break;
    const bool far = std::all_of(starts.begin(), starts.end(), [&](std::size_t s) {
      return std::abs(dirs[s].dot(dirs[idx])) < separation;
    });
    if (far) starts.push_back(idx);
  }
  out.direction = dirs[order.front()];
  out.max_value = values[order.front()];
  for (std::size_t s : starts) {
    const Eigen::VectorXd u = polish(f, dirs[s]);
    const double v = f.value(u);
    if (v > out.max_value) {
      out.max_value = v;
      out.direction = u;
    }
  }
  out.certified = certified;
  out.upper_bound = certified ? values[order.front()] + out.lipschitz_estimate * out.grid_resolution
                              : std::numeric_limits<double>::infinity();
  out.upper_bound = std::max(out.upper_bound, out.max_value);
  return out;
}

// ---------------------------------------------------------------------------
// Weight optimization

namespace {

class WeightObjective {
 public:
  WeightObjective(TorusEmbedding base, WorstDirectionOptions inner) : base_(std::move(base)), inner_(inner) {}

  std::vector<double> weights(const Eigen::VectorXd& z) const {
    std::vector<double> w(base_.freqs.size(), 1.0);
    for (Eigen::Index i = 0; i < z.size(); ++i) w[static_cast<std::size_t>(i)] = std::exp(z[i]);
    double s = 0.0;
    for (double x : w) s += x * x;
    for (double& x : w) x /= std::sqrt(s);
    return w;
  }

  double operator()(const Eigen::VectorXd& z) {
    ++evaluations;
    try {
      return torus_worst_direction(base_.with_weights(weights(z)), inner_).max_value;
    } catch (const std::invalid_argument&) {
      return std::numeric_limits<double>::infinity();
    }
  }

  std::size_t evaluations = 0;

 private:
  TorusEmbedding base_;
  WorstDirectionOptions inner_;
};

struct Simplex {
  std::vector<Eigen::VectorXd> x;
  std::vector<double> f;
};

// One Nelder-Mead run; returns true when the simplex collapsed to tolerance.
bool nelder_mead(WeightObjective& obj, Simplex& s, std::size_t budget, double tol) {
  const std::size_t n = s.x.size() - 1;
  auto sort_simplex = [&] {
    std::vector<std::size_t> idx(s.x.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s.f[a] < s.f[b]; });
    Simplex t;
    for (std::size_t i : idx) {
      t.x.push_back(s.x[i]);
      t.f.push_back(s.f[i]);
    }
    s = std::move(t);
  };
  sort_simplex();
  while (obj.evaluations < budget) {
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) diameter = std::max(diameter, (s.x[i] - s.x[0]).norm());
    if (s.f[n] - s.f[0] <= tol && diameter <= 1e-9) return true;
    if (diameter <= 1e-13) return true;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(s.x[0].size());
    for (std::size_t i = 0; i < n; ++i) centroid += s.x[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd xr = centroid + (centroid - s.x[n]);
    const double fr = obj(xr);
    if (fr < s.f[0]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - s.x[n]);
      const double fe = obj(xe);
      if (fe < fr) {
        s.x[n] = xe;
        s.f[n] = fe;
      } else {
        s.x[n] = xr;
        s.f[n] = fr;
      }
    } else if (fr < s.f[n - 1]) {
      s.x[n] = xr;
      s.f[n] = fr;
    } else {
      const bool outside = fr < s.f[n];
      const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                         : Eigen::VectorXd(centroid + 0.5 * (s.x[n] - centroid));
      const double fc = obj(xc);
      if (fc < (outside ? fr : s.f[n])) {
        s.x[n] = xc;
        s.f[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          s.x[i] = s.x[0] + 0.5 * (s.x[i] - s.x[0]);
          s.f[i] = obj(s.x[i]);
        }
      }
    }
    sort_simplex();
  }
  return false;
}

}  // namespace

OptimizeResult optimize_weights(const std::vector<Eigen::VectorXi>& freqs, const std::vector<double>& initial,
                                const OptimizeOptions& opts) {
  if (freqs.empty()) throw std::invalid_argument("optimize_weights: no frequencies");
  TorusEmbedding base;
  base.n = static_cast<int>(freqs.front().size());
  base.freqs = freqs;
  base.weights = initial;
  base.validate();  // infeasible start is an error

  WeightObjective obj(base, opts.inner);
  const std::size_t dim = freqs.size() - 1;
  OptimizeResult result;

  // Log-weights relative to the last one.
  Eigen::VectorXd z(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) z[static_cast<Eigen::Index>(i)] = std::log(initial[i] / initial.back());

  double best = obj(z);
  if (dim == 0) {
    result.weights = obj.weights(z);
    result.value = best;
    result.evaluations = obj.evaluations;
    result.converged = true;
    result.history.push_back(best);
    return result;
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  double step = 0.2;
  bool converged = false;
  while (obj.evaluations < opts.budget) {
    Simplex s;
    s.x.push_back(z);
    s.f.push_back(best);
    // Randomly oriented initial simplex around the incumbent.
    Eigen::MatrixXd basis(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < basis.size(); ++i) basis.data()[i] = jitter(rng);
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(basis).householderQ();
    for (std::size_t i = 0; i < dim; ++i) {
      const Eigen::VectorXd x = z + step * q.col(static_cast<Eigen::Index>(i));
      s.x.push_back(x);
      s.f.push_back(obj(x));
    }
    const bool collapsed = nelder_mead(obj, s, opts.budget, opts.tolerance);
    const double improvement = best - s.f[0];
    if (s.f[0] < best) {
      best = s.f[0];
      z = s.x[0];
    }
    result.history.push_back(best);
    ++result.restarts;
    if (collapsed && improvement <= opts.tolerance && step < 1e-3) {
      converged = true;
      break;
    }
    step = collapsed && improvement <= opts.tolerance ? step * 0.1 : step;
  }

  result.weights = obj.weights(z);
  result.value = best;
  result.evaluations = obj.evaluations;
  result.converged = converged;
  return result;
}

// ---------------------------------------------------------------------------
// Config

TorusEmbedding read_torus_config(std::istream& in) {
  TorusEmbedding t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<double> values;
    double v = 0.0;
    while (ls >> v) values.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("torus config line " + std::to_string(line_no) + ": not a number");
    if (values.empty()) continue;
    if (values.size() < 2) {
      throw std::invalid_argument("torus config line " + std::to_string(line_no) + ": need a frequency and a weight");
    }
    const int n = static_cast<int>(values.size()) - 1;
    if (t.n == 0) t.n = n;
    if (n != t.n) throw std::invalid_argument("torus config line " + std::to_string(line_no) + ": dimension changed");
    Eigen::VectorXi k(n);
    for (int i = 0; i < n; ++i) {
      if (values[static_cast<std::size_t>(i)] != std::round(values[static_cast<std::size_t>(i)])) {
        throw std::invalid_argument("torus config line " + std::to_string(line_no) + ": frequencies must be integers");
      }
      k[i] = static_cast<int>(values[static_cast<std::size_t>(i)]);
    }
    t.freqs.push_back(k);
    t.weights.push_back(values.back());
  }
  t.validate();
  return t;
}

}  // namespace normcurv
