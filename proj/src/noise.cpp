#include "symshift/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symshift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_shape(double eps, const std::vector<double>& x, const std::vector<double>& xs) {
  if (x.empty()) throw std::invalid_argument("Observation: K must be >= 1");
  if (x.size() != xs.size())
    throw std::invalid_argument("Observation: x and x* must have equal length");
  if (!std::isfinite(eps)) throw std::invalid_argument("Observation: eps must be finite");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("Observation: x entries must be finite");
  for (double v : xs)
    if (!std::isfinite(v)) throw std::invalid_argument("Observation: x* entries must be finite");
}

}  // namespace

Observation::Observation(double eps, std::vector<double> x, std::vector<double> xs)
    : eps_(eps), x_(std::move(x)), xs_(std::move(xs)) {
  check_shape(eps_, x_, xs_);
  if (!(eps_ > 0.0)) throw std::invalid_argument("Observation: eps must be positive");
}

Observation::Observation(unchecked_t, double eps, std::vector<double> x,
                         std::vector<double> xs)
    : eps_(eps), x_(std::move(x)), xs_(std::move(xs)) {
  check_shape(eps_, x_, xs_);
  if (eps_ < 0.0) throw std::invalid_argument("Observation: eps must be nonnegative");
}

Observation simulate_sequence(const FourierSignal& f, double theta, double eps,
                              std::size_t K, GaussianStream& rng) {
  if (!(eps > 0.0)) throw std::invalid_argument("simulate_sequence: eps must be positive");
  if (K < 1) throw std::invalid_argument("simulate_sequence: K must be >= 1");
  std::vector<double> x(K), xs(K);
  for (std::size_t k = 1; k <= K; ++k) {
    const double a = kTwoPi * static_cast<double>(k) * theta;
    const double fk = f.coeff(k);
    x[k - 1] = fk * std::cos(a) + eps * rng();
    xs[k - 1] = fk * std::sin(a) + eps * rng();
  }
  return Observation(eps, std::move(x), std::move(xs));
}

Observation drift_sequence(const FourierSignal& f, double theta, double eps,
                           std::size_t K) {
  if (K < 1) throw std::invalid_argument("drift_sequence: K must be >= 1");
  std::vector<double> x(K), xs(K);
  for (std::size_t k = 1; k <= K; ++k) {
    const double a = kTwoPi * static_cast<double>(k) * theta;
    x[k - 1] = f.coeff(k) * std::cos(a);
    xs[k - 1] = f.coeff(k) * std::sin(a);
  }
  return Observation(unchecked, eps, std::move(x), std::move(xs));
}

namespace {

PathSample make_path(const FourierSignal& f, double theta, double eps, std::size_t M,
                     GaussianStream* rng) {
  if (M < 2) throw std::invalid_argument("simulate_path: M must be >= 2");
  PathSample p;
  p.eps = eps;
  p.cells = M;
  p.increments.resize(M);
  const double dt = 1.0 / static_cast<double>(M);
  const double noise_scale = eps * std::sqrt(dt);
  for (std::size_t i = 0; i < M; ++i) {
    const double t = -0.5 + (static_cast<double>(i) + 0.5) * dt;
    double inc = f.eval(t - theta) * dt;
    if (rng) inc += noise_scale * (*rng)();
    p.increments[i] = inc;
  }
  return p;
}

}  // namespace

PathSample simulate_path(const FourierSignal& f, double theta, double eps,
                         std::size_t M, GaussianStream& rng) {
  if (!(eps > 0.0)) throw std::invalid_argument("simulate_path: eps must be positive");
  return make_path(f, theta, eps, M, &rng);
}

PathSample drift_path(const FourierSignal& f, double theta, double eps, std::size_t M) {
  if (eps < 0.0) throw std::invalid_argument("drift_path: eps must be nonnegative");
  return make_path(f, theta, eps, M, nullptr);
}

Observation extract_coefficients(const PathSample& path, std::size_t K) {
  if (K < 1) throw std::invalid_argument("extract_coefficients: K must be >= 1");
  if (4 * K > path.cells)
    throw std::invalid_argument("extract_coefficients: K must not exceed M/4");
  const std::size_t M = path.cells;
  const double dt = 1.0 / static_cast<double>(M);
  std::vector<double> x(K, 0.0), xs(K, 0.0);
  for (std::size_t k = 1; k <= K; ++k) {
    double cs = 0.0, sn = 0.0;
    const double w = kTwoPi * static_cast<double>(k);
    for (std::size_t i = 0; i < M; ++i) {
      const double t = -0.5 + (static_cast<double>(i) + 0.5) * dt;
      cs += std::cos(w * t) * path.increments[i];
      sn += std::sin(w * t) * path.increments[i];
    }
    x[k - 1] = std::numbers::sqrt2 * cs;
    xs[k - 1] = std::numbers::sqrt2 * sn;
  }
  return Observation(unchecked, path.eps, std::move(x), std::move(xs));
}

Observation rotate_frame(const Observation& obs, double tau) {
  const std::size_t K = obs.size();
  std::vector<double> x(K), xs(K);
  for (std::size_t k = 1; k <= K; ++k) {
    const double a = kTwoPi * static_cast<double>(k) * tau;
    const double c = std::cos(a), s = std::sin(a);
    const double xk = obs.x()[k - 1], xsk = obs.xs()[k - 1];
    x[k - 1] = xk * c + xsk * s;
    xs[k - 1] = -xk * s + xsk * c;
  }
  return Observation(unchecked, obs.eps(), std::move(x), std::move(xs));
}

}  // namespace symshift
