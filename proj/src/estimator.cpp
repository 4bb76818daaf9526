#include "symshift/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symshift/blocks.hpp"

namespace symshift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kCoarseIntervals = 64;
constexpr std::size_t kMaxIterations = 500;

void check_support(const Observation& obs, const Filter& h) {
  if (obs.size() < h.size())
    throw std::invalid_argument("profile likelihood: observation holds fewer coefficients than the filter");
}

}  // namespace

double preliminary(const Observation& obs) {
  const double x1 = obs.x()[0];
  if (x1 == 0.0) return 0.25;
  return std::atan(obs.xs()[0] / x1) / kTwoPi;
}

double profile_likelihood(const Observation& obs, const Filter& h, double tau) {
  check_support(obs, h);
  double s = 0.0;
  for (std::size_t k = 1; k <= h.size(); ++k) {
    const double hk = h.h[k - 1];
    if (hk == 0.0) continue;
    const double a = kTwoPi * static_cast<double>(k) * tau;
    const double v = obs.x()[k - 1] * std::cos(a) + obs.xs()[k - 1] * std::sin(a);
    s += hk * v * v;
  }
  return 0.5 * s;
}

ProfileDerivs profile_derivatives(const Observation& obs, const Filter& h, double tau) {
  check_support(obs, h);
  ProfileDerivs d;
  for (std::size_t k = 1; k <= h.size(); ++k) {
    const double hk = h.h[k - 1];
    if (hk == 0.0) continue;
    const double w = kTwoPi * static_cast<double>(k);
    const double a = w * tau;
    const double c = std::cos(a), s = std::sin(a);
    const double xt = obs.x()[k - 1] * c + obs.xs()[k - 1] * s;    // x_k(tau)
    const double xst = -obs.x()[k - 1] * s + obs.xs()[k - 1] * c;  // x_k*(tau)
    d.first += hk * w * xt * xst;
    d.second += hk * w * w * (xst * xst - xt * xt);
    d.third += -4.0 * hk * w * w * w * xt * xst;
  }
  return d;
}

LocalMaxResult local_maximize(const Observation& obs, const Filter& h, double center,
                              double radius, double tol) {
  if (!(radius > 0.0)) throw std::invalid_argument("local_maximize: radius must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("local_maximize: tol must be positive");
  check_support(obs, h);

  const double lo = center - radius, hi = center + radius;
  const auto phi = [&](double t) { return profile_likelihood(obs, h, t); };

  double best_tau = center;
  double best_val = phi(center);
  // exact ties go to the candidate nearer the interval center
  const auto consider = [&](double t, double v) {
    if (v > best_val ||
        (v == best_val && std::abs(t - center) < std::abs(best_tau - center))) {
      best_val = v;
      best_tau = t;
    }
  };

  const double step = (hi - lo) / static_cast<double>(kCoarseIntervals);
  std::size_t best_idx = 0;
  {
    double grid_best = -1.0;
    for (std::size_t i = 0; i <= kCoarseIntervals; ++i) {
      const double t = lo + static_cast<double>(i) * step;
      const double v = phi(t);
      consider(t, v);
      if (v > grid_best) {
        grid_best = v;
        best_idx = i;
      }
    }
  }

  // golden-section refinement of the bracket around the best coarse point
  double a = std::max(lo, lo + (static_cast<double>(best_idx) - 1.0) * step);
  double b = std::min(hi, lo + (static_cast<double>(best_idx) + 1.0) * step);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = phi(c), fd = phi(d);
  consider(c, fc);
  consider(d, fd);

  std::size_t iterations = 0;
  while (b - a > tol && iterations < kMaxIterations) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = phi(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = phi(d);
      consider(d, fd);
    }
    ++iterations;
  }
  consider(0.5 * (a + b), phi(0.5 * (a + b)));

  LocalMaxResult res;
  res.tau = best_tau;
  res.converged = (b - a) <= tol;
  res.iterations = iterations;
  return res;
}

EstimateReport estimate_with_filter(const Observation& obs, Filter h) {
  if (!(obs.eps() > 0.0))
    throw std::invalid_argument("estimate: observation noise level must be positive");
  if (h.size() < 1) throw std::invalid_argument("estimate: filter must be nonempty");

  EstimateReport rep;
  rep.theta_prelim = preliminary(obs);
  rep.delta = obs.eps() * std::log(1.0 / (obs.eps() * obs.eps()));
  // concavity is only guaranteed on a (4 pi N)^-1 neighborhood
  rep.delta_effective =
      std::min(rep.delta, 1.0 / (2.0 * kTwoPi * static_cast<double>(h.size())));

  const LocalMaxResult lm =
      local_maximize(obs, h, rep.theta_prelim, rep.delta_effective, 1e-12);
  rep.theta_hat = lm.tau;
  rep.converged = lm.converged;
  rep.iterations = lm.iterations;
  rep.curvature_at_opt = profile_derivatives(obs, h, lm.tau).second;
  rep.filter = std::move(h);
  return rep;
}

EstimateReport estimate(const Observation& obs, double beta_star) {
  const BlockScheme scheme = build_scheme(obs.eps(), beta_star);
  return estimate_with_filter(obs, stein_filter(obs, scheme));
}

bool eps0_condition(const FourierSignal& f, double eps, double beta_star) {
  const double N = static_cast<double>(n_eps(eps, beta_star));
  const double beta_hat = std::min(beta_star, 1.5);
  const double lhs = std::pow(N, 1.0 - beta_hat);
  const double rhs = std::sqrt(f.deriv_norm_sq()) /
                     (2.0 * std::sqrt(f.sobolev_norm_sq(beta_star)) + 6.0 * std::numbers::pi);
  return lhs <= rhs;
}

}  // namespace symshift
