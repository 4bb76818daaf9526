#ifndef SYMSHIFT_TESTS_REFERENCE_HPP
#define SYMSHIFT_TESTS_REFERENCE_HPP

// Test-side oracles, independent of the library implementation paths they
// check: a long-double profile likelihood with finite-difference stencils,
// exhaustive/partition minimizers for the monotone filter problem, a generic
// 1-D grid+refinement minimizer, and an ellipsoid sampler.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "symshift/noise.hpp"
#include "symshift/rng.hpp"
#include "symshift/signal.hpp"

namespace testref {

inline constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

// Phi(tau) = 1/2 sum_k h_k (x_k cos(2 pi k tau) + x_k* sin(2 pi k tau))^2,
// evaluated in long double straight from the definition.
inline long double phi_ld(const symshift::Observation& obs, const std::vector<double>& h,
                          long double tau) {
  long double s = 0.0L;
  for (std::size_t k = 1; k <= h.size(); ++k) {
    const long double a = kTwoPiL * static_cast<long double>(k) * tau;
    const long double v = static_cast<long double>(obs.x()[k - 1]) * std::cos(a) +
                          static_cast<long double>(obs.xs()[k - 1]) * std::sin(a);
    s += static_cast<long double>(h[k - 1]) * v * v;
  }
  return 0.5L * s;
}

struct Fd5 {
  double d1, d2, d3;
};

// 5-point central stencils at step `h` on the long-double reference Phi
inline Fd5 fd5(const symshift::Observation& obs, const std::vector<double>& filt,
               double tau, double h) {
  const long double t = tau, s = h;
  const long double pm2 = phi_ld(obs, filt, t - 2.0L * s);
  const long double pm1 = phi_ld(obs, filt, t - s);
  const long double p0 = phi_ld(obs, filt, t);
  const long double pp1 = phi_ld(obs, filt, t + s);
  const long double pp2 = phi_ld(obs, filt, t + 2.0L * s);
  Fd5 out;
  out.d1 = static_cast<double>((pm2 - 8.0L * pm1 + 8.0L * pp1 - pp2) / (12.0L * s));
  out.d2 = static_cast<double>((-pm2 + 16.0L * pm1 - 30.0L * p0 + 16.0L * pp1 - pp2) /
                               (12.0L * s * s));
  out.d3 = static_cast<double>((-pm2 + 2.0L * pm1 - 2.0L * pp1 + pp2) / (2.0L * s * s * s));
  return out;
}

// 1-D minimization by dense grid plus recursive refinement around the best point
inline double grid_refine_min(const std::function<double(double)>& f, double lo, double hi,
                              std::size_t points, std::size_t rounds) {
  double best_x = lo, best_v = std::numeric_limits<double>::infinity();
  for (std::size_t round = 0; round < rounds; ++round) {
    const double step = (hi - lo) / static_cast<double>(points - 1);
    best_v = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points; ++i) {
      const double x = lo + static_cast<double>(i) * step;
      const double v = f(x);
      if (v < best_v) {
        best_v = v;
        best_x = x;
      }
    }
    lo = std::max(lo, best_x - step);
    hi = std::min(hi, best_x + step);
  }
  return best_x;
}

// Exact weighted antitonic (nonincreasing) least squares by enumerating all
// 2^(N-1) partitions of 1..N into consecutive level sets: the optimum is the
// feasible candidate (pooled means nonincreasing) with the smallest objective.
inline std::vector<double> antitonic_partition_oracle(const std::vector<double>& t,
                                                      const std::vector<double>& w) {
  const std::size_t n = t.size();
  std::vector<double> best;
  double best_obj = std::numeric_limits<double>::infinity();
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<double> fit(n);
    bool feasible = true;
    double prev_mean = std::numeric_limits<double>::infinity();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool boundary = (i == n - 1) || ((mask >> i) & 1u);
      if (!boundary) continue;
      double sw = 0.0, swt = 0.0;
      for (std::size_t j = start; j <= i; ++j) {
        sw += w[j];
        swt += w[j] * t[j];
      }
      const double mean = swt / sw;
      if (mean > prev_mean) {
        feasible = false;
        break;
      }
      for (std::size_t j = start; j <= i; ++j) fit[j] = mean;
      prev_mean = mean;
      start = i + 1;
    }
    if (!feasible) continue;
    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) obj += w[i] * (fit[i] - t[i]) * (fit[i] - t[i]);
    if (obj < best_obj) {
      best_obj = obj;
      best = fit;
    }
  }
  return best;
}

// Minimum of sum_{k<=N} (2 pi k)^2 [(1-h_k)^2 f_k^2 + eps^2 h_k^2] over all
// nonincreasing filters with every h_k on the grid {0, 1/m, ..., 1}. Dynamic
// programming with suffix minima; identical result to enumerating the full
// monotone grid, without the exponential cost.
inline double monotone_grid_min_risk(const symshift::FourierSignal& f, double eps,
                                     std::size_t N, std::size_t m) {
  const double two_pi = 6.283185307179586;
  std::vector<double> prev(m + 1), cur(m + 1);
  for (std::size_t k = 1; k <= N; ++k) {
    const double w = two_pi * static_cast<double>(k);
    const double fk2 = f.coeff(k) * f.coeff(k);
    if (k > 1) {
      // suffix minima: h_k = g/m may only be matched with h_{k-1} = g'/m, g' >= g
      for (std::size_t g = m; g-- > 0;) prev[g] = std::min(prev[g], prev[g + 1]);
    }
    for (std::size_t g = 0; g <= m; ++g) {
      const double v = static_cast<double>(g) / static_cast<double>(m);
      const double term = w * w * ((1.0 - v) * (1.0 - v) * fk2 + eps * eps * v * v);
      cur[g] = term + (k > 1 ? prev[g] : 0.0);
    }
    std::swap(prev, cur);
  }
  double best = prev[0];
  for (std::size_t g = 1; g <= m; ++g) best = std::min(best, prev[g]);
  return best;
}

inline double gaussian_from(symshift::SplitMix64& rng) {
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_halfopen();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Marsaglia-Tsang, boosted below alpha = 1
inline double gamma_sample(double alpha, symshift::SplitMix64& rng) {
  if (alpha < 1.0) {
    const double u = rng.uniform_open();
    return gamma_sample(alpha + 1.0, rng) * std::pow(u, 1.0 / alpha);
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = gaussian_from(rng);
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.uniform_open();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
  }
}

// Random point of the ellipsoid boundary sum_k (2 pi k)^(2 beta) f_k^2 = L^2
// over k = 1..dims, with Dirichlet(alpha) simplex weights; small alpha
// concentrates mass near vertices so the risk sup gets approached.
inline std::vector<double> ellipsoid_point(std::size_t dims, double beta, double L,
                                           double alpha, symshift::SplitMix64& rng) {
  std::vector<double> u(dims);
  double total = 0.0;
  for (std::size_t i = 0; i < dims; ++i) {
    u[i] = gamma_sample(alpha, rng);
    total += u[i];
  }
  std::vector<double> f(dims);
  const double two_pi = 6.283185307179586;
  for (std::size_t k = 1; k <= dims; ++k) {
    const double share = u[k - 1] / total;
    f[k - 1] = L * std::sqrt(share / std::pow(two_pi * static_cast<double>(k), 2.0 * beta));
  }
  return f;
}

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace testref

#endif  // SYMSHIFT_TESTS_REFERENCE_HPP
