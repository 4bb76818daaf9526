#ifndef SYMSHIFT_ESTIMATOR_HPP
#define SYMSHIFT_ESTIMATOR_HPP

#include <cstddef>

#include "symshift/filters.hpp"
#include "symshift/noise.hpp"

namespace symshift {

// theta_bar = arctan(x_1*/x_1) / (2 pi), or 1/4 when x_1 = 0. Value in (-1/4, 1/4].
double preliminary(const Observation& obs);

// Profile likelihood Phi(tau, h) = 1/2 sum_k h_k (x_k cos(2 pi k tau) + x_k* sin(2 pi k tau))^2.
// Requires obs.size() >= h.size().
double profile_likelihood(const Observation& obs, const Filter& h, double tau);

struct ProfileDerivs {
  double first = 0.0;   // sum_k h_k 2 pi k x_k(tau) x_k*(tau)
  double second = 0.0;  // sum_k h_k (2 pi k)^2 (x_k*(tau)^2 - x_k(tau)^2)
  double third = 0.0;   // -4 sum_k h_k (2 pi k)^3 x_k(tau) x_k*(tau)
};

ProfileDerivs profile_derivatives(const Observation& obs, const Filter& h, double tau);

struct LocalMaxResult {
  double tau = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

// Maximizer of Phi(., h) over [center - radius, center + radius]: 64-interval
// coarse grid, then golden-section refinement of the best bracket down to `tol`
// in tau. Exact ties are broken toward the interval center. Non-convergence
// (iteration cap before the bracket reaches tol) is reported, never silent.
LocalMaxResult local_maximize(const Observation& obs, const Filter& h, double center,
                              double radius, double tol);

struct EstimateReport {
  double theta_prelim = 0.0;
  double theta_hat = 0.0;
  double delta = 0.0;             // eps log(eps^-2)
  double delta_effective = 0.0;   // min(delta, (4 pi N)^-1)
  double curvature_at_opt = 0.0;  // Phi''(theta_hat)
  bool converged = false;
  std::size_t iterations = 0;
  Filter filter;
};

// PMLE with a caller-supplied filter: preliminary estimate, search interval
// [theta_bar +/- delta_effective], local maximization of Phi(., h).
EstimateReport estimate_with_filter(const Observation& obs, Filter h);

// Full data-driven procedure: build the block scheme from (obs.eps, beta_star),
// compute the penalized Stein filter, then maximize the profile likelihood
// around the preliminary estimate. Requires obs.size() >= N_eps.
EstimateReport estimate(const Observation& obs, double beta_star);

// Diagnostic: N^(1 - min(beta*,1.5)) <= ||f'|| / (2 ||f^(beta*)|| + 6 pi),
// the small-noise condition under which local concavity is guaranteed.
bool eps0_condition(const FourierSignal& f, double eps, double beta_star);

}  // namespace symshift

#endif  // SYMSHIFT_ESTIMATOR_HPP
