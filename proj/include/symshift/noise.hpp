#ifndef SYMSHIFT_NOISE_HPP
#define SYMSHIFT_NOISE_HPP

#include <cstddef>
#include <vector>

#include "symshift/rng.hpp"
#include "symshift/signal.hpp"

namespace symshift {

struct unchecked_t { explicit unchecked_t() = default; };
inline constexpr unchecked_t unchecked{};

// Observation in the sequence model: noise level eps and the paired
// coefficient sequences x_k, x_k* for k = 1..K.
class Observation {
 public:
  // validating constructor: eps > 0, equal lengths, K >= 1, finite entries
  Observation(double eps, std::vector<double> x, std::vector<double> xs);
  // test hook: same shape checks but allows eps = 0 (noiseless fixtures)
  Observation(unchecked_t, double eps, std::vector<double> x, std::vector<double> xs);

  double eps() const { return eps_; }
  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& xs() const { return xs_; }
  std::size_t size() const { return x_.size(); }

 private:
  double eps_;
  std::vector<double> x_, xs_;
};

// Discretized white-noise path: increments of x^eps over M uniform cells
// of [-1/2, 1/2].
struct PathSample {
  double eps = 0.0;
  std::size_t cells = 0;
  std::vector<double> increments;
};

// x_k = f_k cos(2 pi k theta) + eps xi_k, x_k* = f_k sin(2 pi k theta) + eps xi_k*.
// Draw order: k ascending, xi_k before xi_k*. Requires eps > 0, K >= 1.
Observation simulate_sequence(const FourierSignal& f, double theta, double eps,
                              std::size_t K, GaussianStream& rng);

// Noiseless test hook: drift coefficients only, nominal eps >= 0 recorded.
Observation drift_sequence(const FourierSignal& f, double theta, double eps,
                           std::size_t K);

// Euler scheme with midpoint drift and exact-variance Gaussian increments:
//   increment_i = f(t_i - theta) * dt + eps * sqrt(dt) * zeta_i,
// t_i the midpoint of cell i, dt = 1/M. Requires M >= 2, eps > 0.
PathSample simulate_path(const FourierSignal& f, double theta, double eps,
                         std::size_t M, GaussianStream& rng);

// Noiseless test hook for the path model.
PathSample drift_path(const FourierSignal& f, double theta, double eps, std::size_t M);

// Riemann-Stieltjes sums sqrt(2) sum_i cos(2 pi k t_i) increment_i (and the
// sine analog). Anti-aliasing guard: requires K <= M/4.
Observation extract_coefficients(const PathSample& path, std::size_t K);

// Frame change x_k(tau) = x_k cos(2 pi k tau) + x_k* sin(2 pi k tau),
// x_k*(tau) = -x_k sin(2 pi k tau) + x_k* cos(2 pi k tau).
// Preserves x_k^2 + x_k*^2 per coefficient.
Observation rotate_frame(const Observation& obs, double tau);

}  // namespace symshift

#endif  // SYMSHIFT_NOISE_HPP
