#ifndef SYMSHIFT_BLOCKS_HPP
#define SYMSHIFT_BLOCKS_HPP

#include <cstddef>
#include <vector>

namespace symshift {

// Weakly geometric block scheme over the frequencies 1..N:
// boundaries kappa_1 = 1 < ... < kappa_{J+1} = N+1, block B_j = [kappa_j, kappa_{j+1}).
struct BlockScheme {
  double eps = 0.0;
  double beta_star = 0.0;
  std::size_t N = 0;    // number of active frequencies
  std::size_t nu = 0;   // block growth parameter
  double rho = 0.0;     // nu^(-1/3)
  std::vector<std::size_t> kappas;     // J+1 boundaries
  std::vector<std::size_t> lengths;    // T_j, J entries
  std::vector<double> sigma_sq;        // sigma_j^2 = sum_{k in B_j} (2 pi k)^2
  std::vector<double> penalties;       // phi_j = sqrt(24 log(eps^-5) / T_j)

  std::size_t block_count() const { return lengths.size(); }
  // 0-based block index containing frequency k (1 <= k <= N)
  std::size_t block_of(std::size_t k) const;
};

// N_eps = max(5, floor((eps^2 log eps^-5)^(-1/(2 beta* + 1)))).
// Requires 0 < eps < 1 and beta* > 1.
std::size_t n_eps(double eps, double beta_star);

// Full scheme with nu = floor(exp(sqrt(log N_eps))).
BlockScheme build_scheme(double eps, double beta_star);

// Test hook: same construction with a caller-supplied nu >= 1.
BlockScheme build_scheme_fixed_nu(double eps, double beta_star, std::size_t nu);

// First `count` block boundaries for a given nu, before any truncation at N+1:
// kappa_1 = 1, kappa_2 = 1 + nu, kappa_j = kappa_{j-1} + floor*(nu rho (1+rho)^(j-2)),
// where floor*(x) is the largest integer strictly smaller than x, clamped at 1.
std::vector<std::size_t> raw_kappas(std::size_t nu, std::size_t count);

// gamma_eps = max_j sigma_{j+1}^2 / sigma_j^2 (1 when the scheme has a single block)
double scheme_gamma(const BlockScheme& s);

}  // namespace symshift

#endif  // SYMSHIFT_BLOCKS_HPP
