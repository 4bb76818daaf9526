#ifndef SYMSHIFT_FILTERS_HPP
#define SYMSHIFT_FILTERS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "symshift/blocks.hpp"
#include "symshift/noise.hpp"
#include "symshift/signal.hpp"

namespace symshift {

// Filtering sequence h in [0,1]^N; implicitly zero beyond N. When `scheme`
// is present the values are constant on each of its blocks.
struct Filter {
  std::vector<double> h;
  std::optional<BlockScheme> scheme;

  std::size_t size() const { return h.size(); }
  // 1-based; zero beyond N
  double at(std::size_t k) const { return (k >= 1 && k <= h.size()) ? h[k - 1] : 0.0; }
};

// R^eps[f,h] = sum_k (2 pi k)^2 [ (1-h_k)^2 f_k^2 + eps^2 h_k^2 ],
// including the exact tail sum_{k>N} (2 pi k)^2 f_k^2 over f's stored support.
double risk(const FourierSignal& f, const Filter& h, double eps);

// R_j^eps[f,a] = (1-a)^2 ||f'||_(j)^2 + eps^2 a^2 sigma_j^2 for the 0-based
// block j of `scheme`.
double block_risk(const FourierSignal& f, double a, const BlockScheme& scheme,
                  std::size_t j, double eps);

// Best blockwise-constant filter for known f:
//   h_j = ||f'||_(j)^2 / (||f'||_(j)^2 + eps^2 sigma_j^2).
Filter oracle_blockwise(const FourierSignal& f, const BlockScheme& scheme, double eps);

// Penalized blockwise Stein filter computed from the data:
//   h_j = (1 - eps^2 sigma_j^2 (1+phi_j) / ((||y'||_(j)^2 - 2 eps^2 sigma_j^2)_+ + eps^2 sigma_j^2))_+
// with ||y'||_(j)^2 = sum_{k in B_j} (2 pi k)^2 (x_k^2 + x_k*^2). Depends on the
// observation only through those rotation-invariant magnitudes.
// Requires obs.size() >= scheme.N and matching noise levels.
Filter stein_filter(const Observation& obs, const BlockScheme& scheme);

// Exact minimizer of R^eps[f,.] over nonincreasing filters h_1 >= ... >= h_N.
// The risk is sum_k w_k (h_k - t_k)^2 + const with w_k = (2 pi k)^2 (f_k^2 + eps^2)
// and t_k = f_k^2 / (f_k^2 + eps^2), so the minimizer is the weighted antitonic
// regression of the targets (pool-adjacent-violators); values stay in [0,1).
Filter monotone_oracle(const FourierSignal& f, double eps, std::size_t N);

// W_eps = (L/eps^2 * (beta+2)(2 beta+1) / ((2 pi)^(2 beta) (beta-1)))^(1/(2 beta+1))
double pinsker_cutoff(double beta, double L, double eps);

// Pinsker-type filter truncated at N. With head = true:
//   h_k = 1 for k <= W_eps / log(eps^-2), (1 - (k/W_eps)^(beta-1))_+ otherwise;
// with head = false the plain tail form is used for every k.
// Requires beta > 1, L > 0, 0 < eps < 1.
Filter pinsker_filter(double beta, double L, double eps, std::size_t N, bool head);

// C(beta,L) = 1/3 ((beta-1)/(2 pi (beta+2)))^((2 beta-2)/(2 beta+1)) (L(2 beta+1))^(3/(2 beta+1))
double pinsker_constant(double beta, double L);

// sup of R^eps[f,h] over the ellipsoid sum_k (2 pi k)^(2 beta) f_k^2 <= L^2:
//   eps^2 sum_k (2 pi k)^2 h_k^2 + L^2 max((2 pi k)^(2-2 beta) (1-h_k)^2),
// the max taken over k = 1..N plus the tail value at k = N+1. Requires beta > 1.
double worst_case_sobolev_risk(const Filter& h, double beta, double L, double eps);

}  // namespace symshift

#endif  // SYMSHIFT_FILTERS_HPP
