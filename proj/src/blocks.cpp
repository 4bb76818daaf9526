#include "symshift/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symshift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// largest integer strictly smaller than x, clamped below at 1 so that
// every block boundary advances
std::size_t strict_floor(double x) {
  double fx = std::floor(x);
  if (fx == x) fx -= 1.0;
  return fx < 1.0 ? 1 : static_cast<std::size_t>(fx);
}

double log_eps_m5(double eps) { return 5.0 * std::log(1.0 / eps); }

void check_eps_beta(double eps, double beta_star) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("blocks: eps must lie in (0,1)");
  if (!(beta_star > 1.0))
    throw std::invalid_argument("blocks: beta* must exceed 1");
}

BlockScheme assemble(double eps, double beta_star, std::size_t N, std::size_t nu) {
  BlockScheme s;
  s.eps = eps;
  s.beta_star = beta_star;
  s.N = N;
  s.nu = nu;
  s.rho = std::pow(static_cast<double>(nu), -1.0 / 3.0);

  s.kappas.push_back(1);
  if (1 + nu >= N + 1) {
    // degenerate: a single block 1..N
    s.kappas.push_back(N + 1);
  } else {
    s.kappas.push_back(1 + nu);
    std::size_t j = 3;
    while (s.kappas.back() < N + 1) {
      const double inc = static_cast<double>(nu) * s.rho *
                         std::pow(1.0 + s.rho, static_cast<double>(j - 2));
      s.kappas.push_back(s.kappas.back() + strict_floor(inc));
      ++j;
    }
    s.kappas.back() = N + 1;
  }

  const std::size_t J = s.kappas.size() - 1;
  const double l5 = log_eps_m5(eps);
  for (std::size_t j = 0; j < J; ++j) {
    const std::size_t T = s.kappas[j + 1] - s.kappas[j];
    s.lengths.push_back(T);
    double sig = 0.0;
    for (std::size_t k = s.kappas[j]; k < s.kappas[j + 1]; ++k) {
      const double w = kTwoPi * static_cast<double>(k);
      sig += w * w;
    }
    s.sigma_sq.push_back(sig);
    s.penalties.push_back(std::sqrt(24.0 * l5 / static_cast<double>(T)));
  }
  return s;
}

}  // namespace

std::size_t BlockScheme::block_of(std::size_t k) const {
  if (k < 1 || k > N) throw std::invalid_argument("block_of: frequency outside 1..N");
  const auto it = std::upper_bound(kappas.begin(), kappas.end(), k);
  return static_cast<std::size_t>(it - kappas.begin()) - 1;
}

std::size_t n_eps(double eps, double beta_star) {
  check_eps_beta(eps, beta_star);
  const double raw =
      std::pow(eps * eps * log_eps_m5(eps), -1.0 / (2.0 * beta_star + 1.0));
  const double floored = std::floor(raw);
  return std::max<std::size_t>(5, floored < 1.0 ? 1 : static_cast<std::size_t>(floored));
}

BlockScheme build_scheme(double eps, double beta_star) {
  const std::size_t N = n_eps(eps, beta_star);
  const std::size_t nu = static_cast<std::size_t>(
      std::floor(std::exp(std::sqrt(std::log(static_cast<double>(N))))));
  return assemble(eps, beta_star, N, nu);
}

BlockScheme build_scheme_fixed_nu(double eps, double beta_star, std::size_t nu) {
  if (nu < 1) throw std::invalid_argument("build_scheme_fixed_nu: nu must be >= 1");
  const std::size_t N = n_eps(eps, beta_star);
  return assemble(eps, beta_star, N, nu);
}

std::vector<std::size_t> raw_kappas(std::size_t nu, std::size_t count) {
  if (nu < 1) throw std::invalid_argument("raw_kappas: nu must be >= 1");
  const double rho = std::pow(static_cast<double>(nu), -1.0 / 3.0);
  std::vector<std::size_t> ks;
  for (std::size_t j = 1; j <= count; ++j) {
    if (j == 1) {
      ks.push_back(1);
    } else if (j == 2) {
      ks.push_back(1 + nu);
    } else {
      const double inc = static_cast<double>(nu) * rho *
                         std::pow(1.0 + rho, static_cast<double>(j - 2));
      ks.push_back(ks.back() + strict_floor(inc));
    }
  }
  return ks;
}

double scheme_gamma(const BlockScheme& s) {
  if (s.block_count() < 2) return 1.0;
  double g = 0.0;
  for (std::size_t j = 0; j + 1 < s.block_count(); ++j)
    g = std::max(g, s.sigma_sq[j + 1] / s.sigma_sq[j]);
  return g;
}

}  // namespace symshift
