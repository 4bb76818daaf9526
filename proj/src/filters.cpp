#include "symshift/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symshift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// weighted isotonic (nondecreasing) least-squares fit, classic PAVA stack
std::vector<double> isotonic_fit(const std::vector<double>& y, const std::vector<double>& w) {
  struct Level {
    double sum_wy, sum_w;
    std::size_t count;
    double mean() const { return sum_wy / sum_w; }
  };
  std::vector<Level> stack;
  stack.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    stack.push_back({w[i] * y[i], w[i], 1});
    while (stack.size() > 1 && stack[stack.size() - 2].mean() > stack.back().mean()) {
      Level top = stack.back();
      stack.pop_back();
      stack.back().sum_wy += top.sum_wy;
      stack.back().sum_w += top.sum_w;
      stack.back().count += top.count;
    }
  }
  std::vector<double> fit;
  fit.reserve(y.size());
  for (const Level& lvl : stack) fit.insert(fit.end(), lvl.count, lvl.mean());
  return fit;
}

}  // namespace

double risk(const FourierSignal& f, const Filter& h, double eps) {
  const std::size_t top = std::max(h.size(), f.size());
  double total = 0.0;
  for (std::size_t k = 1; k <= top; ++k) {
    const double w = kTwoPi * static_cast<double>(k);
    const double hk = h.at(k);
    const double fk = f.coeff(k);
    total += w * w * ((1.0 - hk) * (1.0 - hk) * fk * fk + eps * eps * hk * hk);
  }
  return total;
}

double block_risk(const FourierSignal& f, double a, const BlockScheme& scheme,
                  std::size_t j, double eps) {
  if (j >= scheme.block_count()) throw std::invalid_argument("block_risk: block index out of range");
  const double B = f.block_deriv_norm_sq(scheme.kappas[j], scheme.kappas[j + 1]);
  return (1.0 - a) * (1.0 - a) * B + eps * eps * a * a * scheme.sigma_sq[j];
}

Filter oracle_blockwise(const FourierSignal& f, const BlockScheme& scheme, double eps) {
  Filter out;
  out.h.assign(scheme.N, 0.0);
  for (std::size_t j = 0; j < scheme.block_count(); ++j) {
    const double B = f.block_deriv_norm_sq(scheme.kappas[j], scheme.kappas[j + 1]);
    const double value = B / (B + eps * eps * scheme.sigma_sq[j]);
    for (std::size_t k = scheme.kappas[j]; k < scheme.kappas[j + 1]; ++k)
      out.h[k - 1] = value;
  }
  out.scheme = scheme;
  return out;
}

Filter stein_filter(const Observation& obs, const BlockScheme& scheme) {
  if (obs.size() < scheme.N)
    throw std::invalid_argument("stein_filter: observation holds fewer coefficients than N_eps");
  const double eps = scheme.eps;
  if (std::abs(obs.eps() - eps) > 1e-12 * std::max(std::abs(eps), std::abs(obs.eps())))
    throw std::invalid_argument("stein_filter: observation and scheme noise levels differ");

  Filter out;
  out.h.assign(scheme.N, 0.0);
  for (std::size_t j = 0; j < scheme.block_count(); ++j) {
    double y2 = 0.0;  // ||y'||_(j)^2, rotation invariant
    for (std::size_t k = scheme.kappas[j]; k < scheme.kappas[j + 1]; ++k) {
      const double w = kTwoPi * static_cast<double>(k);
      const double xk = obs.x()[k - 1], xsk = obs.xs()[k - 1];
      y2 += w * w * (xk * xk + xsk * xsk);
    }
    const double es = eps * eps * scheme.sigma_sq[j];
    const double S = std::max(y2 - 2.0 * es, 0.0);
    const double value = std::max(1.0 - es * (1.0 + scheme.penalties[j]) / (S + es), 0.0);
    for (std::size_t k = scheme.kappas[j]; k < scheme.kappas[j + 1]; ++k)
      out.h[k - 1] = value;
  }
  out.scheme = scheme;
  return out;
}

Filter monotone_oracle(const FourierSignal& f, double eps, std::size_t N) {
  if (N < 1) throw std::invalid_argument("monotone_oracle: N must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("monotone_oracle: eps must be positive");

  // antitonic regression of t_k = f_k^2/(f_k^2+eps^2) with weights
  // w_k = (2 pi k)^2 (f_k^2 + eps^2): fit the reversed sequence isotonically
  std::vector<double> targets(N), weights(N);
  for (std::size_t k = 1; k <= N; ++k) {
    const double fk2 = f.coeff(k) * f.coeff(k);
    const double wk = kTwoPi * static_cast<double>(k);
    targets[N - k] = fk2 / (fk2 + eps * eps);
    weights[N - k] = wk * wk * (fk2 + eps * eps);
  }
  std::vector<double> fit = isotonic_fit(targets, weights);

  Filter out;
  out.h.resize(N);
  for (std::size_t k = 1; k <= N; ++k)
    out.h[k - 1] = std::clamp(fit[N - k], 0.0, 1.0);
  return out;
}

double pinsker_cutoff(double beta, double L, double eps) {
  if (!(beta > 1.0)) throw std::invalid_argument("pinsker_cutoff: beta must exceed 1");
  if (!(L > 0.0)) throw std::invalid_argument("pinsker_cutoff: L must be positive");
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("pinsker_cutoff: eps must lie in (0,1)");
  const double num = L / (eps * eps) * (beta + 2.0) * (2.0 * beta + 1.0);
  const double den = std::pow(kTwoPi, 2.0 * beta) * (beta - 1.0);
  return std::pow(num / den, 1.0 / (2.0 * beta + 1.0));
}

Filter pinsker_filter(double beta, double L, double eps, std::size_t N, bool head) {
  if (N < 1) throw std::invalid_argument("pinsker_filter: N must be >= 1");
  const double W = pinsker_cutoff(beta, L, eps);
  const double head_cut = W / std::log(1.0 / (eps * eps));  // gamma_eps * W_eps
  Filter out;
  out.h.resize(N);
  for (std::size_t k = 1; k <= N; ++k) {
    const double kd = static_cast<double>(k);
    if (head && kd <= head_cut) {
      out.h[k - 1] = 1.0;
    } else {
      out.h[k - 1] = std::max(1.0 - std::pow(kd / W, beta - 1.0), 0.0);
    }
  }
  return out;
}

double pinsker_constant(double beta, double L) {
  if (!(beta > 1.0)) throw std::invalid_argument("pinsker_constant: beta must exceed 1");
  if (!(L > 0.0)) throw std::invalid_argument("pinsker_constant: L must be positive");
  const double e1 = (2.0 * beta - 2.0) / (2.0 * beta + 1.0);
  const double e2 = 3.0 / (2.0 * beta + 1.0);
  return std::pow((beta - 1.0) / (kTwoPi * (beta + 2.0)), e1) *
         std::pow(L * (2.0 * beta + 1.0), e2) / 3.0;
}

double worst_case_sobolev_risk(const Filter& h, double beta, double L, double eps) {
  if (!(beta > 1.0)) throw std::invalid_argument("worst_case_sobolev_risk: beta must exceed 1");
  const std::size_t N = h.size();
  double variance = 0.0;
  double sup_bias = 0.0;
  for (std::size_t k = 1; k <= N; ++k) {
    const double w = kTwoPi * static_cast<double>(k);
    const double hk = h.h[k - 1];
    variance += eps * eps * w * w * hk * hk;
    sup_bias = std::max(sup_bias, std::pow(w, 2.0 - 2.0 * beta) * (1.0 - hk) * (1.0 - hk));
  }
  // beyond N the filter is zero; k = N+1 dominates the tail since beta > 1
  sup_bias = std::max(sup_bias, std::pow(kTwoPi * static_cast<double>(N + 1), 2.0 - 2.0 * beta));
  return variance + L * L * sup_bias;
}

}  // namespace symshift
