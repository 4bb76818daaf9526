#include "symshift/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symshift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> poly_decay(double beta, std::size_t K) {
  std::vector<double> c(K);
  for (std::size_t k = 1; k <= K; ++k)
    c[k - 1] = std::pow(static_cast<double>(k), -(beta + 0.55));
  return c;
}

}  // namespace

FourierSignal::FourierSignal(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("FourierSignal: at least one coefficient required");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw std::invalid_argument("FourierSignal: coefficients must be finite");
}

FourierSignal FourierSignal::preset(std::string_view name) {
  if (name == "single") return FourierSignal({1.0});
  if (name == "fixture") return FourierSignal({1.0, 0.7, 0.4, 0.2});
  if (name == "poly2") return FourierSignal(poly_decay(2.0, 32));
  if (name == "poly15") return FourierSignal(poly_decay(1.5, 32));
  if (name == "zero") return FourierSignal({0.0});
  throw std::invalid_argument("unknown signal preset: " + std::string(name));
}

const std::vector<std::string>& FourierSignal::preset_names() {
  static const std::vector<std::string> names = {"single", "fixture", "poly2", "poly15", "zero"};
  return names;
}

double FourierSignal::eval(double t) const {
  double s = 0.0;
  for (std::size_t k = 1; k <= coeffs_.size(); ++k)
    s += coeffs_[k - 1] * std::cos(kTwoPi * static_cast<double>(k) * t);
  return std::numbers::sqrt2 * s;
}

double FourierSignal::deriv_norm_sq() const {
  double s = 0.0;
  for (std::size_t k = 1; k <= coeffs_.size(); ++k) {
    const double w = kTwoPi * static_cast<double>(k);
    s += w * w * coeffs_[k - 1] * coeffs_[k - 1];
  }
  return s;
}

double FourierSignal::sobolev_norm_sq(double beta) const {
  if (!(beta > 0.0)) throw std::invalid_argument("sobolev_norm_sq: beta must be positive");
  double s = 0.0;
  for (std::size_t k = 1; k <= coeffs_.size(); ++k)
    s += std::pow(kTwoPi * static_cast<double>(k), 2.0 * beta) * coeffs_[k - 1] * coeffs_[k - 1];
  return s;
}

double FourierSignal::block_deriv_norm_sq(std::size_t lo, std::size_t hi) const {
  if (lo < 1 || lo >= hi) throw std::invalid_argument("block_deriv_norm_sq: need 1 <= lo < hi");
  double s = 0.0;
  const std::size_t top = std::min<std::size_t>(hi - 1, coeffs_.size());
  for (std::size_t k = lo; k <= top; ++k) {
    const double w = kTwoPi * static_cast<double>(k);
    s += w * w * coeffs_[k - 1] * coeffs_[k - 1];
  }
  return s;
}

ClassMembership class_check(const FourierSignal& f, double rho, double beta_star,
                            double L_star) {
  if (!(rho > 0.0)) throw std::invalid_argument("class_check: rho must be positive");
  if (!(L_star > 0.0)) throw std::invalid_argument("class_check: L* must be positive");
  ClassMembership m;
  m.first_coeff = f.coeff(1);
  m.sobolev_norm_sq = f.sobolev_norm_sq(beta_star);
  m.in_f0 = std::abs(m.first_coeff) >= rho;
  m.in_sobolev = m.sobolev_norm_sq <= L_star * L_star;
  return m;
}

}  // namespace symshift
