#ifndef SYMSHIFT_SIGNAL_HPP
#define SYMSHIFT_SIGNAL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace symshift {

// Symmetric 1-periodic signal represented by its cosine coefficients:
//   f(t) = sum_k sqrt(2) f_k cos(2 pi k t),  k = 1..K.
// Coefficients are stored densely from k = 1; indices beyond K are zero,
// so all tail sums over the stored support are exact.
class FourierSignal {
 public:
  explicit FourierSignal(std::vector<double> coeffs);

  // Named test signals: "single", "fixture", "poly2", "poly15", "zero".
  static FourierSignal preset(std::string_view name);
  static const std::vector<std::string>& preset_names();

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  // 1-based; zero beyond the stored support
  double coeff(std::size_t k) const {
    return (k >= 1 && k <= coeffs_.size()) ? coeffs_[k - 1] : 0.0;
  }

  // point value sum_k sqrt(2) f_k cos(2 pi k t); even and 1-periodic in t
  double eval(double t) const;

  // ||f'||^2 = sum_k (2 pi k)^2 f_k^2
  double deriv_norm_sq() const;

  // sum_k (2 pi k)^(2 beta) f_k^2, beta > 0
  double sobolev_norm_sq(double beta) const;

  // sum over lo <= k < hi of (2 pi k)^2 f_k^2; requires 1 <= lo < hi
  double block_deriv_norm_sq(std::size_t lo, std::size_t hi) const;

 private:
  std::vector<double> coeffs_;
};

struct ClassMembership {
  bool in_f0 = false;       // |f_1| >= rho
  bool in_sobolev = false;  // ||f^(beta*)|| <= L*
  double first_coeff = 0.0;
  double sobolev_norm_sq = 0.0;
};

// Membership in F_0(rho) and in the Sobolev class (beta*, L*).
// Requires rho > 0 and L* > 0.
ClassMembership class_check(const FourierSignal& f, double rho, double beta_star,
                            double L_star);

}  // namespace symshift

#endif  // SYMSHIFT_SIGNAL_HPP
