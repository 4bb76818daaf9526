#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "symshift/blocks.hpp"

using namespace symshift;

TEST_CASE("n_eps closed form") {
  // frozen against a 40-digit evaluation of the closed form
  CHECK(n_eps(0.05, 2.0) == 5);    // raw 1.9289..., floored then lifted to 5
  CHECK(n_eps(1e-4, 2.0) == 18);   // raw 18.5076...
  CHECK(n_eps(1e-4, 1.5) == 38);   // raw 38.3873...

  CHECK_THROWS_AS(n_eps(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(n_eps(1.5, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(n_eps(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(n_eps(-0.1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(n_eps(0.01, 1.0), std::invalid_argument);
}

TEST_CASE("scheme at eps=1e-4, beta*=2") {
  const BlockScheme s = build_scheme(1e-4, 2.0);
  CHECK(s.N == 18);
  CHECK(s.nu == 5);
  CHECK(s.rho == doctest::Approx(std::pow(5.0, -1.0 / 3.0)).epsilon(1e-14));
  CHECK(s.kappas == std::vector<std::size_t>{1, 6, 10, 17, 19});
  CHECK(s.lengths == std::vector<std::size_t>{5, 4, 7, 2});

  // sigma_j^2 = 4 pi^2 * (sum of k^2 over the block)
  const double p2 = 4.0 * std::numbers::pi * std::numbers::pi;
  CHECK(s.sigma_sq[0] == doctest::Approx(p2 * 55.0).epsilon(1e-13));     // 1..5
  CHECK(s.sigma_sq[1] == doctest::Approx(p2 * 230.0).epsilon(1e-13));    // 6..9
  CHECK(s.sigma_sq[2] == doctest::Approx(p2 * 1211.0).epsilon(1e-13));   // 10..16
  CHECK(s.sigma_sq[3] == doctest::Approx(p2 * 613.0).epsilon(1e-13));    // 17..18

  // phi_j frozen from the closed form sqrt(24 log(eps^-5) / T_j)
  CHECK(s.penalties[0] == doctest::Approx(14.8676887554).epsilon(1e-10));
  CHECK(s.penalties[1] == doctest::Approx(16.6225813627).epsilon(1e-10));
  CHECK(s.penalties[2] == doctest::Approx(12.5654904096).epsilon(1e-10));
  CHECK(s.penalties[3] == doctest::Approx(23.5078800048).epsilon(1e-10));

  CHECK(scheme_gamma(s) == doctest::Approx(1211.0 / 230.0).epsilon(1e-13));
}

TEST_CASE("scheme at the desk fixture scale eps=0.01, beta*=2") {
  const BlockScheme s = build_scheme(0.01, 2.0);
  CHECK(s.N == 5);
  CHECK(s.nu == 3);
  CHECK(s.kappas == std::vector<std::size_t>{1, 4, 6});
  CHECK(s.lengths == std::vector<std::size_t>{3, 2});
}

TEST_CASE("raw kappa sequences") {
  // hand-executed with rho = nu^(-1/3)
  CHECK(raw_kappas(3, 4) == std::vector<std::size_t>{1, 4, 7, 12});
  // nu = 8 gives rho = 1/2 and an exactly integral increment 4*1.5 = 6,
  // whose strictly-smaller floor is 5
  CHECK(raw_kappas(8, 4) == std::vector<std::size_t>{1, 9, 14, 22});
  CHECK(raw_kappas(1, 5) == std::vector<std::size_t>{1, 2, 3, 6, 13});
  CHECK_THROWS_AS(raw_kappas(0, 3), std::invalid_argument);
}

TEST_CASE("degenerate single-block scheme") {
  // nu so large that kappa_2 would overshoot N+1
  const BlockScheme s = build_scheme_fixed_nu(0.05, 2.0, 40);
  CHECK(s.N == 5);
  CHECK(s.kappas == std::vector<std::size_t>{1, 6});
  CHECK(s.block_count() == 1);
  CHECK(scheme_gamma(s) == 1.0);
}

TEST_CASE("scheme_gamma on a handmade two-block scheme") {
  const double p2 = 4.0 * std::numbers::pi * std::numbers::pi;
  BlockScheme s;
  s.eps = 0.1;
  s.beta_star = 2.0;
  s.N = 2;
  s.nu = 1;
  s.rho = 1.0;
  s.kappas = {1, 2, 3};
  s.lengths = {1, 1};
  s.sigma_sq = {p2, p2 * 4.0};
  s.penalties = {1.0, 1.0};
  CHECK(scheme_gamma(s) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("scheme invariants over the eps x beta* grid") {
  const double p2 = 4.0 * std::numbers::pi * std::numbers::pi;
  for (double exponent = 1.5; exponent <= 6.0 + 1e-9; exponent += 0.5) {
    const double eps = std::pow(10.0, -exponent);
    for (double beta_star : {1.25, 1.5, 2.0, 3.0}) {
      const BlockScheme s = build_scheme(eps, beta_star);
      const std::size_t J = s.block_count();
      REQUIRE(J >= 1);
      REQUIRE(s.kappas.size() == J + 1);
      CHECK(s.kappas.front() == 1);
      CHECK(s.kappas.back() == s.N + 1);

      std::size_t total = 0;
      for (std::size_t j = 0; j < J; ++j) {
        CHECK(s.kappas[j] < s.kappas[j + 1]);
        CHECK(s.lengths[j] == s.kappas[j + 1] - s.kappas[j]);
        CHECK(s.lengths[j] >= 1);
        total += s.lengths[j];
        CHECK(s.sigma_sq[j] > 0.0);
        CHECK(s.penalties[j] > 0.0);

        // max_{k in B_j} (2 pi k)^2 <= 3 sigma_j^2 / T_j
        const double kmax = static_cast<double>(s.kappas[j + 1] - 1);
        CHECK(p2 * kmax * kmax <=
              3.0 * s.sigma_sq[j] / static_cast<double>(s.lengths[j]) * (1.0 + 1e-12));

        // phi_j^2 T_j = 24 log eps^-5 up to rounding
        const double lhs = s.penalties[j] * s.penalties[j] * static_cast<double>(s.lengths[j]);
        CHECK(lhs == doctest::Approx(24.0 * 5.0 * std::log(1.0 / eps)).epsilon(1e-12));
      }
      CHECK(total == s.N);

      // gamma is bounded; it is NOT monotone along the grid (the growth
      // parameter nu jumps discretely), so only the envelope is asserted
      const double gamma = scheme_gamma(s);
      CHECK(gamma >= 1.0);
      CHECK(gamma <= std::pow(1.0 + s.rho, 4.0) + 1e-9);
    }
  }
}

TEST_CASE("block_of locates frequencies") {
  const BlockScheme s = build_scheme(1e-4, 2.0);
  CHECK(s.block_of(1) == 0);
  CHECK(s.block_of(5) == 0);
  CHECK(s.block_of(6) == 1);
  CHECK(s.block_of(16) == 2);
  CHECK(s.block_of(17) == 3);
  CHECK(s.block_of(18) == 3);
  CHECK_THROWS_AS(s.block_of(0), std::invalid_argument);
  CHECK_THROWS_AS(s.block_of(19), std::invalid_argument);
}
