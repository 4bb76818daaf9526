#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "symshift/rng.hpp"
#include "symshift/signal.hpp"

using namespace symshift;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
}  // namespace

TEST_CASE("deriv_norm_sq on small signals") {
  CHECK(FourierSignal({1.0}).deriv_norm_sq() == doctest::Approx(4.0 * kPi2).epsilon(1e-14));
  CHECK(FourierSignal({0.0, 0.0, 0.0}).deriv_norm_sq() == 0.0);
  CHECK(FourierSignal({1.0, 0.5}).deriv_norm_sq() ==
        doctest::Approx(8.0 * kPi2).epsilon(1e-14));
}

TEST_CASE("sobolev_norm_sq") {
  const double p4 = std::pow(2.0 * kPi, 4.0);
  CHECK(FourierSignal({1.0}).sobolev_norm_sq(2.0) == doctest::Approx(p4).epsilon(1e-14));

  const FourierSignal f({1.0, 0.5});
  CHECK(f.sobolev_norm_sq(1.0) == doctest::Approx(f.deriv_norm_sq()).epsilon(1e-14));

  // frozen from a 40-digit term-by-term evaluation
  CHECK(FourierSignal({0.3, 0.1, 0.05}).sobolev_norm_sq(1.5) ==
        doctest::Approx(58.911925692569658333).epsilon(1e-14));

  CHECK_THROWS_AS(f.sobolev_norm_sq(0.0), std::invalid_argument);
  CHECK_THROWS_AS(f.sobolev_norm_sq(-1.0), std::invalid_argument);
}

TEST_CASE("sobolev_norm_sq nondecreasing in beta") {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> c(1 + (rng.next() % 8));
    for (double& v : c) v = 2.0 * rng.uniform_halfopen() - 1.0;
    const FourierSignal f(c);
    double prev = f.sobolev_norm_sq(0.25);
    for (double beta : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      const double cur = f.sobolev_norm_sq(beta);
      CHECK(cur >= prev * (1.0 - 1e-12));
      prev = cur;
    }
  }
}

TEST_CASE("block_deriv_norm_sq") {
  const FourierSignal f({1.0, 1.0});
  CHECK(f.block_deriv_norm_sq(1, 2) == doctest::Approx(4.0 * kPi2).epsilon(1e-14));
  CHECK(f.block_deriv_norm_sq(1, 3) == doctest::Approx(20.0 * kPi2).epsilon(1e-14));
  CHECK(f.block_deriv_norm_sq(3, 5) == 0.0);
  CHECK_THROWS_AS(f.block_deriv_norm_sq(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(f.block_deriv_norm_sq(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(f.block_deriv_norm_sq(0, 2), std::invalid_argument);
}

TEST_CASE("blocks partition the derivative norm") {
  SplitMix64 rng(12);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<double> c(2 + (rng.next() % 12));
    for (double& v : c) v = 2.0 * rng.uniform_halfopen() - 1.0;
    const FourierSignal f(c);

    // random partition of 1..K into consecutive blocks
    std::size_t lo = 1;
    double total = 0.0;
    while (lo <= f.size()) {
      const std::size_t hi = std::min(f.size() + 1, lo + 1 + (rng.next() % 4));
      total += f.block_deriv_norm_sq(lo, hi);
      lo = hi;
    }
    CHECK(total == doctest::Approx(f.deriv_norm_sq()).epsilon(1e-12));
  }
}

TEST_CASE("class_check") {
  const double L_big = 2.0 * kPi2 * 10.0;
  const ClassMembership both = class_check(FourierSignal({1.0}), 0.5, 2.0, L_big);
  CHECK(both.in_f0);
  CHECK(both.in_sobolev);

  CHECK_FALSE(class_check(FourierSignal({0.1}), 0.5, 2.0, L_big).in_f0);

  const FourierSignal ones(std::vector<double>(20, 1.0));
  CHECK_FALSE(class_check(ones, 0.5, 2.0, 1.0).in_sobolev);

  CHECK_THROWS_AS(class_check(ones, 0.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(class_check(ones, 0.5, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("eval basics and symmetry") {
  const FourierSignal one({1.0});
  CHECK(one.eval(0.0) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK(std::abs(one.eval(0.25)) < 1e-12);

  const FourierSignal f({0.9, -0.3, 0.15, 0.05});
  for (int i = 0; i < 1000; ++i) {
    const double t = -0.5 + static_cast<double>(i) / 999.0;
    CHECK(std::abs(f.eval(t) - f.eval(-t)) < 1e-12);
    CHECK(std::abs(f.eval(t) - f.eval(t + 1.0)) < 1e-12);
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(FourierSignal(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(FourierSignal({1.0, std::nan("")}), std::invalid_argument);
  CHECK(FourierSignal({0.0}).size() == 1);  // the zero signal is representable
}

TEST_CASE("presets") {
  for (const auto& name : FourierSignal::preset_names())
    CHECK_NOTHROW(FourierSignal::preset(name));
  CHECK(FourierSignal::preset("fixture").coeffs() ==
        std::vector<double>{1.0, 0.7, 0.4, 0.2});
  CHECK(FourierSignal::preset("single").coeffs() == std::vector<double>{1.0});
  CHECK_THROWS_AS(FourierSignal::preset("nope"), std::invalid_argument);

  // the decaying presets sit just inside the corresponding Sobolev class
  const FourierSignal p2 = FourierSignal::preset("poly2");
  CHECK(p2.coeff(2) == doctest::Approx(std::pow(2.0, -2.55)).epsilon(1e-14));
  CHECK(std::isfinite(p2.sobolev_norm_sq(2.0)));
}
