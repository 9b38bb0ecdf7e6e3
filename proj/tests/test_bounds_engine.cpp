#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>

#include "frozen_values.hpp"
#include "oracles.hpp"
#include "zetalab/bounds_engine.hpp"
#include "zetalab/error.hpp"
#include "zetalab/prime_tools.hpp"

using namespace zetalab;

TEST_SUITE("bounds_engine") {
  TEST_CASE("Gaussian full-mode equation against bisection") {
    const DecayEnvelope env = default_envelope(gaussian());
    const TauSolution s = solve_tau(env, 1.0, LogLogHeight{10.0}, BoundMode::full);
    const double ref = oracle::bisect([](double t) { return t + std::log(t + 2.0) - 10.0; }, 0.0, 10.0);
    CHECK(s.tau == doctest::Approx(ref).epsilon(1e-11));
    CHECK(s.tau == doctest::Approx(oracle::kTauGaussianLnlnH10).epsilon(1e-11));
    CHECK(s.residual <= 1e-9);
  }

  TEST_CASE("rational (1,3) equation against bisection") {
    const DecayEnvelope env = default_envelope(TestFunction::rational(1, 3));
    const TauSolution s = solve_tau(env, 1.0, LogLogHeight{20.0}, BoundMode::full);
    auto eq = [](double t) { return t + std::sqrt(5.0 / 3.0 * (t / 2.0 + 1.0)) + std::log(3.0) - 20.0; };
    CHECK(s.tau == doctest::Approx(oracle::bisect(eq, 0.0, 20.0)).epsilon(1e-11));
    CHECK(s.residual <= 1e-9);
  }

  TEST_CASE("half mode uses half the linear term") {
    const DecayEnvelope env = default_envelope(gaussian());
    const TauSolution s = solve_tau(env, 1.0, LogLogHeight{10.0}, BoundMode::half);
    CHECK(0.5 * s.tau + std::log(s.tau + 2.0) == doctest::Approx(10.0).epsilon(1e-12));
  }

  TEST_CASE("solutions grow with H") {
    for (const DecayEnvelope& env : {default_envelope(TestFunction::power(2)), default_envelope(half_family()),
                                     default_envelope(TestFunction::rational(2, 5))}) {
      double prev = 0.0;
      for (int i = 0; i < 100; ++i) {
        const double L = 5.0 + 0.5 * i;
        const TauSolution s = solve_tau(env, 0.8, LogLogHeight{L}, BoundMode::full);
        CHECK(s.residual <= 1e-9);
        CHECK(s.tau > prev);
        prev = s.tau;
      }
    }
  }

  TEST_CASE("unsolvable heights") {
    const DecayEnvelope env = default_envelope(TestFunction::rational(1, 3));
    CHECK_THROWS_WITH_AS(solve_tau(env, 1.0, LogLogHeight{1.0}, BoundMode::full),
                         "H below solvability threshold", DomainError);
    FourierCache cache;
    const BoundParams bp = theorem_a_bound(env, 1.0, LogLogHeight{1.0}, BoundMode::full, cache);
    CHECK_FALSE(bp.valid);
    CHECK(bp.reason == "H below solvability threshold");
    CHECK_THROWS_AS(solve_tau(env, 0.0, LogLogHeight{10.0}, BoundMode::full), DomainError);
  }

  TEST_CASE("Gaussian half-mode bound at H = e^100") {
    FourierCache cache;
    const DecayEnvelope env = default_envelope(gaussian());
    const BoundParams bp = theorem_a_bound(env, 1.0, LogLogHeight{std::log(100.0)}, BoundMode::half, cache);
    CHECK(bp.mu > 0.0);
    CHECK(bp.kappa == 4.0);
    CHECK(bp.tau_residual <= 1e-9);
    CHECK_FALSE(bp.k_at_least_7);
    const BoundParams later = theorem_a_bound(env, 1.0, LogLogHeight{10.0}, BoundMode::half, cache);
    CHECK(later.k_at_least_7);
    CHECK(later.valid);
    const double tau = later.tau;
    const double expect_mu = (oracle::kPowerTransformOne1 / oracle::kPowerTransformZero1) /
                             (6.0 * std::sqrt(4.0)) * std::exp(0.25 * tau) / std::sqrt(tau);
    CHECK(later.mu == doctest::Approx(expect_mu).epsilon(1e-10));
    CHECK(later.k == static_cast<long long>(std::floor(std::exp(0.5 * tau) / (4.0 * tau))));
    CHECK(later.log_X == doctest::Approx(tau * 2.0 * (0.5 * tau + 1.0)));
  }

  TEST_CASE("full-mode bound formula and growth in H") {
    FourierCache cache;
    const DecayEnvelope env = default_envelope(gaussian());
    double prev = 0.0;
    for (double L = 10.0; L <= 40.0; L += 1.5) {
      const BoundParams bp = theorem_a_bound(env, 1.0, LogLogHeight{L}, BoundMode::full, cache);
      CHECK(bp.kappa == 61.0);
      CHECK(bp.mu > prev);
      prev = bp.mu;
      const double expect = (oracle::kPowerTransformOne1 / oracle::kPowerTransformZero1) / 10.0 *
                            std::sqrt(std::log(61.0) / 61.0) * std::exp(0.5 * bp.tau) / bp.tau;
      CHECK(bp.mu == doctest::Approx(expect).epsilon(1e-10));
      CHECK(bp.power_condition);
    }
  }

  TEST_CASE("alpha beyond the root is reported") {
    FourierCache cache;
    const BoundParams bp =
        theorem_a_bound(default_envelope(half_family()), 2.5, LogLogHeight{20.0}, BoundMode::full, cache);
    CHECK_FALSE(bp.valid);
    CHECK(bp.reason == "alpha at or beyond root");
  }

  TEST_CASE("side conditions on produced parameter sets") {
    FourierCache cache;
    const std::pair<TestFunction, BoundMode> pairs[] = {
        {gaussian(), BoundMode::full},      {gaussian(), BoundMode::half},
        {half_family(), BoundMode::full},   {half_family(), BoundMode::half},
        {TestFunction::rational(1, 3), BoundMode::full}, {TestFunction::rational(2, 5), BoundMode::full}};
    for (const auto& [f, mode] : pairs) {
      const DecayEnvelope env = default_envelope(f);
      for (double L = 10.0; L <= 60.0; L += 10.0) {
        const BoundParams bp = theorem_a_bound(env, 1.0, LogLogHeight{L}, mode, cache);
        CAPTURE(f.to_string());
        CAPTURE(to_string(mode));
        CAPTURE(L);
        CHECK(bp.side.all());
        CHECK(bp.valid);
        CHECK(bp.power_condition);
      }
    }
  }

  TEST_CASE("hypotheses that fail are reported") {
    FourierCache cache;
    const BoundParams cubic =
        theorem_a_bound(default_envelope(TestFunction::power(3)), 1.0, LogLogHeight{30.0}, BoundMode::half, cache);
    CHECK_FALSE(cubic.side.half);
    CHECK_FALSE(cubic.valid);
    CHECK(cubic.reason.find("side conditions") != std::string::npos);
    const BoundParams small =
        theorem_a_bound(default_envelope(TestFunction::power(3)), 1.0, LogLogHeight{10.0}, BoundMode::full, cache);
    CHECK_FALSE(small.side.upper);
    CHECK_FALSE(small.valid);
    const BoundParams later =
        theorem_a_bound(default_envelope(TestFunction::power(3)), 1.0, LogLogHeight{30.0}, BoundMode::full, cache);
    CHECK(later.valid);
    const SideConditions early =
        check_side_conditions(default_envelope(gaussian()), 1.0, 2.0, BoundMode::half);
    CHECK_FALSE(early.all());
  }

  TEST_CASE("prime reciprocal chain at desk-scale parameters") {
    FourierCache cache;
    const PrimeTable table = PrimeTable::sieve(2'000'000);
    const DecayEnvelope env = default_envelope(gaussian());
    for (double L : {8.0, 9.0, 10.0, 11.0, 12.0, 13.0}) {
      const BoundParams bp = theorem_a_bound(env, 1.0, LogLogHeight{L}, BoundMode::full, cache);
      REQUIRE(bp.k >= 1);
      const double top = std::exp(bp.alpha * bp.tau);
      REQUIRE(top <= 2e6);
      const long double low = bp.k >= 2 ? table.reciprocal_sum(static_cast<double>(table.nth(bp.k - 1))) : 0.0L;
      const double sum = static_cast<double>(table.reciprocal_sum(top) - low);
      CAPTURE(L);
      CHECK(sum > std::log(bp.kappa) / (bp.alpha * bp.tau));
    }
  }

  TEST_CASE("root-based variant") {
    FourierCache cache;
    const DecayEnvelope env = default_envelope(half_family());
    const CorollaryParams c =
        corollary_bound(env, oracle::kRho, LogLogHeight{30.0}, BoundMode::full, CorollaryPreset::corollary, cache);
    CHECK(c.kappa == 32.0);
    CHECK(c.derivative_at_rho == doctest::Approx(-1.533e-8).epsilon(5e-3));
    CHECK(c.alpha_effective == doctest::Approx(oracle::kRho - 2.0 / c.tau));
    const double expect = std::log(1.0 / (5.0 * std::numbers::e * oracle::kRho) * std::sqrt(std::log(32.0) / 32.0) *
                                   std::abs(c.derivative_at_rho) / oracle::kHalfTransformZero) +
                          0.5 * oracle::kRho * c.tau - 2.0 * std::log(c.tau);
    CHECK(c.log_mu == doctest::Approx(expect).epsilon(1e-9));
    CHECK(c.valid);
    const CorollaryParams e =
        corollary_bound(env, oracle::kRho, LogLogHeight{30.0}, BoundMode::full, CorollaryPreset::proof_end, cache);
    CHECK(e.kappa == 62.0);
    CHECK(e.log_mu < c.log_mu);
  }

  TEST_CASE("closed-form theorem bounds") {
    const LogLogHeight h100{std::log(100.0)};
    TheoremInputs in;
    in.m = 1;
    const TheoremBound t1 = theorem_bound(1, in, h100);
    CHECK(t1.value == doctest::Approx(std::exp(0.5 / (2.0 * std::log(100.0)))).epsilon(1e-14));
    CHECK(t1.value == doctest::Approx(1.0558).epsilon(1e-4));
    CHECK(t1.conditional);
    in.epsilon = 0.1;
    const TheoremBound t4 = theorem_bound(4, in, LogLogHeight{1.0});
    CHECK(t4.value == doctest::Approx(std::exp(0.5 * std::numbers::e)).epsilon(1e-14));
    CHECK(t4.value == doctest::Approx(3.8928).epsilon(1e-4));
    in.rho = oracle::kRho;
    in.epsilon = 0.05;
    const TheoremBound t3 = theorem_bound(3, in, LogLogHeight{5.0});
    CHECK(t3.log_value == doctest::Approx(std::pow(std::exp(5.0), oracle::kGamma - 0.05)).epsilon(1e-12));
    in.c = 2.0;
    const TheoremBound t2 = theorem_bound(2, in, LogLogHeight{5.0});
    CHECK(t2.log_value ==
          doctest::Approx(std::sqrt(std::exp(5.0)) * std::exp(-2.0 * std::pow(5.0, 1.0 - 0.025))).epsilon(1e-12));
    in.epsilon = 0.2;
    CHECK_THROWS_AS(theorem_bound(4, in, h100), DomainError);
    in.epsilon = 0.0;
    CHECK_THROWS_AS(theorem_bound(3, in, h100), DomainError);
    in.epsilon = 0.05;
    CHECK_THROWS_AS(theorem_bound(1, in, LogLogHeight{0.9}), DomainError);
    CHECK_THROWS_AS(theorem_bound(5, in, h100), DomainError);
    in.m = 0;
    CHECK_THROWS_AS(theorem_bound(1, in, h100), DomainError);
  }

  TEST_CASE("exponent from the root") {
    CHECK(std::abs(gamma_from_rho(2.376892345) - 0.46862145) < 1e-8);
    CHECK(std::abs(gamma_from_rho(oracle::kRho) - oracle::kGamma) < 1e-14);
    CHECK(gamma_from_rho(1.0 / std::numbers::pi) == doctest::Approx(1.0 / 3.0));
    CHECK(gamma_from_rho(1e12) == doctest::Approx(0.5));
    CHECK_THROWS_AS(gamma_from_rho(0.0), DomainError);
  }

  TEST_CASE("alpha grid helper") {
    FourierCache cache;
    const auto best = best_alpha(default_envelope(gaussian()), {0.5, 1.0, 1.5, 2.0}, LogLogHeight{20.0},
                                 BoundMode::full, cache);
    REQUIRE(best.has_value());
    for (double a : {0.5, 1.0, 1.5, 2.0}) {
      const BoundParams bp = theorem_a_bound(default_envelope(gaussian()), a, LogLogHeight{20.0}, BoundMode::full, cache);
      if (bp.valid) CHECK(best->log_mu >= bp.log_mu);
    }
  }
}
