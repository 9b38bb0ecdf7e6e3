#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zetalab/error.hpp"
#include "zetalab/selberg_moments.hpp"

using namespace zetalab;

namespace {
double gaussian_hat(double lam) { return std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * lam * lam); }

double step_for(double X) { return std::numbers::pi / (2.0 * std::log(X)); }

MomentReport cosine_fixture(double M) {
  MomentReport r;
  r.k = 1;
  r.T = 0.0;
  r.H = 2.0 * std::numbers::pi;
  const auto m = moment_integrals([](double t) { return std::cos(t); }, 0.0, r.H, 1, 0.5);
  r.I_k = m.even;
  r.J_k = m.odd;
  r.M = M;
  return r;
}

std::vector<Sample> cosine_samples() {
  std::vector<Sample> s;
  for (int i = 0; i <= 628; ++i) s.push_back({0.01 * i, std::cos(0.01 * i)});
  return s;
}
}  // namespace

TEST_SUITE("selberg_moments") {
  TEST_CASE("Dirichlet polynomial values") {
    const PrimeTable table = PrimeTable::sieve(1000);
    FourierCache cache;
    const double tau = 2.0;
    CHECK(dirichlet_poly(table, gaussian(), tau, 2.0, 0.0, cache) ==
          doctest::Approx(gaussian_hat(std::log(2.0) / tau) / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(dirichlet_poly(table, gaussian(), tau, 2.0, 3.0, cache) ==
          doctest::Approx(gaussian_hat(std::log(2.0) / tau) / std::sqrt(2.0) * std::cos(3.0 * std::log(2.0)))
              .epsilon(1e-12));
    double four = 0.0;
    for (double p : {2.0, 3.0, 5.0, 7.0}) four += gaussian_hat(std::log(p) / tau) / std::sqrt(p);
    CHECK(dirichlet_poly(table, gaussian(), tau, 10.0, 0.0, cache) == doctest::Approx(four).epsilon(1e-12));
    const DirichletPolynomial A(table, half_family(), 3.0, 500.0, cache);
    double triangle = 0.0;
    for (std::uint32_t p : table.primes()) {
      if (p > 500) break;
      triangle += cache.value(half_family(), 0.0) / std::sqrt(static_cast<double>(p));
    }
    CHECK(A.abs_bound() <= triangle);
    for (double t = 0.0; t < 100.0; t += 0.77) CHECK(std::abs(A(t)) <= A.abs_bound() + 1e-12);
    CHECK_THROWS_AS(dirichlet_poly(table, gaussian(), tau, 2000.0, 0.0, cache), DomainError);
    CHECK_THROWS_AS(dirichlet_poly(table, gaussian(), 0.0, 20.0, 0.0, cache), DomainError);
  }

  TEST_CASE("trigonometric moment fixture") {
    const auto m = moment_integrals([](double t) { return std::cos(t); }, 0.0, 2.0 * std::numbers::pi, 1, 0.5);
    CHECK(m.even == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(std::abs(m.odd) < 1e-14);
    const auto m2 = moment_integrals([](double t) { return std::cos(t); }, 0.0, 2.0 * std::numbers::pi, 2, 0.5);
    CHECK(m2.even == doctest::Approx(0.75 * std::numbers::pi).epsilon(1e-14));
  }

  TEST_CASE("diagonal sums against brute-force ordered tuples") {
    const PrimeTable table = PrimeTable::sieve(100);
    FourierCache cache;
    for (double X : {3.0, 20.0, 50.0}) {
      const DirichletPolynomial A(table, gaussian(), 2.0, X, cache);
      const std::vector<double> w = A.squared_weights();
      std::vector<std::uint64_t> primes;
      for (std::uint32_t p : table.primes())
        if (p <= X) primes.push_back(p);
      for (int k = 1; k <= (X > 20.0 ? 2 : 3); ++k) {
        const double brute = oracle::ordered_tuple_diagonal(primes, w, k);
        CAPTURE(X);
        CAPTURE(k);
        CHECK(diagonal_sum(w, k) == doctest::Approx(brute).epsilon(1e-12));
        CHECK(diagonal_sum_enumerated(w, k) == doctest::Approx(brute).epsilon(1e-12));
        CHECK(distinct_lower_bound(w, k) <= diagonal_sum(w, k) * (1.0 + 1e-12));
      }
    }
    CHECK_THROWS_AS(diagonal_sum({1.0}, 9), DomainError);
    CHECK_THROWS_AS(diagonal_sum_enumerated({1.0}, 4), DomainError);
  }

  TEST_CASE("two-prime diagonal by hand") {
    const std::vector<double> w{0.3, 0.2};  // primes 2 and 3
    // ordered pairs with p1 p2 = q1 q2: (2,2),(3,3) once each, (2,3),(3,2) against both orders
    const double expect = 0.3 * 0.3 + 0.2 * 0.2 + 4.0 * 0.3 * 0.2;
    CHECK(diagonal_sum(w, 2) == doctest::Approx(expect));
    CHECK(oracle::ordered_tuple_diagonal({2, 3}, w, 2) == doctest::Approx(expect));
  }

  TEST_CASE("second moment follows the diagonal") {
    const PrimeTable table = PrimeTable::sieve(1000);
    FourierCache cache;
    const MomentReport r = moments(table, gaussian(), 2.0, 50.0, 10000.0, 200.0, 1, step_for(50.0), cache);
    CHECK(r.I_k >= 0.0);
    CHECK(std::abs(r.I_k - 100.0 * r.diagonal_sum) <= 0.1 * 100.0 * r.diagonal_sum);
    CHECK(r.diag == doctest::Approx(0.5 * 200.0 * r.diagonal_sum));
  }

  TEST_CASE("moments grow with the window") {
    const PrimeTable table = PrimeTable::sieve(1000);
    FourierCache cache;
    double prev = 0.0;
    for (double H : {20.0, 50.0, 120.0}) {
      const MomentReport r = moments(table, half_family(), 3.0, 80.0, 5000.0, H, 2, step_for(80.0), cache);
      CHECK(r.I_k >= prev);
      prev = r.I_k;
    }
  }

  TEST_CASE("moment preconditions") {
    const PrimeTable table = PrimeTable::sieve(1000);
    FourierCache cache;
    CHECK_THROWS_AS(moments(table, gaussian(), 2.0, 50.0, 0.0, 10.0, 9, 0.1, cache), DomainError);
    CHECK_THROWS_AS(moments(table, gaussian(), 2.0, 50.0, 0.0, 10.0, 1, 1.0, cache), DomainError);
    CHECK_THROWS_AS(moments(table, gaussian(), 2.0, 50.0, 0.0, 0.0, 1, 0.1, cache), DomainError);
  }

  TEST_CASE("detection on the cosine fixture") {
    const DetectionResult d = tsang_detect(cosine_fixture(0.7), cosine_samples());
    REQUIRE(d.status == DetectionStatus::detected);
    REQUIRE(d.t.has_value());
    CHECK(d.value == doctest::Approx(1.0));
    CHECK(d.value > 0.35);
    const DetectionResult no = tsang_detect(cosine_fixture(1.2), cosine_samples());
    CHECK(no.status == DetectionStatus::conditions_not_satisfied);
    CHECK_FALSE(no.t.has_value());
  }

  TEST_CASE("detection on a Gaussian-family polynomial") {
    const PrimeTable table = PrimeTable::sieve(1000);
    FourierCache cache;
    const MomentReport r = moments(table, gaussian(), 2.0, 100.0, 10000.0, 100.0, 2, step_for(100.0), cache);
    REQUIRE(r.detection == DetectionStatus::detected);
    REQUIRE(r.detected_t.has_value());
    CHECK(*r.detected_t >= r.T);
    CHECK(*r.detected_t <= r.T + r.H);
    const double again = dirichlet_poly(table, gaussian(), 2.0, 100.0, *r.detected_t, cache);
    CHECK(again > r.M / 2.0);
    double grid_best = -1e300;
    for (const Sample& s : r.samples) grid_best = std::max(grid_best, s.value);
    CHECK(r.detected_value == doctest::Approx(grid_best));
    const MomentReport high = moments(table, gaussian(), 2.0, 100.0, 10000.0, 100.0, 2, step_for(100.0), cache,
                                      10.0 * r.M);
    CHECK(high.detection == DetectionStatus::conditions_not_satisfied);
  }

  TEST_CASE("correction term decays") {
    for (double t : {20.0, 40.0, 100.0, 200.0}) {
      const BTerm a = b_term(gaussian(), 0.05, t);
      const BTerm b = b_term(gaussian(), 0.05, 2.0 * t);
      CHECK(std::abs(b.value) <= 0.5 * std::abs(a.value));
      CHECK(a.err >= 0.0);
    }
    CHECK(b_term(gaussian(), 2.0, 500.0).value == 0.0);
  }

  TEST_CASE("convolution identity at a production point") {
    const ConvolutionCheck c = convolution_check(gaussian(), 2.0, 500.0, 30.0, 1e-3);
    CHECK(c.status == CheckStatus::pass);
    CHECK(c.residual == doctest::Approx(std::abs(c.lhs - (c.rhs_A - c.rhs_B))));
    CHECK(c.residual <= c.budget);
    CHECK(c.budget == doctest::Approx(c.parts.total()));
    CHECK(c.budget < 0.2 * std::abs(c.lhs));
  }

  TEST_CASE("degenerate window is inconclusive") {
    const ConvolutionCheck c = convolution_check(gaussian(), 2.0, 500.0, 0.01, 1e-3);
    CHECK(c.status == CheckStatus::inconclusive);
    CHECK(std::abs(c.lhs) < 0.05);
  }

  TEST_CASE("tighter tolerance stays inside the old budget") {
    const ConvolutionCheck loose = convolution_check(gaussian(), 2.0, 700.0, 30.0, 2e-3);
    const ConvolutionCheck tight = convolution_check(gaussian(), 2.0, 700.0, 30.0, 1e-3);
    CHECK(tight.residual <= loose.budget);
    CHECK(tight.budget <= loose.budget);
  }

  TEST_CASE("convolution preconditions") {
    CHECK_THROWS_AS(convolution_check(gaussian(), 0.5, 500.0, 30.0, 1e-3), DomainError);
    CHECK_THROWS_AS(convolution_check(gaussian(), 2.0, 35.0, 30.0, 1e-3), DomainError);
  }
}
