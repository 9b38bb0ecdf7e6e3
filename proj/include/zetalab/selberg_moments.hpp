#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/fourier_lab.hpp"
#include "zetalab/prime_tools.hpp"
#include "zetalab/test_functions.hpp"

namespace zetalab {

// A0(t) = sum_{p <= X} Phi-hat(ln p / tau) p^{-1/2} cos(t ln p)
class DirichletPolynomial {
 public:
  DirichletPolynomial(const PrimeTable& table, const TestFunction& f, double tau, double X, FourierCache& cache);

  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] const std::vector<double>& log_primes() const { return log_p_; }
  [[nodiscard]] const std::vector<double>& coefficients() const { return coef_; }
  // a(p)^2 / p, the weights of the diagonal sum
  [[nodiscard]] std::vector<double> squared_weights() const;
  // sum of |coefficients|
  [[nodiscard]] double abs_bound() const;

 private:
  std::vector<double> log_p_;
  std::vector<double> coef_;
};

double dirichlet_poly(const PrimeTable& table, const TestFunction& f, double tau, double X, double t,
                      FourierCache& cache);

struct MomentIntegrals {
  double even = 0.0;  // integral of W^{2k}
  double odd = 0.0;   // integral of W^{2k+1}
};
// Composite Gauss-Legendre over cells of width <= cell.
MomentIntegrals moment_integrals(const std::function<double(double)>& W, double T, double H, int k, double cell);

// (k!)^2 [x^k] prod_p sum_e w_p^e x^e / (e!)^2, i.e. the sum over ordered
// tuples with p1...pk = q1...qk of w(p1)...w(pk).
double diagonal_sum(const std::vector<double>& w, int k);
// Same quantity by explicit multiset enumeration (k <= 3).
double diagonal_sum_enumerated(const std::vector<double>& w, int k);
// (k!)^2 e_k(w): the distinct-prime part of the diagonal sum.
double distinct_lower_bound(const std::vector<double>& w, int k);

struct Sample {
  double t = 0.0;
  double value = 0.0;
};

enum class DetectionStatus { detected, conditions_not_satisfied, not_found };
std::string to_string(DetectionStatus s);

struct DetectionResult {
  DetectionStatus status = DetectionStatus::not_found;
  std::optional<double> t;
  double value = 0.0;
};

struct MomentReport {
  int k = 1;
  double X = 0.0;
  double T = 0.0;
  double H = 0.0;
  double I_k = 0.0;
  double J_k = 0.0;
  double diagonal_sum = 0.0;       // the multiplicative diagonal sum
  double distinct_bound = 0.0;     // its distinct-prime lower bound
  double diag = 0.0;               // 2^{-2k} C(2k,k) H diagonal_sum
  double M = 0.0;
  std::optional<double> detected_t;
  double detected_value = 0.0;
  DetectionStatus detection = DetectionStatus::not_found;
  std::vector<Sample> samples;
};

// Detection level used when none is supplied: just below (I_k/H)^{1/(2k)}.
double default_detection_level(double I_k, double H, int k);

MomentReport moments(const PrimeTable& table, const TestFunction& f, double tau, double X, double T, double H,
                     int k, double grid_step, FourierCache& cache, std::optional<double> M = std::nullopt);

DetectionResult tsang_detect(const MomentReport& report, const std::vector<Sample>& samples);

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus s);

struct ConvolutionBudget {
  double lhs_quadrature = 0.0;
  double lhs_zeta = 0.0;     // propagated zeta evaluation error
  double lhs_tail = 0.0;     // |u| beyond the integrated range
  double prime_tail = 0.0;   // n > N in the prime-power sum
  double prime_interp = 0.0; // transform interpolation error in the prime sum
  double b_quadrature = 0.0;
  double rounding = 0.0;
  [[nodiscard]] double total() const;
};

struct ConvolutionCheck {
  double t = 0.0;
  double tau = 0.0;
  double window = 0.0;
  double lhs = 0.0;
  double rhs_A = 0.0;
  double rhs_B = 0.0;
  double residual = 0.0;
  double budget = 0.0;
  ConvolutionBudget parts;
  std::uint64_t truncation_N = 0;
  int zeros_in_window = 0;
  CheckStatus status = CheckStatus::inconclusive;
};

// B(t) = 2 pi int_0^{1/2} Re Phi(-(t + iu) tau) du, with a quadrature error.
struct BTerm {
  double value = 0.0;
  double err = 0.0;
};
BTerm b_term(const TestFunction& f, double tau, double t);

ConvolutionCheck convolution_check(const TestFunction& f, double tau, double t, double window, double tol);

}  // namespace zetalab
