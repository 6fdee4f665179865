// Scalar special functions (gamma, digamma, beta, the Ramanujan constant
// R(a,b)) and the hypergeometric-type power series (Gauss 2F1, Kummer Phi,
// generalized Bessel u_v) the modular-function layer is built on.
//
// All functions work at fixed double precision on real arguments; complex
// arguments and analytic continuation outside x in [0,1) are out of scope.

#pragma once

#include <stdexcept>
#include <string>

namespace cubicmod {

// Thrown when series parameters are invalid (e.g. c a non-positive integer).
class parameter_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when an iteration fails to meet its stopping rule within its budget.
class non_convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter triple (a, b; c) of a Gauss hypergeometric series F(a,b;c;x).
struct SeriesParameters {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

struct EvalOptions {
  double rel_tol = 1e-15;  // series stopping tolerance, relative to the sum
  int max_terms = 10000;   // hard cap before non_convergence_error
};

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // upper estimate of truncation error
  int terms_used = 0;
};

// Euler-Mascheroni constant gamma = 0.577215...
double euler_gamma() noexcept;

// Gamma(x) for x > 0. Throws std::domain_error for x <= 0 and
// std::overflow_error once Gamma(x) exceeds the double range.
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Digamma Psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y) for x, y > 0.
double beta_fn(double x, double y);

// R(a,b) = -2*gamma - Psi(a) - Psi(b); R(1/3,2/3) = log 27.
double ramanujan_r(double a, double b);

// Single-argument form R(a) = R(a, 1-a).
double ramanujan_r(double a);

// Gauss hypergeometric function F(a,b;c;x) for 0 <= x < 1.
//
// The defining series is summed until two consecutive terms fall below
// rel_tol * |sum|. In the zero-balanced case c = a + b the series has a
// logarithmic singularity at x = 1; past the crossover point
// (zero_balanced_crossover) evaluation switches to the connection expansion
// in powers of 1 - x so that accuracy stays uniform as x -> 1.
EvalResult hyp2f1(const SeriesParameters& p, double x,
                  const EvalOptions& opts = {});

// F(a,b;c;1-y) for y in (0,1]. Equivalent to hyp2f1 at x = 1-y but keeps
// full relative precision when the complement y of the argument is the
// exactly known quantity (as in F(a,1-a;1;1-r^3) with y = r^3).
EvalResult hyp2f1_nearone(const SeriesParameters& p, double y,
                          const EvalOptions& opts = {});

// Argument threshold beyond which zero-balanced evaluation uses the
// connection expansion. Both branches converge geometrically with
// ratio <= 0.75 at the seam.
inline constexpr double zero_balanced_crossover = 0.75;

// Kummer's confluent function Phi(p,q;x) = sum (p,n)/(q,n) x^n/n!,
// restricted to 0 <= x < 1. q must not be a non-positive integer.
EvalResult kummer_phi(double p, double q, double x,
                      const EvalOptions& opts = {});

// Generalized Bessel u_v(x) = sum (-c/4)^n / (kappa,n) * x^n/n! with
// kappa = v + (b+1)/2, restricted to 0 <= x < 1. kappa must not be a
// non-positive integer.
EvalResult bessel_u(double v, double b, double c, double x,
                    const EvalOptions& opts = {});

}  // namespace cubicmod
