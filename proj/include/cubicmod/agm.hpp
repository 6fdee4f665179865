// The Borwein cubic arithmetic-geometric mean: the two-sequence iteration
//   a_{n+1} = (a_n + 2 b_n)/3,  b_{n+1} = (b_n (a_n^2 + a_n b_n + b_n^2)/3)^{1/3}
// whose common limit encodes 1/F(1/3,2/3;1;1-x^3) when started from (1,x)
// (case A) and 1/F(1/3,1/3;1;1-x^3) when started from (x,1) (case B),
// plus the numerical checks for the cubic transformation satisfied by the
// case-B limit and for its underlying functional equation.

#pragma once

#include "cubicmod/modular.hpp"
#include "cubicmod/report.hpp"

namespace cubicmod {

struct AgmState {
  double a = 1.0;
  double b = 1.0;
  int n = 0;
};

// One iteration step. Requires a, b > 0; positively homogeneous.
AgmState agm_step(const AgmState& state);

struct AgmResult {
  double value = 0.0;
  int iterations = 0;
};

// Iterates until |a_n - b_n| <= tol * a_n and returns a_n. Convergence is
// cubic; the 64-step cap is never reached for positive starts.
AgmResult agm_limit_info(double a, double b, double tol = 1e-15);
double agm_limit(double a, double b, double tol = 1e-15);

// Checks the cubic transformation of the case-B limit function:
// F(1/3,1/3;1;1-x^3) = (3/(x^2+x+1))^{1/3} F(1/3,1/3;1;(1-x)^3/(9(x^2+x+1))).
VerificationReport check_case_b_transformation(UnitRadius x,
                                               double tolerance = 1e-11);

// Checks the functional equation G(x)/G(t(x)) = sqrt(3/t'(x)) behind the
// case-B transformation, where G(x) = x^{1/2} (1-x)^{1/3} F(1/3,1/3;1;x)
// and t(x) = (1-xh)^3 / (9(xh^2+xh+1)) with xh = (1-x)^{1/3}.
VerificationReport check_g_functional_equation(double x,
                                               double tolerance = 1e-10);

namespace detail {
// t(x) and t'(x) of the functional equation in cancellation-free form.
double fe_t(double x) noexcept;
double fe_t_derivative(double x) noexcept;
}  // namespace detail

}  // namespace cubicmod
