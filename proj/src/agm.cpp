#include "cubicmod/agm.hpp"

#include <cmath>

namespace cubicmod {

namespace {
constexpr int kMaxAgmSteps = 64;

const SeriesParameters kOneThirdPair{1.0 / 3.0, 1.0 / 3.0, 1.0};

double hyp13(double x) { return hyp2f1(kOneThirdPair, x).value; }
}  // namespace

AgmState agm_step(const AgmState& state) {
  if (!(state.a > 0.0) || !(state.b > 0.0))
    throw std::domain_error("agm_step: requires a, b > 0");
  AgmState next;
  next.a = (state.a + 2.0 * state.b) / 3.0;
  next.b = std::cbrt(state.b *
                     (state.a * state.a + state.a * state.b +
                      state.b * state.b) /
                     3.0);
  next.n = state.n + 1;
  return next;
}

AgmResult agm_limit_info(double a, double b, double tol) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("agm_limit: requires a, b > 0");
  if (!(tol > 0.0)) throw std::domain_error("agm_limit: requires tol > 0");
  AgmState st{a, b, 0};
  while (std::abs(st.a - st.b) > tol * st.a) {
    if (st.n >= kMaxAgmSteps)
      throw non_convergence_error("agm_limit: iteration cap exceeded");
    st = agm_step(st);
  }
  return {st.a, st.n};
}

double agm_limit(double a, double b, double tol) {
  return agm_limit_info(a, b, tol).value;
}

VerificationReport check_case_b_transformation(UnitRadius x, double tolerance) {
  const double xv = x.value();
  const double q = 1.0 + xv * (1.0 + xv);  // x^2 + x + 1
  const double lhs = hyp2f1_nearone(kOneThirdPair, xv * xv * xv).value;
  const double u = 1.0 - xv;
  const double rhs = std::cbrt(3.0 / q) *
                     hyp2f1(kOneThirdPair, u * u * u / (9.0 * q)).value;
  return equality_report("case-b-transformation", {xv}, lhs, rhs, tolerance);
}

namespace detail {

// xh = (1-x)^{1/3}; both t and t' are written through
// 1 - xh = x/(1 + xh + xh^2) so no cancellation occurs for small x.
double fe_t(double x) noexcept {
  const double xh = std::cbrt(1.0 - x);
  const double q = 1.0 + xh * (1.0 + xh);
  return x * x * x / (9.0 * q * q * q * q);
}

double fe_t_derivative(double x) noexcept {
  const double xh = std::cbrt(1.0 - x);
  const double q = 1.0 + xh * (1.0 + xh);
  const double w = (xh + 2.0) / (q * q);
  return x * x * w * w / (27.0 * xh * xh);
}

}  // namespace detail

VerificationReport check_g_functional_equation(double x, double tolerance) {
  if (!(x > 0.0) || !(x < 1.0))
    throw std::domain_error("check_g_functional_equation: requires x in (0,1)");
  const auto G = [](double z) {
    return std::sqrt(z) * std::cbrt(1.0 - z) * hyp13(z);
  };
  const double t = detail::fe_t(x);
  const double lhs = G(x) / G(t);
  const double rhs = std::sqrt(3.0 / detail::fe_t_derivative(x));
  return equality_report("g-functional-equation", {x}, lhs, rhs, tolerance);
}

}  // namespace cubicmod
