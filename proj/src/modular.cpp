#include "cubicmod/modular.hpp"

#include <cmath>
#include <string>

namespace cubicmod {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// 1 - r^3 = u(3 - 3u + u^2) with u = 1 - r; avoids the cancellation of
// forming r^3 first when r is close to 1.
double one_minus_cubed(double r) {
  const double u = 1.0 - r;
  return u * (3.0 + u * (u - 3.0));
}

void require_interior(double r, const char* what) {
  if (r < mu_endpoint_margin || r > 1.0 - mu_endpoint_margin)
    throw std::domain_error(std::string(what) +
                            ": radius too close to 0 or 1 for the modular "
                            "functions (margin 1e-9)");
}

struct ZbQuotient {
  EvalResult num;  // F(a,1-a;1;1-x)
  EvalResult den;  // F(a,1-a;1;x)
};

// Both hypergeometric factors of a mu quotient, fed the exact
// complement pair (x, 1-x).
ZbQuotient zb_quotient(double a, double x, double x_complement) {
  const SeriesParameters p{a, 1.0 - a, 1.0};
  ZbQuotient q;
  q.num = (x_complement <= zero_balanced_crossover)
              ? hyp2f1(p, x_complement)
              : hyp2f1_nearone(p, x);
  q.den =
      (x <= zero_balanced_crossover) ? hyp2f1(p, x) : hyp2f1_nearone(p, x_complement);
  return q;
}

EvalResult mu_from_quotient(double a, const ZbQuotient& q) {
  EvalResult out;
  const double factor = kPi / (2.0 * std::sin(kPi * a));
  out.value = factor * q.num.value / q.den.value;
  out.abs_error_estimate =
      std::abs(out.value) * (q.num.abs_error_estimate / q.num.value +
                             q.den.abs_error_estimate / q.den.value +
                             4e-16);
  out.terms_used = q.num.terms_used + q.den.terms_used;
  return out;
}

}  // namespace

Signature::Signature(double a) : a_(a) {
  if (!(a > 0.0) || !(a <= 0.5))
    throw std::domain_error("Signature: requires 0 < a <= 1/2");
}

UnitRadius::UnitRadius(double r) : r_(r) {
  if (!(r > 0.0) || !(r < 1.0))
    throw std::domain_error("UnitRadius: requires 0 < r < 1");
}

DegreeK::DegreeK(double k) : k_(k) {
  if (!(k > 0.0)) throw std::domain_error("DegreeK: requires K > 0");
}

UnitRadius complement(UnitRadius r) {
  return UnitRadius(std::cbrt(one_minus_cubed(r.value())));
}

EvalResult mu_a_eval(Signature s, UnitRadius r) {
  require_interior(r.value(), "mu_a");
  const double x = r.value() * r.value();
  const double u = 1.0 - r.value();
  const double xc = u * (1.0 + r.value());  // 1 - r^2
  return mu_from_quotient(s.value(), zb_quotient(s.value(), x, xc));
}

double mu_a(Signature s, UnitRadius r) { return mu_a_eval(s, r).value; }

EvalResult mu_star_eval(Signature s, UnitRadius r) {
  require_interior(r.value(), "mu_star");
  const double x = r.value() * r.value() * r.value();
  const double xc = one_minus_cubed(r.value());
  return mu_from_quotient(s.value(), zb_quotient(s.value(), x, xc));
}

double mu_star(Signature s, UnitRadius r) { return mu_star_eval(s, r).value; }

double mu_star_derivative(Signature s, UnitRadius r) {
  require_interior(r.value(), "mu_star_derivative");
  const double x = r.value() * r.value() * r.value();
  const double xc = one_minus_cubed(r.value());
  const SeriesParameters p{s.value(), 1.0 - s.value(), 1.0};
  const EvalResult den = (x <= zero_balanced_crossover)
                             ? hyp2f1(p, x)
                             : hyp2f1_nearone(p, xc);
  return -1.5 / (r.value() * xc * den.value * den.value);
}

UnitRadius mu_star_inverse(Signature s, double y) {
  if (!(y > 0.0)) throw std::domain_error("mu_star_inverse: requires y > 0");
  double lo = mu_endpoint_margin;
  double hi = 1.0 - mu_endpoint_margin;
  const double f_lo = mu_star(s, UnitRadius(lo)) - y;  // mu* decreasing: > 0
  const double f_hi = mu_star(s, UnitRadius(hi)) - y;  // < 0
  if (f_lo < 0.0 || f_hi > 0.0)
    throw non_convergence_error(
        "mu_star_inverse: y outside the invertible range at this precision");
  if (f_lo == 0.0) return UnitRadius(lo);
  if (f_hi == 0.0) return UnitRadius(hi);

  double r = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = mu_star(s, UnitRadius(r)) - y;
    if (std::abs(f) <= 1e-12) return UnitRadius(r);
    if (f > 0.0)
      lo = r;  // mu*(r) > y: root lies to the right
    else
      hi = r;
    double next = r - f / mu_star_derivative(s, UnitRadius(r));
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    r = next;
  }
  throw non_convergence_error("mu_star_inverse: no convergence in 200 steps");
}

UnitRadius phi_star(DegreeK K, Signature s, UnitRadius r) {
  return mu_star_inverse(s, mu_star(s, r) / K.value());
}

namespace detail {
double phi3_map(double r) noexcept {
  return std::cbrt(9.0 * r * (1.0 + r * (1.0 + r))) / (1.0 + 2.0 * r);
}
}  // namespace detail

UnitRadius phi3_star_closed(UnitRadius r) {
  return UnitRadius(detail::phi3_map(r.value()));
}

UnitRadius phi13_star_closed(UnitRadius r) {
  // (1-r*)/(1+2r*) with 1-r* expanded through 1-r*^3 = r^3; exact for
  // small r where the plain difference would cancel
  const double rs = complement(r).value();
  const double r3 = r.value() * r.value() * r.value();
  return UnitRadius(r3 / ((1.0 + rs * (1.0 + rs)) * (1.0 + 2.0 * rs)));
}

}  // namespace cubicmod
