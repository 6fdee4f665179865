// Modular functions of Ramanujan's generalized modular equation in
// signature 1/a: mu_a(r), its cubic-argument form mu_a*(r), the solution
// operator phi_K*(a,r), and the closed forms of phi_3* and phi_{1/3}*.

#pragma once

#include "cubicmod/specialfn.hpp"

namespace cubicmod {

// Signature parameter a in (0, 1/2].
class Signature {
 public:
  explicit Signature(double a);
  double value() const noexcept { return a_; }

 private:
  double a_;
};

// Radius r in the open unit interval (0, 1).
class UnitRadius {
 public:
  explicit UnitRadius(double r);
  double value() const noexcept { return r_; }

 private:
  double r_;
};

// Degree parameter K > 0 of the modular equation (K = 1/p).
class DegreeK {
 public:
  explicit DegreeK(double k);
  double value() const noexcept { return k_; }

 private:
  double k_;
};

// The mu functions diverge (resp. vanish) at the interval endpoints; radii
// within this distance of 0 or 1 are rejected rather than extrapolated.
inline constexpr double mu_endpoint_margin = 1e-9;

// Complementary radius r* = (1 - r^3)^{1/3}. Involution.
UnitRadius complement(UnitRadius r);

// mu_a(r) = pi/(2 sin pi a) * F(a,1-a;1;1-r^2) / F(a,1-a;1;r^2).
// Strictly decreasing homeomorphism of (0,1) onto (0, infinity).
double mu_a(Signature s, UnitRadius r);
EvalResult mu_a_eval(Signature s, UnitRadius r);

// mu_a*(r) = mu_a(r^{3/2}) = pi/(2 sin pi a) * F(a,1-a;1;1-r^3) / F(a,1-a;1;r^3).
double mu_star(Signature s, UnitRadius r);
EvalResult mu_star_eval(Signature s, UnitRadius r);

// d mu_a*(r)/dr = -(3/2) / [r (1-r^3) F(a,1-a;1;r^3)^2]. Always negative.
double mu_star_derivative(Signature s, UnitRadius r);

// Unique r with mu_a*(r) = y, located by bracketing bisection on
// [mu_endpoint_margin, 1 - mu_endpoint_margin] with Newton refinement
// through the derivative formula; stops at |mu* - y| <= 1e-12.
//
// The attainable range at fixed precision is
// (mu*(1 - margin), mu*(margin)); y outside it raises
// non_convergence_error. Values of y above ~10^3 are never attainable.
UnitRadius mu_star_inverse(Signature s, double y);

// phi_K*(a,r) = (mu_a*)^{-1}(mu_a*(r)/K). Satisfies phi*_1 = id and the
// composition law phi*_{K1} o phi*_{K2} = phi*_{K1 K2}.
UnitRadius phi_star(DegreeK K, Signature s, UnitRadius r);

// Closed form phi_3*(r) = (9r(1+r+r^2))^{1/3} / (1+2r), exact at a = 1/3.
UnitRadius phi3_star_closed(UnitRadius r);

// Closed form phi_{1/3}*(r) = (1-r*)/(1+2r*), the inverse of phi_3*.
UnitRadius phi13_star_closed(UnitRadius r);

namespace detail {
// The phi_3* map on a raw radius; well behaved on (0, 1] including the
// fixed point at 1, used by the orbit machinery where iterates saturate.
double phi3_map(double r) noexcept;
}  // namespace detail

}  // namespace cubicmod
