// Numerical certification of the theory's identities, inequalities and
// monotonicity statements on sampled grids. Each check returns one
// aggregated VerificationReport whose margin is the worst margin seen and
// whose sample_point is where it occurred. Monotonicity is certified by
// 3-point local comparisons on the sorted grid, never by derivative
// estimates, so the certificates are finite-sample surrogates for the
// analytic statements.

#pragma once

#include "cubicmod/modular.hpp"
#include "cubicmod/report.hpp"

#include <vector>

namespace cubicmod {

// Ramanujan's cubic transformation, both forms:
//   F(1/3,2/3;1;1-s^3) = (1+2r) F(1/3,2/3;1;r^3),      s = (1-r)/(1+2r)
//   F(1/3,2/3;1;s^3)   = ((1+2r)/3) F(1/3,2/3;1;1-r^3)
VerificationReport check_cubic_transformation(UnitRadius r,
                                              double tolerance = 1e-11);

// Zero-balanced transformation sandwich: for (a,b) with a+b <= 1 and
// ab <= 2(a+b)/9,
//   0 <= (1+2r)F(a,b;a+b;r^3) - F(a,b;a+b;9r(1+r+r^2)/(1+2r)^3)
//     <= 2(R(a,b) - log 27)/B(a,b),
// reversed on the region a+b >= 1, ab >= 2(a+b)/9. Throws parameter_error
// if (a,b) lies in neither region. Both ends collapse to zero exactly at
// (a,b) = (1/3,2/3), certified as an equality there.
VerificationReport check_zb_transformation_sandwich(double a, double b,
                                                    UnitRadius r,
                                                    double tolerance = 1e-10);

// Quotient-monotonicity sampler: given coefficient sequences {a_n}, {b_n}
// (b_n > 0) of equal length N >= 3, reports whether a_n/b_n is monotone
// and, if so, whether the quotient of the partial series is monotone in
// the same direction on the grid. Passes when the implication holds.
VerificationReport series_ratio_monotone(const std::vector<double>& num_coeffs,
                                         const std::vector<double>& den_coeffs,
                                         const std::vector<double>& grid);

// Q(x) = F(a,b;c;x)/F(1/3,2/3;1;x): monotone increasing together with
//   F(a,b;c;9r(1+r+r^2)/(1+2r)^3) >= (1+2r) F(a,b;c;r^3)
//   F(a,b;c;((1-r)/(1+2r))^3)    <= ((1+2r)/3) F(a,b;c;1-r^3)
// when a+b >= c and 9ab/2 >= max{1,c}; decreasing with both reversed when
// a+b <= c and 9ab/2 <= min{1,c}; constant with equalities when both
// conditions hold. Throws parameter_error otherwise.
VerificationReport check_hyp_quotient_monotonicity(double a, double b,
                                                   double c,
                                                   const SweepGrid& grid);

// The two transformation inequalities above are images of each other
// under r -> (1-r)/(1+2r); checks that their normalized residuals agree.
VerificationReport check_hyp_quotient_equivalence(double a, double b, double c,
                                                  UnitRadius r,
                                                  double tolerance = 1e-12);

// chi_f(x) = f(x^3) for f = u_v (kappa = v+(b+1)/2) and f = Phi(p,q;.):
// both quotients against F(1/3,2/3;1;.) are decreasing, hence
//   chi_f((9r(1+r+r^2))^{1/3}/(1+2r)) <= (1+2r) chi_f(r).
// Requires kappa >= max{-1,-9c/8,-2/9-c/4} and q >= max{0,9p/2,p+7/9}.
VerificationReport check_bessel_kummer_transformation(double v, double b,
                                                      double c, double p,
                                                      double q,
                                                      const SweepGrid& grid);

// g(r) = 3 mu_a*(phi_3*(r)) - mu_a*(r): monotonicity and range, the
// sandwich bounds on 3 mu_a*(phi_3*(r)), and the two-sided bounds on
// mu_a*(r) mu_a*((1-r)/(1+2r)) built from C(a) = [1 + (2 sin(pi a)/pi)
// (R(a) - log 27)]^2 and C1 = min{C, 3}. At a = 1/3 every bound collapses
// to an equality and is certified as tight.
VerificationReport check_mu_star_scaling_bounds(Signature s,
                                                const SweepGrid& grid);

// mu_a*(r) + (3/2) log r strictly decreasing with values in (0, R(a)/2),
// and -(3/2) log 3 < mu_a*(r) + (1/2) log((1-r*)/(1+2r*)) < R(a)/2.
VerificationReport check_mu_star_log_offset(Signature s,
                                            const SweepGrid& grid);

// Runs every check above over the grid together with the modular identity
// invariants and the product-form bound invariants; reports are sorted by
// check_id. Per-check failures are collected, never thrown.
std::vector<VerificationReport> run_full_suite(const SweepGrid& grid);

}  // namespace cubicmod
