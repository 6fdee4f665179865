// The cubic orbit r_n = phi_3*(r_{n-1}) started at r_0 = r*, the
// infinite-product / log-sum representation
//   mu*(r) + (3/2) log r = (1/2) sum_{n>=0} 3^{-n} log[(1+2r_n)(1+r_n+r_n^2)]
// valid at signature a = 1/3, the two-sided product bounds on mu_a* for
// general a, and the lower bounds on phi*_{1/K}.

#pragma once

#include "cubicmod/modular.hpp"

#include <vector>

namespace cubicmod {

struct CubicOrbit {
  double r0 = 0.0;             // = complement(r)
  std::vector<double> terms;   // r_1 ... r_n (saturate at 1 once 1-r_k underflows)
  double partial_log_sum = 0;  // sum_{k<=n} 3^{-k} log[(1+2r_k)(1+r_k+r_k^2)]
  double tail_bound = 0;       // (3^{-n}/2) log 9 >= true remainder
};

CubicOrbit cubic_orbit(UnitRadius r, int n_max);

// mu*(r) at a = 1/3 from the log-sum alone: the series is truncated once
// tail_bound/2 <= tol and the midpoint of the tail interval is added, so
// the result matches mu_star(1/3, r) within tol (plus rounding).
double mu_star_product(UnitRadius r, double tol = 1e-12);

struct MuStarBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Product-form bounds: for a in (0,1/3] the log-sum gives the lower bound
// and lower + (R(a) - log 27)/2 the upper; for a in [1/3,1/2] the two
// swap roles. Both collapse onto mu_a*(r) exactly when a = 1/3.
MuStarBounds mu_star_bounds(Signature s, UnitRadius r, double tol = 1e-12);

// Lower bound on phi*_{1/K}(a,r) for K > 1, with
// Sigma = sum_n 3^{-n} log[(1+2r_n)(1+r_n+r_n^2)]:
//   a in (0,1/3]:   r^K exp{(1-K)/3 (R(a) - log 27 + Sigma)}
//   a in [1/3,1/2): r^K exp{Sigma (1-K)/3}
double phi_inv_lower_bound(Signature s, UnitRadius r, double K);

}  // namespace cubicmod
