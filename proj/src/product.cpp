#include "cubicmod/product.hpp"

#include <cmath>

namespace cubicmod {

namespace {

constexpr double kLog27 = 3.29583686600432907417780911033242376;  // log 27
constexpr double kLog9 = 2.19722457733621938279049667404976917;   // log 9

double orbit_weight(double r) {
  // log[(1+2r)(1+r+r^2)]
  return std::log((1.0 + 2.0 * r) * (1.0 + r * (1.0 + r)));
}

struct LogSum {
  double partial = 0.0;     // sum_{k<=n} 3^{-k} w(r_k)
  double tail_bound = 0.0;  // (3^{-n}/2) log 9
};

// Accumulates the weighted log-sum along the orbit either for a fixed
// number of terms or adaptively until tail_bound/2 <= tol (tol > 0).
LogSum accumulate(double r0, int n_max, double tol,
                  std::vector<double>* terms) {
  LogSum out;
  double rk = r0;
  double weight = 1.0;  // 3^{-k}
  out.partial = orbit_weight(rk);
  int k = 0;
  for (;;) {
    out.tail_bound = weight * 0.5 * kLog9;
    const bool done =
        tol > 0.0 ? (0.5 * out.tail_bound <= tol || k >= 200) : (k >= n_max);
    if (done) break;
    rk = detail::phi3_map(rk);
    weight /= 3.0;
    ++k;
    out.partial += weight * orbit_weight(rk);
    if (terms) terms->push_back(rk);
  }
  return out;
}

// Sigma = sum_n 3^{-n} log[(1+2r_n)(1+r_n+r_n^2)], midpoint-corrected.
double sigma_sum(UnitRadius r, double tol) {
  const double r0 = complement(r).value();
  const LogSum ls = accumulate(r0, 0, tol, nullptr);
  return ls.partial + 0.5 * ls.tail_bound;
}

}  // namespace

CubicOrbit cubic_orbit(UnitRadius r, int n_max) {
  if (n_max < 1) throw std::domain_error("cubic_orbit: requires n_max >= 1");
  CubicOrbit orbit;
  orbit.r0 = complement(r).value();
  const LogSum ls = accumulate(orbit.r0, n_max, 0.0, &orbit.terms);
  orbit.partial_log_sum = ls.partial;
  orbit.tail_bound = ls.tail_bound;
  return orbit;
}

double mu_star_product(UnitRadius r, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("mu_star_product: requires tol > 0");
  return -1.5 * std::log(r.value()) + 0.5 * sigma_sum(r, tol);
}

MuStarBounds mu_star_bounds(Signature s, UnitRadius r, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("mu_star_bounds: requires tol > 0");
  const double base = -1.5 * std::log(r.value()) + 0.5 * sigma_sum(r, tol);
  const double shift = 0.5 * (ramanujan_r(s.value()) - kLog27);
  // R(a) >= log 27 on (0,1/3], <= log 27 on [1/3,1/2]; the product side is
  // the lower bound in the first case, the upper bound in the second.
  if (s.value() <= 1.0 / 3.0) return {base, base + shift};
  return {base + shift, base};
}

double phi_inv_lower_bound(Signature s, UnitRadius r, double K) {
  if (!(K > 1.0))
    throw std::domain_error("phi_inv_lower_bound: requires K > 1");
  const double sigma = sigma_sum(r, 1e-13);
  const double exponent =
      s.value() <= 1.0 / 3.0
          ? (1.0 - K) / 3.0 * (ramanujan_r(s.value()) - kLog27 + sigma)
          : sigma * (1.0 - K) / 3.0;
  return std::pow(r.value(), K) * std::exp(exponent);
}

}  // namespace cubicmod
