// Machine-readable verification records and the sweep grid they run on.

#pragma once

#include <string>
#include <vector>

namespace cubicmod {

// One certified check. For one-sided checks the convention is lhs <= rhs
// and margin = rhs - lhs; for equality checks margin = rhs - lhs and pass
// means |margin| <= tolerance.
struct VerificationReport {
  std::string check_id;
  std::vector<double> sample_point;  // {r} or {a, r} or {a, b, r}
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string note;
};

VerificationReport equality_report(std::string check_id,
                                   std::vector<double> sample_point,
                                   double lhs, double rhs, double tolerance,
                                   std::string note = {});

VerificationReport one_sided_report(std::string check_id,
                                    std::vector<double> sample_point,
                                    double lhs, double rhs, double tolerance,
                                    std::string note = {});

bool all_pass(const std::vector<VerificationReport>& reports);

struct SweepGrid {
  std::vector<double> a_values;  // signatures, each in (0, 1/2]
  std::vector<double> r_values;  // radii, each in (1e-4, 1 - 1e-4)
  double tolerance = 1e-10;      // equality tolerance for the checks

  // a in {0.1, 0.2, 1/3, 0.4, 0.5} x 25 r-points on [0.05, 0.95].
  static SweepGrid default_grid();
};

// Throws std::invalid_argument on an empty or out-of-range grid.
void validate(const SweepGrid& grid);

// Slack granted to one-sided inequalities to absorb rounding; the paper's
// strict inequalities are certified as non-strict with margin reporting.
inline constexpr double one_sided_slack = 1e-12;

// Shortest round-trip decimal form (17 significant digits at most),
// locale-independent.
std::string format_double(double v);

// CSV serialization: header "check_id,a,r,lhs,rhs,margin,pass".
std::string csv_header();
std::string to_csv_row(const VerificationReport& report);

}  // namespace cubicmod
