#include "cubicmod/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cubicmod {

VerificationReport equality_report(std::string check_id,
                                   std::vector<double> sample_point,
                                   double lhs, double rhs, double tolerance,
                                   std::string note) {
  VerificationReport rep;
  rep.check_id = std::move(check_id);
  rep.sample_point = std::move(sample_point);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = rhs - lhs;
  rep.pass = std::abs(rep.margin) <= tolerance;
  rep.note = std::move(note);
  return rep;
}

VerificationReport one_sided_report(std::string check_id,
                                    std::vector<double> sample_point,
                                    double lhs, double rhs, double tolerance,
                                    std::string note) {
  VerificationReport rep;
  rep.check_id = std::move(check_id);
  rep.sample_point = std::move(sample_point);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = rhs - lhs;
  rep.pass = rep.margin >= -tolerance;
  rep.note = std::move(note);
  return rep;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

SweepGrid SweepGrid::default_grid() {
  SweepGrid grid;
  grid.a_values = {0.1, 0.2, 1.0 / 3.0, 0.4, 0.5};
  const int n = 25;
  grid.r_values.reserve(n);
  for (int i = 0; i < n; ++i)
    grid.r_values.push_back(0.05 + 0.9 * i / (n - 1.0));
  grid.tolerance = 1e-10;
  return grid;
}

void validate(const SweepGrid& grid) {
  if (grid.a_values.empty() || grid.r_values.empty())
    throw std::invalid_argument("SweepGrid: a_values and r_values must be non-empty");
  if (!(grid.tolerance > 0.0))
    throw std::invalid_argument("SweepGrid: tolerance must be positive");
  for (double a : grid.a_values)
    if (!(a > 0.0) || !(a <= 0.5))
      throw std::invalid_argument("SweepGrid: signatures must lie in (0, 1/2]");
  constexpr double delta = 1e-4;
  for (double r : grid.r_values)
    if (!(r > delta) || !(r < 1.0 - delta))
      throw std::invalid_argument("SweepGrid: radii must lie in (1e-4, 1-1e-4)");
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

std::string csv_header() { return "check_id,a,r,lhs,rhs,margin,pass"; }

std::string to_csv_row(const VerificationReport& rep) {
  // sample_point layout: {r} or {a, ..., r}
  std::string a_col, r_col;
  if (rep.sample_point.size() == 1) {
    r_col = format_double(rep.sample_point[0]);
  } else if (rep.sample_point.size() >= 2) {
    a_col = format_double(rep.sample_point.front());
    r_col = format_double(rep.sample_point.back());
  }
  std::string row = rep.check_id;
  row += ',';
  row += a_col;
  row += ',';
  row += r_col;
  row += ',';
  row += format_double(rep.lhs);
  row += ',';
  row += format_double(rep.rhs);
  row += ',';
  row += format_double(rep.margin);
  row += ',';
  row += rep.pass ? '1' : '0';
  return row;
}

}  // namespace cubicmod
