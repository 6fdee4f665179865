// Command-line front end: argument parsing and command execution, kept as
// a library so tests can drive it without spawning processes.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cubicmod::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 internal numerical non-convergence.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by parse_args for --help; carries the text to print on stdout.
class help_requested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { eval, invert, orbit, product, agm, verify, sweep };

struct CliConfig {
  Command command = Command::verify;
  std::string eval_fn;  // eval: selected function name
  std::optional<double> signature_a;
  std::optional<double> b;  // second series/Bessel parameter
  std::optional<double> c;
  std::optional<double> r;
  std::optional<double> K;
  std::optional<double> x;
  std::optional<double> y;
  double agm_a = 1.0;
  double agm_b = 1.0;
  double tol = 1e-12;      // per-command default; CUBIC_MODULAR_TOL overrides
  bool tol_given = false;  // true when --tol was passed explicitly
  int orbit_n = 8;
  std::optional<std::string> grid_spec;    // "start:stop:count"
  std::optional<std::string> output_path;  // default: standard output
};

// Parses argv (without the program name). Throws usage_error on malformed
// or out-of-range input and help_requested for --help.
CliConfig parse_args(const std::vector<std::string>& argv);

// Runs the command, writing to `out` unless cfg.output_path is set.
// Returns the process exit code.
int execute(const CliConfig& cfg, std::ostream& out);

// parse_args + execute with the error-to-exit-code mapping applied.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace cubicmod::cli
