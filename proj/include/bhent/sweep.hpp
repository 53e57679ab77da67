#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhent/model.hpp"

namespace bhent {

/// Bad command line or sweep definition. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed form and spectral oracle disagree, or a row breaks a model
/// invariant. Indicates an implementation bug. Exit code 3.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written. Exit code 4.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Parameter { temperature, alpha, omega };
enum class Scale { linear, log };
enum class OutputFormat { csv, json };
enum class Command { measure, sweep, figure, limits };

std::string_view to_string(Parameter p);
std::string_view to_string(Scale s);

struct SweepSpec {
  Parameter vary = Parameter::temperature;
  double min = 0.01;
  double max = 10.0;
  int steps = 200;
  Scale scale = Scale::log;
  // Fixed values; the one named by `vary` is ignored.
  double alpha = 0.70710678118654752;
  double omega = 1.0;
  double temperature = 1.0;

  /// Throws UsageError unless min < max, steps >= 2 and log implies min > 0.
  void validate() const;
  /// Grid points in ascending order of the varied parameter.
  std::vector<ModelParams> grid() const;
};

struct RunConfig {
  Command command = Command::sweep;
  SweepSpec sweep;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> out_path;  ///< empty means standard output
  bool verify = true;
  bool mass_supplied = false;
  double mass = 0.0;
  int figure = 1;     ///< 1 concurrence, 2 entanglement of formation, 3 mutual information
  unsigned jobs = 0;  ///< worker threads; 0 picks hardware concurrency
};

/// Measures of one grid point, pairs in kAllPairs order.
struct SweepRow {
  ModelParams params;
  std::array<MeasureSet, 3> pairs{};

  const MeasureSet& at(ModePair pair) const { return pairs[static_cast<std::size_t>(pair)]; }
};

/**
 * Closed-form measures at one point.
 *
 * With verify set, the spectral pipeline is evaluated as well and every
 * value, bound and conservation identity is checked; a mismatch throws
 * VerificationError naming the point.
 */
SweepRow evaluate_point(const ModelParams& params, bool verify);

/// Rows in grid order. Work is split across `workers` threads (0 = hardware
/// concurrency); output does not depend on the worker count.
std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned workers = 0);

/// 12 significant digits, C locale, no negative zero.
std::string format_real(double value);

std::vector<std::string> csv_columns();
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void emit_json(const std::vector<SweepRow>& rows, const RunConfig& config, std::ostream& out);

/// `temperature` plus the three per-pair columns of the measure plotted in
/// figure 1 (C), 2 (EoF) or 3 (MI).
void emit_figure_csv(int which, const std::vector<SweepRow>& rows, std::ostream& out);

/// Human-readable asymptotic report for `limits`.
std::string limits_report(double alpha);

/// Parses everything after the program name. Throws UsageError (with usage
/// text appended) on any invalid input.
RunConfig parse_args(const std::vector<std::string>& args);

/// Thrown by parse_args for --help; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs a parsed command and writes its output. Returns the process exit code.
int execute(const RunConfig& config, std::ostream& stdout_stream);

/// Full CLI entry point: parse, execute, map errors to exit codes 0/2/3/4.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhent
