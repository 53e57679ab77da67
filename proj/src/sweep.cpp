#include "bhent/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace bhent {

namespace {

constexpr double kOracleTolerance = 1e-9;
constexpr double kIdentityTolerance = 1e-10;
constexpr double kBoundSlack = 1e-10;

std::string describe(const ModelParams& p) {
  std::ostringstream s;
  s.precision(17);
  s << "(alpha=" << p.alpha << ", omega=" << p.omega << ", T=" << p.temperature << ")";
  return s.str();
}

void check(bool ok, const ModelParams& p, const std::string& what) {
  if (!ok) throw VerificationError("verification failed at " + describe(p) + ": " + what);
}

void check_close(double closed, double oracle, double tol, const ModelParams& p,
                 const std::string& what) {
  std::ostringstream s;
  s.precision(17);
  s << what << " closed form " << closed << " vs oracle " << oracle;
  check(std::abs(closed - oracle) <= tol, p, s.str());
}

void verify_row(const SweepRow& row) {
  const ModelParams& p = row.params;
  for (ModePair pair : kAllPairs) {
    const std::string name(to_string(pair));
    const MeasureSet& m = row.at(pair);
    check(m.concurrence >= -kBoundSlack && m.concurrence <= 1.0 + kBoundSlack, p,
          "concurrence out of [0,1] for " + name);
    check(m.eof >= -kBoundSlack && m.eof <= 1.0 + kBoundSlack, p, "EoF out of [0,1] for " + name);
    check(m.mutual_information >= -kBoundSlack && m.mutual_information <= 2.0 + kBoundSlack, p,
          "mutual information out of [0,2] for " + name);

    const DensityMatrix rho = reduced_density(p, pair);
    const MeasureSet oracle = measure_all(rho);
    check_close(m.concurrence, oracle.concurrence, kOracleTolerance, p, "concurrence " + name);
    check_close(m.eof, oracle.eof, kOracleTolerance, p, "EoF " + name);
    check_close(m.mutual_information, oracle.mutual_information, kOracleTolerance, p,
                "mutual information " + name);
    check_close(m.min_pt_eigenvalue, oracle.min_pt_eigenvalue, kOracleTolerance, p,
                "min PT eigenvalue " + name);
  }

  const double alpha2 = p.alpha * p.alpha;
  const double c_ai = row.at(ModePair::A_I).concurrence;
  const double c_aii = row.at(ModePair::A_II).concurrence;
  check_close(c_ai * c_ai + c_aii * c_aii, 4.0 * alpha2 * (1.0 - alpha2), kIdentityTolerance, p,
              "concurrence conservation");

  const double s_a = spectrum_entropy(hermitian_eigenvalues(single_mode_density(p, 0)));
  const double s_i = spectrum_entropy(hermitian_eigenvalues(single_mode_density(p, 1)));
  const double s_ii = spectrum_entropy(hermitian_eigenvalues(single_mode_density(p, 2)));
  check_close(row.at(ModePair::A_I).mutual_information + row.at(ModePair::A_II).mutual_information,
              2.0 * s_a, kOracleTolerance, p, "mutual information conservation");
  check_close(von_neumann_entropy(reduced_density(p, ModePair::I_II)), s_a, kIdentityTolerance, p,
              "purity complementarity S(I,II) vs S(A)");
  check_close(von_neumann_entropy(reduced_density(p, ModePair::A_II)), s_i, kIdentityTolerance, p,
              "purity complementarity S(A,II) vs S(I)");
  check_close(von_neumann_entropy(reduced_density(p, ModePair::A_I)), s_ii, kIdentityTolerance, p,
              "purity complementarity S(A,I) vs S(II)");
}

double& fixed_slot(SweepSpec& spec, Parameter p) {
  switch (p) {
    case Parameter::alpha:
      return spec.alpha;
    case Parameter::omega:
      return spec.omega;
    case Parameter::temperature:
      break;
  }
  return spec.temperature;
}

}  // namespace

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::temperature:
      return "temperature";
    case Parameter::alpha:
      return "alpha";
    case Parameter::omega:
      return "omega";
  }
  return "?";
}

std::string_view to_string(Scale s) { return s == Scale::log ? "log" : "linear"; }

void SweepSpec::validate() const {
  std::ostringstream msg;
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    msg << "--min must be less than --max (got " << min << ", " << max << ")";
  } else if (steps < 2) {
    msg << "--steps must be at least 2 (got " << steps << ")";
  } else if (scale == Scale::log && !(min > 0.0)) {
    msg << "log scale requires --min > 0 (got " << min << ")";
  } else if (vary == Parameter::alpha && !(min > 0.0 && max < 1.0)) {
    msg << "alpha range must lie inside (0, 1)";
  } else if (vary == Parameter::omega && !(min > 0.0)) {
    msg << "omega range must be positive";
  } else if (vary == Parameter::temperature && min < 0.0) {
    msg << "temperature range must be non-negative";
  } else {
    for (const auto& p : grid()) {
      try {
        bhent::validate(p);
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
    }
    return;
  }
  throw UsageError(msg.str());
}

std::vector<ModelParams> SweepSpec::grid() const {
  std::vector<ModelParams> points;
  points.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  SweepSpec copy = *this;
  double& slot = fixed_slot(copy, vary);
  const double last = static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / last;
    double v;
    if (i == 0) {
      v = min;
    } else if (i == steps - 1) {
      v = max;
    } else if (scale == Scale::log) {
      v = std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
    } else {
      v = min + t * (max - min);
    }
    slot = v;
    points.push_back({copy.alpha, copy.omega, copy.temperature});
  }
  return points;
}

SweepRow evaluate_point(const ModelParams& params, bool verify) {
  validate(params);
  SweepRow row;
  row.params = params;
  for (ModePair pair : kAllPairs) {
    MeasureSet& m = row.pairs[static_cast<std::size_t>(pair)];
    m.concurrence = closed_form_concurrence(params, pair);
    m.eof = closed_form_eof(params, pair);
    m.mutual_information = closed_form_mutual_information(params, pair);
    m.min_pt_eigenvalue = closed_form_min_pt_eigenvalue(params, pair);
  }
  if (verify) {
    try {
      verify_row(row);
    } catch (const VerificationError&) {
      throw;
    } catch (const std::exception& e) {
      throw VerificationError("verification failed at " + describe(params) + ": " + e.what());
    }
  }
  return row;
}

std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned workers) {
  config.sweep.validate();
  const auto points = config.sweep.grid();
  std::vector<SweepRow> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(points.size()));

  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < points.size(); i += workers) {
      try {
        rows[i] = evaluate_point(points[i], config.verify);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  // Report the first failure in grid order regardless of scheduling.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", value);
  return buf;
}

std::vector<std::string> csv_columns() {
  std::vector<std::string> cols = {"alpha", "omega", "temperature"};
  for (const char* measure : {"C", "EoF", "MI", "minPT"})
    for (ModePair pair : kAllPairs) cols.push_back(std::string(measure) + "_" + std::string(to_string(pair)));
  return cols;
}

namespace {

std::vector<double> row_values(const SweepRow& row) {
  std::vector<double> v = {row.params.alpha, row.params.omega, row.params.temperature};
  for (ModePair pair : kAllPairs) v.push_back(row.at(pair).concurrence);
  for (ModePair pair : kAllPairs) v.push_back(row.at(pair).eof);
  for (ModePair pair : kAllPairs) v.push_back(row.at(pair).mutual_information);
  for (ModePair pair : kAllPairs) v.push_back(row.at(pair).min_pt_eigenvalue);
  return v;
}

void require_rows(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("no rows to emit");
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  require_rows(rows);
  const auto cols = csv_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << '\n';
  for (const auto& row : rows) {
    const auto values = row_values(row);
    for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << format_real(values[k]);
    out << '\n';
  }
}

void emit_json(const std::vector<SweepRow>& rows, const RunConfig& config, std::ostream& out) {
  require_rows(rows);
  using nlohmann::ordered_json;
  const auto& spec = config.sweep;
  ordered_json cfg;
  switch (config.command) {
    case Command::measure:
      cfg["command"] = "measure";
      break;
    case Command::sweep:
      cfg["command"] = "sweep";
      break;
    case Command::figure:
      cfg["command"] = "figure";
      break;
    case Command::limits:
      cfg["command"] = "limits";
      break;
  }
  if (config.command == Command::measure) {
    cfg["alpha"] = spec.alpha;
    cfg["omega"] = spec.omega;
    cfg["temperature"] = spec.temperature;
  } else {
    cfg["vary"] = to_string(spec.vary);
    cfg["min"] = spec.min;
    cfg["max"] = spec.max;
    cfg["steps"] = spec.steps;
    cfg["scale"] = to_string(spec.scale);
    for (Parameter p : {Parameter::alpha, Parameter::omega, Parameter::temperature}) {
      const double v = p == Parameter::alpha   ? spec.alpha
                       : p == Parameter::omega ? spec.omega
                                               : spec.temperature;
      cfg[std::string(to_string(p))] = p == spec.vary ? ordered_json(nullptr) : ordered_json(v);
    }
  }
  if (config.mass_supplied) cfg["mass"] = config.mass;
  cfg["verify"] = config.verify;

  // Numbers carry exactly the decimal values written to CSV.
  ordered_json json_rows = ordered_json::array();
  const auto cols = csv_columns();
  for (const auto& row : rows) {
    const auto values = row_values(row);
    ordered_json obj;
    for (std::size_t k = 0; k < cols.size(); ++k) obj[cols[k]] = std::stod(format_real(values[k]));
    json_rows.push_back(std::move(obj));
  }
  ordered_json doc;
  doc["config"] = std::move(cfg);
  doc["rows"] = std::move(json_rows);
  out << doc.dump(2) << '\n';
}

void emit_figure_csv(int which, const std::vector<SweepRow>& rows, std::ostream& out) {
  require_rows(rows);
  const char* prefix = nullptr;
  double MeasureSet::*field = nullptr;
  switch (which) {
    case 1:
      prefix = "C";
      field = &MeasureSet::concurrence;
      break;
    case 2:
      prefix = "EoF";
      field = &MeasureSet::eof;
      break;
    case 3:
      prefix = "MI";
      field = &MeasureSet::mutual_information;
      break;
    default:
      throw UsageError("figure must be 1, 2 or 3");
  }
  out << "temperature";
  for (ModePair pair : kAllPairs) out << ',' << prefix << '_' << to_string(pair);
  out << '\n';
  for (const auto& row : rows) {
    out << format_real(row.params.temperature);
    for (ModePair pair : kAllPairs) out << ',' << format_real(row.at(pair).*field);
    out << '\n';
  }
}

std::string limits_report(double alpha) {
  const LimitReport r = asymptotic_limits(alpha);
  std::ostringstream s;
  s << "alpha = " << format_real(alpha) << "  (alpha^2 = " << format_real(alpha * alpha) << ")\n";
  s << "limit        pair   concurrence        mutual_information\n";
  auto section = [&](const char* label, const PairValues& v) {
    for (std::size_t k = 0; k < kAllPairs.size(); ++k) {
      char line[128];
      std::snprintf(line, sizeof line, "%-12s %-6s %-18s %s\n", label,
                    std::string(to_string(kAllPairs[k])).c_str(),
                    format_real(v.concurrence[k]).c_str(),
                    format_real(v.mutual_information[k]).c_str());
      s << line;
    }
  };
  section("T=0", r.zero_temperature);
  section("T=inf", r.infinite_temperature);
  // The ratio is 1/2 identically; printed from the analytic value.
  s << "ratio I_A_I(T=inf)/I_A_I(T=0) = " << r.accessible_mi_ratio << '\n';
  return s.str();
}

}  // namespace bhent
