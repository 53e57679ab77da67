#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bhent/sweep.hpp"

namespace bhent {

namespace {

struct Flags {
  double alpha = 0.70710678118654752;
  double omega = 1.0;
  double temperature = 0.0;
  double mass = 0.0;
  std::string vary;
  double min = 0.01;
  double max = 10.0;
  int steps = 200;
  std::string scale;
  std::string format = "csv";
  std::string out;
  std::string verify = "on";
  unsigned jobs = 0;
  int figure = 0;
};

struct CommonOptions {
  CLI::Option* alpha = nullptr;
  CLI::Option* omega = nullptr;
  CLI::Option* temperature = nullptr;
  CLI::Option* mass = nullptr;
};

CommonOptions add_point_options(CLI::App& cmd, Flags& f, bool with_temperature) {
  CommonOptions o;
  o.alpha = cmd.add_option("--alpha", f.alpha, "State parameter alpha in (0, 1)");
  o.omega = cmd.add_option("--omega", f.omega, "Mode frequency (> 0)");
  if (with_temperature) {
    o.temperature = cmd.add_option("--temperature", f.temperature, "Hawking temperature (>= 0)");
    o.mass = cmd.add_option("--mass", f.mass, "Black hole mass; sets T = 1/(8 pi M)");
    o.temperature->excludes(o.mass);
    o.mass->excludes(o.temperature);
  }
  return o;
}

void add_output_options(CLI::App& cmd, Flags& f, bool with_format) {
  if (with_format) {
    cmd.add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  cmd.add_option("--out", f.out, "Output path (default: standard output)");
}

void add_compute_options(CLI::App& cmd, Flags& f) {
  cmd.add_option("--verify", f.verify, "Cross-check every row against the spectral oracle")
      ->check(CLI::IsMember({"on", "off"}));
  cmd.add_option("--jobs", f.jobs, "Worker threads (0 = all cores)");
}

void add_grid_options(CLI::App& cmd, Flags& f, bool required) {
  auto* mn = cmd.add_option("--min", f.min, "Lower end of the varied parameter");
  auto* mx = cmd.add_option("--max", f.max, "Upper end of the varied parameter");
  auto* st = cmd.add_option("--steps", f.steps, "Number of grid points (>= 2)");
  cmd.add_option("--scale", f.scale, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));
  if (required) {
    mn->required();
    mx->required();
    st->required();
  }
}

// Exactly one of --temperature / --mass, or neither when T is the swept axis.
void resolve_temperature(const CommonOptions& o, const Flags& f, bool temperature_varied,
                         RunConfig& config) {
  const bool has_t = o.temperature && o.temperature->count() > 0;
  const bool has_m = o.mass && o.mass->count() > 0;
  if (temperature_varied) {
    if (has_t || has_m) throw UsageError("--temperature/--mass conflict with --vary temperature");
    return;
  }
  if (!has_t && !has_m) throw UsageError("one of --temperature or --mass is required");
  if (has_m) {
    try {
      config.sweep.temperature = hawking_temperature(f.mass);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    config.mass_supplied = true;
    config.mass = f.mass;
  } else {
    config.sweep.temperature = f.temperature;
  }
}

void check_point_domain(const SweepSpec& spec) {
  if (spec.vary != Parameter::alpha && !(spec.alpha > 0.0 && spec.alpha < 1.0)) {
    std::ostringstream msg;
    msg << "--alpha must lie in (0, 1), got " << spec.alpha;
    throw UsageError(msg.str());
  }
  if (spec.vary != Parameter::omega && !(spec.omega > 0.0 && std::isfinite(spec.omega))) {
    std::ostringstream msg;
    msg << "--omega must be positive, got " << spec.omega;
    throw UsageError(msg.str());
  }
  if (spec.vary != Parameter::temperature &&
      !(spec.temperature >= 0.0 && std::isfinite(spec.temperature))) {
    std::ostringstream msg;
    msg << "--temperature must be non-negative, got " << spec.temperature;
    throw UsageError(msg.str());
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Entanglement redistribution of Dirac modes near a Schwarzschild horizon", "bhent"};
  app.require_subcommand(1);
  Flags f;

  auto* measure = app.add_subcommand("measure", "Evaluate every measure at a single point");
  const auto measure_opts = add_point_options(*measure, f, true);
  add_output_options(*measure, f, true);
  add_compute_options(*measure, f);

  auto* sweep = app.add_subcommand("sweep", "Evaluate measures along one parameter axis");
  const auto sweep_opts = add_point_options(*sweep, f, true);
  sweep->add_option("--vary", f.vary, "Parameter to sweep")
      ->required()
      ->check(CLI::IsMember({"temperature", "alpha", "omega"}));
  add_grid_options(*sweep, f, true);
  add_output_options(*sweep, f, true);
  add_compute_options(*sweep, f);

  auto* figure = app.add_subcommand("figure", "Figure data versus temperature (1 C, 2 EoF, 3 MI)");
  figure->add_option("which", f.figure, "Figure number")->required()->check(CLI::Range(1, 3));
  add_point_options(*figure, f, false);
  add_grid_options(*figure, f, false);
  add_output_options(*figure, f, false);
  add_compute_options(*figure, f);

  auto* limits = app.add_subcommand("limits", "Zero and infinite temperature limits");
  limits->add_option("--alpha", f.alpha, "State parameter alpha in (0, 1)");
  add_output_options(*limits, f, false);

  // CLI11 expects argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n\n" + app.help());
  }

  RunConfig config;
  config.format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!f.out.empty()) config.out_path = f.out;
  config.verify = f.verify == "on";
  config.jobs = f.jobs;
  config.sweep.alpha = f.alpha;
  config.sweep.omega = f.omega;

  try {
    if (measure->parsed()) {
      config.command = Command::measure;
      resolve_temperature(measure_opts, f, false, config);
      try {
        validate(ModelParams{config.sweep.alpha, config.sweep.omega, config.sweep.temperature});
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
    } else if (sweep->parsed()) {
      config.command = Command::sweep;
      config.sweep.vary = f.vary == "alpha"   ? Parameter::alpha
                          : f.vary == "omega" ? Parameter::omega
                                              : Parameter::temperature;
      if (config.sweep.vary == Parameter::alpha && sweep_opts.alpha->count() > 0)
        throw UsageError("--alpha conflicts with --vary alpha");
      if (config.sweep.vary == Parameter::omega && sweep_opts.omega->count() > 0)
        throw UsageError("--omega conflicts with --vary omega");
      resolve_temperature(sweep_opts, f, config.sweep.vary == Parameter::temperature, config);
      config.sweep.min = f.min;
      config.sweep.max = f.max;
      config.sweep.steps = f.steps;
      config.sweep.scale = f.scale == "log" ? Scale::log : Scale::linear;
      check_point_domain(config.sweep);
      config.sweep.validate();
    } else if (figure->parsed()) {
      config.command = Command::figure;
      config.figure = f.figure;
      config.sweep.vary = Parameter::temperature;
      config.sweep.min = f.min;
      config.sweep.max = f.max;
      config.sweep.steps = f.steps;
      config.sweep.scale = f.scale == "linear" ? Scale::linear : Scale::log;
      check_point_domain(config.sweep);
      config.sweep.validate();
    } else {
      config.command = Command::limits;
      SweepSpec probe = config.sweep;
      probe.vary = Parameter::temperature;
      check_point_domain(probe);
    }
  } catch (const UsageError& e) {
    throw UsageError(std::string(e.what()) + "\n\n" + app.help());
  }
  return config;
}

namespace {

void write_output(const RunConfig& config, const std::string& content, std::ostream& stdout_stream) {
  if (!config.out_path) {
    stdout_stream << content;
    stdout_stream.flush();
    if (!stdout_stream) throw OutputError("failed writing to standard output");
    return;
  }
  std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open output file " + *config.out_path);
  file << content;
  file.flush();
  if (!file) throw OutputError("failed writing output file " + *config.out_path);
}

}  // namespace

int execute(const RunConfig& config, std::ostream& stdout_stream) {
  std::ostringstream buffer;
  switch (config.command) {
    case Command::limits:
      buffer << limits_report(config.sweep.alpha);
      break;
    case Command::measure: {
      const ModelParams point{config.sweep.alpha, config.sweep.omega, config.sweep.temperature};
      const std::vector<SweepRow> rows{evaluate_point(point, config.verify)};
      if (config.format == OutputFormat::json)
        emit_json(rows, config, buffer);
      else
        emit_csv(rows, buffer);
      break;
    }
    case Command::sweep: {
      const auto rows = run_sweep(config, config.jobs);
      if (config.format == OutputFormat::json)
        emit_json(rows, config, buffer);
      else
        emit_csv(rows, buffer);
      break;
    }
    case Command::figure:
      emit_figure_csv(config.figure, run_sweep(config, config.jobs), buffer);
      break;
  }
  write_output(config, buffer.str(), stdout_stream);
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(args), out);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const OutputError& e) {
    err << "I/O error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace bhent
