#include "prisms/cli.hpp"

#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "prisms/analytic.hpp"
#include "prisms/lhv.hpp"
#include "prisms/montecarlo.hpp"

namespace prisms {

namespace {

std::uint64_t wall_clock_seed() {
  return static_cast<std::uint64_t>(
      std::chrono::system_clock::now().time_since_epoch().count());
}

Regime parse_regime(const std::string& text) {
  if (text == "A" || text == "a") return Regime::A;
  if (text == "B" || text == "b") return Regime::B;
  throw UsageError("--regime must be A or B, got '" + text + "'");
}

std::vector<Regime> parse_regime_list(const std::string& text) {
  if (text == "both" || text == "A,B" || text == "B,A" || text == "a,b")
    return {Regime::A, Regime::B};
  return {parse_regime(text)};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::istringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

double parse_real(const std::string& token, const std::string& flag) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw UsageError(flag + ": not a number: '" + token + "'");
  }
  if (consumed != token.size())
    throw UsageError(flag + ": not a number: '" + token + "'");
  return value;
}

// Comma-separated values; a lo:hi:step token expands inclusively when step
// lands on hi.
std::vector<double> parse_real_grid(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  for (const std::string& token : split(text, ',')) {
    if (token.find(':') == std::string::npos) {
      values.push_back(parse_real(token, flag));
      continue;
    }
    const std::vector<std::string> parts = split(token, ':');
    if (parts.size() != 3)
      throw UsageError(flag + ": range must be lo:hi:step, got '" + token + "'");
    const double lo = parse_real(parts[0], flag);
    const double hi = parse_real(parts[1], flag);
    const double step = parse_real(parts[2], flag);
    if (!(step > 0.0)) throw UsageError(flag + ": range step must be positive");
    if (hi < lo) throw UsageError(flag + ": range is empty, hi < lo");
    const int count = static_cast<int>((hi - lo) / step + 1e-9);
    for (int k = 0; k <= count; ++k)
      values.push_back(std::min(lo + k * step, hi));
  }
  return values;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> values;
  for (const std::string& token : split(text, ',')) {
    std::size_t consumed = 0;
    int value = 0;
    try {
      value = std::stoi(token, &consumed);
    } catch (const std::exception&) {
      throw UsageError(flag + ": not an integer: '" + token + "'");
    }
    if (consumed != token.size())
      throw UsageError(flag + ": not an integer: '" + token + "'");
    values.push_back(value);
  }
  return values;
}

struct CliParser {
  CLI::App app{"Exact and simulated CHSH values for the coupled-prisms model", "prisms"};
  RunConfig cfg;

  int n = 0;
  double epsilon = 0.0;
  double rho = 0.0;
  std::string regime_text = "A";
  std::string sweep_n;
  std::string sweep_epsilon;
  std::string sweep_rho;
  std::string sweep_regimes = "both";
  std::string sweep_mode = "exact";
  std::string format_text = "csv";
  std::string out_path;
  std::string plot_path;
  bool time_seed = false;

  CLI::App* exact = nullptr;
  CLI::App* simulate = nullptr;
  CLI::App* sweep = nullptr;
  CLI::App* lhv = nullptr;

  CliParser() {
    app.require_subcommand(1);

    exact = app.add_subcommand("exact", "Closed-pipeline CHSH value for one parameter point");
    add_point_options(*exact);
    add_output_options(*exact);

    simulate = app.add_subcommand("simulate", "Monte Carlo estimate for one parameter point");
    add_point_options(*simulate);
    simulate->add_option("--trials", cfg.trials, "samples per coincidence experiment")
        ->required();
    add_seed_options(*simulate);
    add_output_options(*simulate);

    sweep = app.add_subcommand("sweep", "Evaluate a parameter grid");
    sweep->add_option("--n", sweep_n, "comma-separated face counts, e.g. 4,6,10")
        ->required();
    sweep->add_option("--epsilon", sweep_epsilon,
                      "comma-separated values and/or lo:hi:step ranges")
        ->required();
    sweep->add_option("--rho", sweep_rho, "comma-separated values and/or lo:hi:step ranges")
        ->required();
    sweep->add_option("--regime", sweep_regimes, "A, B, or both (default both)");
    sweep->add_option("--mode", sweep_mode, "exact or mc (default exact)")
        ->check(CLI::IsMember({"exact", "mc", "montecarlo"}));
    sweep->add_option("--trials", cfg.trials, "samples per experiment (mc mode)");
    add_seed_options(*sweep);
    add_output_options(*sweep);
    CLI::Option* plot = sweep->add_option(
        "--plot-script", plot_path, "also write a gnuplot script for the CSV");
    plot->needs(sweep->get_option("--out"));

    lhv = app.add_subcommand(
        "lhv", "Deterministic local-strategy certificate for the CHSH bound");
    add_output_options(*lhv);
  }

  void add_point_options(CLI::App& sub) {
    sub.add_option("--n", n, "number of lateral faces (even, at least 4)")->required();
    sub.add_option("--epsilon", epsilon, "aim failure probability in [0, 1]")->required();
    sub.add_option("--rho", rho, "rod survival probability in [0, 1]")->required();
    sub.add_option("--regime", regime_text, "preparation regime, A or B")->required();
  }

  void add_seed_options(CLI::App& sub) {
    CLI::Option* seed =
        sub.add_option("--seed", cfg.seed, "master seed (default 0; runs are repeatable)");
    sub.add_flag("--time-seed", time_seed, "seed from the wall clock instead")
        ->excludes(seed);
    sub.add_option("--workers", cfg.workers, "worker threads (never changes results)");
  }

  void add_output_options(CLI::App& sub) {
    sub.add_option("--format", format_text, "csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--out", out_path, "write to this file instead of stdout");
  }

  void finalize() {
    if (exact->parsed()) cfg.command = Subcommand::Exact;
    else if (simulate->parsed()) cfg.command = Subcommand::Simulate;
    else if (sweep->parsed()) cfg.command = Subcommand::Sweep;
    else cfg.command = Subcommand::Lhv;

    cfg.format = format_text == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (!plot_path.empty()) cfg.plot_script_path = plot_path;
    if (time_seed) cfg.seed = wall_clock_seed();

    switch (cfg.command) {
      case Subcommand::Exact:
      case Subcommand::Simulate:
        cfg.regime = parse_regime(regime_text);
        try {
          cfg.params = validate_params(n, epsilon, rho);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        if (cfg.command == Subcommand::Simulate && cfg.trials == 0)
          throw UsageError("--trials must be positive");
        break;
      case Subcommand::Sweep: {
        cfg.sweep.n_values = parse_int_list(sweep_n, "--n");
        cfg.sweep.epsilon_grid = parse_real_grid(sweep_epsilon, "--epsilon");
        cfg.sweep.rho_grid = parse_real_grid(sweep_rho, "--rho");
        cfg.sweep.regimes = parse_regime_list(sweep_regimes);
        cfg.sweep.mode =
            sweep_mode == "exact" ? SweepMode::Exact : SweepMode::MonteCarlo;
        cfg.sweep.trials = cfg.trials;
        cfg.sweep.seed = cfg.seed;
        cfg.sweep.workers = cfg.workers;
        try {
          cfg.sweep.validate();
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        break;
      }
      case Subcommand::Lhv:
        break;
    }
  }
};

void write_plot_script(const std::string& script_path, const std::string& csv_path) {
  std::ofstream script(script_path, std::ios::binary);
  if (!script) throw std::runtime_error("cannot open plot script path: " + script_path);
  script << "# gnuplot script for the sweep CSV written alongside it\n"
         << "set datafile separator ','\n"
         << "set xlabel 'epsilon'\n"
         << "set ylabel 'CHSH I'\n"
         << "set yrange [1.8:4.2]\n"
         << "plot '" << csv_path << "' skip 1 \\\n"
         << "     using 3:5:(strcol(1) eq 'A' ? 1 : 2) \\\n"
         << "     with points pt 7 lc variable title 'regime A=1, B=2'\n";
  script.flush();
  if (!script.good()) throw std::runtime_error("write failed: " + script_path);
}

void emit_document(const RunConfig& cfg, std::ostream& sink) {
  switch (cfg.command) {
    case Subcommand::Exact: {
      const Preparation prep = Preparation::canonical(cfg.regime);
      const ChshValue value = chsh(cfg.params, prep);
      const std::vector<SweepRow> rows = {SweepRow{cfg.regime, cfg.params.n,
                                                   cfg.params.epsilon, cfg.params.rho,
                                                   value.value, 0.0}};
      if (cfg.format == OutputFormat::Csv)
        emit_rows_csv(rows, sink);
      else
        emit_rows_json(rows, EmitMeta{"exact", 0, kVersion}, sink);
      break;
    }
    case Subcommand::Simulate: {
      const Preparation prep = Preparation::canonical(cfg.regime);
      const EstimateReport report =
          estimate(cfg.params, prep, cfg.trials, cfg.seed, cfg.workers);
      if (cfg.format == OutputFormat::Csv)
        emit_report_csv(report, sink);
      else
        emit_report_json(report, EmitMeta{"montecarlo", cfg.seed, kVersion}, sink);
      break;
    }
    case Subcommand::Sweep: {
      const std::vector<SweepRow> rows = run_sweep(cfg.sweep);
      const char* mode = cfg.sweep.mode == SweepMode::Exact ? "exact" : "montecarlo";
      if (cfg.format == OutputFormat::Csv)
        emit_rows_csv(rows, sink);
      else
        emit_rows_json(rows, EmitMeta{mode, cfg.sweep.seed, kVersion}, sink);
      break;
    }
    case Subcommand::Lhv: {
      const LhvCertificate cert = lhv_max_chsh();
      if (cfg.format == OutputFormat::Csv)
        emit_certificate_csv(cert, sink);
      else
        emit_certificate_json(cert, EmitMeta{"lhv", 0, kVersion}, sink);
      break;
    }
  }
}

}  // namespace

RunConfig parse_cli(const std::vector<std::string>& args) {
  CliParser parser;
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("prisms");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    parser.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  parser.finalize();
  return parser.cfg;
}

void run_config(const RunConfig& cfg, std::ostream& out) {
  if (cfg.plot_script_path) {
    if (!cfg.out_path)
      throw UsageError("--plot-script requires --out so the script has a file to read");
    write_plot_script(*cfg.plot_script_path, *cfg.out_path);
  }
  if (!cfg.out_path) {
    emit_document(cfg, out);
    if (!out.good()) throw std::runtime_error("write failed on output stream");
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot open output file: " + *cfg.out_path + ": " +
                             std::strerror(errno));
  emit_document(cfg, file);
  file.flush();
  if (!file.good()) throw std::runtime_error("write failed: " + *cfg.out_path);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliParser parser;
  try {
    parser.app.parse(argc, argv);
    parser.finalize();
  } catch (const CLI::CallForHelp& e) {
    return parser.app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return parser.app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    run_config(parser.cfg, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace prisms
