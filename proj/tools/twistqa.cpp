// twistqa: run, timescan and spectrum experiments from a config file or preset.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "twistqa/config.hpp"
#include "twistqa/csv.hpp"
#include "twistqa/error.hpp"
#include "twistqa/experiment.hpp"
#include "twistqa/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonArgs {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  auto* config = cmd->add_option("--config", args.config_path, "Experiment config file");
  auto* preset = cmd->add_option("--preset", args.preset, "Built-in preset (see `presets list`)");
  config->excludes(preset);
  cmd->add_option("--out", args.out_dir, "Output directory (overrides outputs.dir)");
  cmd->add_option("--seed", args.seed, "RNG seed for the initial twist angles");
  cmd->add_option("--jobs", args.jobs, "Worker threads (default: logical processors)")->check(CLI::NonNegativeNumber);
}

tqa::ExperimentConfig resolve_config(const CommonArgs& args) {
  if (!args.config_path.empty()) return tqa::load_config(args.config_path);
  if (!args.preset.empty()) return tqa::load_preset(args.preset);
  throw tqa::ParseError("command line", 0, "one of --config or --preset is required");
}

tqa::RunOptions make_options(const CommonArgs& args, const std::string& command_line) {
  tqa::RunOptions opts;
  if (!args.out_dir.empty()) opts.out_dir = args.out_dir;
  opts.seed = args.seed;
  opts.jobs = args.jobs;
  opts.command_line = command_line;
  opts.log = &std::cerr;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational quantum annealing with twisted transverse fields"};
  app.set_version_flag("--version", std::string(TWISTQA_VERSION));
  app.require_subcommand(1);

  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  CommonArgs run_args;
  int snapshots = 0;
  bool dump_states = false;
  auto* run = app.add_subcommand("run", "Conventional baseline and gradient descent at anneal.T");
  add_common(run, run_args);
  run->add_option("--snapshots", snapshots, "Evolution snapshots to write per anneal")->check(CLI::NonNegativeNumber);
  run->add_flag("--dump-states", dump_states, "Also write the snapshot density matrices (binary)");

  CommonArgs scan_args;
  auto* timescan = app.add_subcommand("timescan", "Scan the annealing time and locate T_opt");
  add_common(timescan, scan_args);

  CommonArgs spec_args;
  std::string thetas_source = "zero";
  auto* spectrum = app.add_subcommand("spectrum", "Instantaneous spectra, gaps and adiabatic metrics");
  add_common(spectrum, spec_args);
  spectrum->add_option("--thetas", thetas_source, "`zero` or a file of twist angles")->capture_default_str();

  auto* presets = app.add_subcommand("presets", "Built-in presets");
  presets->require_subcommand(1);
  auto* presets_list = presets->add_subcommand("list", "List preset names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*presets_list) {
      for (const auto& name : tqa::preset_names()) std::cout << name << '\n';
      return kExitOk;
    }
    if (*run) {
      auto opts = make_options(run_args, command_line);
      if (dump_states && snapshots == 0) throw tqa::ParseError("command line", 0, "--dump-states needs --snapshots");
      opts.snapshot_count = snapshots;
      opts.dump_states = dump_states;
      const auto report = tqa::run_single(resolve_config(run_args), opts);
      std::cout << "ground_energy " << tqa::format_real(report.ground_energy) << '\n'
                << "conventional_error " << tqa::format_real(report.point.conventional.error) << '\n'
                << "twisted_error " << tqa::format_real(report.point.twisted.error) << '\n'
                << "output " << report.out_dir.string() << '\n';
    } else if (*timescan) {
      const auto report = tqa::run_timescan(resolve_config(scan_args), make_options(scan_args, command_line));
      const auto& scan = report.scan;
      std::cout << "ground_energy " << tqa::format_real(report.ground_energy) << '\n'
                << "T_opt " << tqa::format_real(scan.T_opt()) << '\n'
                << "twisted_error " << tqa::format_real(scan.points[scan.twisted_opt].twisted.error) << '\n'
                << "conventional_T_opt " << tqa::format_real(scan.points[scan.conventional_opt].T) << '\n'
                << "conventional_error " << tqa::format_real(scan.points[scan.conventional_opt].conventional.error)
                << '\n'
                << "output " << report.out_dir.string() << '\n';
    } else if (*spectrum) {
      auto config = resolve_config(spec_args);
      const auto n = static_cast<std::size_t>(tqa::build_problem(config.problem).n_qubits());
      const auto thetas =
          thetas_source == "zero" ? tqa::TwistAngles::zeros(n) : tqa::read_thetas_file(thetas_source, n);
      const auto report = tqa::run_spectrum(std::move(config), thetas, make_options(spec_args, command_line));
      if (!report.gaps.empty()) {
        std::cout << "min_gap_1 " << tqa::format_real(report.gaps.front().min_gap) << '\n'
                  << "t_at_min_gap_1 " << tqa::format_real(report.gaps.front().t_at_min) << '\n';
      }
      std::cout << "output " << report.out_dir.string() << '\n';
    }
  } catch (const tqa::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tqa::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tqa::DimensionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tqa::NumericalError& e) {
    std::cerr << "numerical abort: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
