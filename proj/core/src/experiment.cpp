#include "twistqa/experiment.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "twistqa/csv.hpp"
#include "twistqa/diagnostics.hpp"
#include "twistqa/error.hpp"
#include "twistqa/version.hpp"

namespace tqa {

namespace {

using json = nlohmann::ordered_json;

std::ofstream open_output(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::filesystem::path prepare(ExperimentConfig& config, const RunOptions& options) {
  if (options.seed) config.variational.seed = *options.seed;
  config.variational.jobs = options.jobs;
  if (options.out_dir) config.output_dir = *options.out_dir;
  std::filesystem::create_directories(config.output_dir);
  return config.output_dir;
}

std::string compiler_id() {
#if defined(__clang__)
  return "clang " __clang_version__;
#elif defined(__GNUC__)
  return "gcc " __VERSION__;
#else
  return "unknown";
#endif
}

json manifest_base(const std::string& command, const ExperimentConfig& config, const RunOptions& options) {
  json m;
  m["tool"] = "twistqa";
  m["command"] = command;
  m["command_line"] = options.command_line;
  m["versions"] = {{"twistqa", TWISTQA_VERSION},
                   {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                 std::to_string(EIGEN_MINOR_VERSION)},
                   {"compiler", compiler_id()}};
  m["seed"] = config.variational.seed;
  m["jobs"] = options.jobs;
  json resolved = json::object();
  for (const auto& [key, value] : describe(config)) resolved[key] = value;
  m["config"] = resolved;
  m["config_origin"] = config.origin;
  m["config_text"] = config.text;
  return m;
}

void write_manifest(const std::filesystem::path& dir, const json& manifest) {
  auto out = open_output(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

void log_line(const RunOptions& options, const std::string& line) {
  if (options.log) *options.log << line << std::endl;
}

}  // namespace

TwistAngles parse_thetas(std::istream& in, const std::string& origin, std::size_t expected_size) {
  std::vector<double> thetas;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line.substr(0, line.find('#')));
    std::string tok;
    while (fields >> tok) {
      double x = 0.0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(x)) {
        throw ParseError(origin, line_no, "invalid angle '" + tok + "'");
      }
      thetas.push_back(x);
    }
  }
  if (thetas.size() != expected_size) {
    throw ParseError(origin, 0,
                     "expected " + std::to_string(expected_size) + " angles, found " + std::to_string(thetas.size()));
  }
  return TwistAngles(std::move(thetas));
}

TwistAngles read_thetas_file(const std::filesystem::path& path, std::size_t expected_size) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open thetas file");
  return parse_thetas(in, path.string(), expected_size);
}

void write_thetas_file(const std::filesystem::path& path, const TwistAngles& thetas) {
  auto out = open_output(path);
  out << "# twist angles (radians), qubit 0 first\n";
  for (double t : thetas.values()) out << format_real(t) << '\n';
}

void write_trajectory_csv(std::ostream& out, const VariationalState& state) {
  const std::size_t n = state.history.empty() ? state.thetas.size() : state.history.front().thetas.size();
  std::vector<std::string> header{"step", "energy", "error"};
  for (std::size_t j = 0; j < n; ++j) header.push_back("theta_" + std::to_string(j));
  CsvWriter csv(out, header);
  for (const auto& h : state.history) {
    std::vector<CsvWriter::Cell> cells{static_cast<double>(h.step), h.energy, h.error};
    for (double t : h.thetas.values()) cells.emplace_back(t);
    csv.row(cells);
  }
}

void write_merit_header(std::ostream& out) { CsvWriter(out, {"T", "gamma", "step", "energy", "error", "purity", "overlap"}); }

void write_merit_row(std::ostream& out, double T, double gamma, int step, const AnnealOutcome& o) {
  out << format_real(T) << ',' << format_real(gamma) << ',' << step << ',' << format_real(o.energy) << ','
      << format_real(o.error) << ',' << format_real(o.purity) << ',' << format_real(o.overlap) << '\n';
}

void write_timescan_csv(std::ostream& out, const TimeScanResult& scan) {
  CsvWriter csv(out, {"T", "conventional_energy", "conventional_error", "twisted_energy", "twisted_error"});
  for (const auto& p : scan.points) {
    csv.row({p.T, p.conventional.energy, p.conventional.error, p.twisted.energy, p.twisted.error});
  }
}

void write_spectrum_csv(std::ostream& out, const SpectrumTrace& trace) {
  const std::size_t levels = trace.levels.empty() ? 0 : trace.levels.front().size();
  std::vector<std::string> header{"t"};
  for (std::size_t k = 0; k < levels; ++k) header.push_back("E" + std::to_string(k));
  CsvWriter csv(out, header);
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    std::vector<CsvWriter::Cell> cells{trace.times[i]};
    for (double e : trace.levels[i]) cells.emplace_back(e);
    csv.row(cells);
  }
}

void write_gaps_csv(std::ostream& out, const std::vector<GapTrace>& gaps) {
  std::vector<std::string> header{"t"};
  for (const auto& g : gaps) header.push_back("gap_" + std::to_string(g.level));
  CsvWriter csv(out, header);
  if (gaps.empty()) return;
  for (std::size_t i = 0; i < gaps.front().times.size(); ++i) {
    std::vector<CsvWriter::Cell> cells{gaps.front().times[i]};
    for (const auto& g : gaps) cells.emplace_back(g.gaps[i]);
    csv.row(cells);
  }
}

void write_adiabatic_csv(std::ostream& out, const AdiabaticTrace& trace) {
  std::vector<std::string> header{"t"};
  for (int j : trace.levels) {
    header.push_back("numer_" + std::to_string(j));
    header.push_back("A_" + std::to_string(j));
  }
  CsvWriter csv(out, header);
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    std::vector<CsvWriter::Cell> cells{trace.times[i]};
    for (std::size_t row = 0; row < trace.levels.size(); ++row) {
      cells.emplace_back(trace.numerators[row][i]);
      cells.push_back(trace.metrics[row][i]);
    }
    csv.row(cells);
  }
}

void write_snapshot_csv(std::ostream& out, const std::vector<StateSample>& samples, const AnnealSchedule& schedule) {
  CsvWriter csv(out, {"t", "trace_re", "purity", "energy"});
  for (const auto& s : samples) {
    const double t = std::min(s.t, schedule.T());
    csv.row({s.t, s.state.trace().real(), purity(s.state), expectation(hamiltonian_at(schedule, t), s.state)});
  }
}

void write_state_dump(std::ostream& out, const std::vector<StateSample>& samples) {
  auto put = [&](double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    char bytes[sizeof bits];
    std::memcpy(bytes, &bits, sizeof bits);
    out.write(bytes, sizeof bytes);
  };
  for (const auto& s : samples) {
    put(s.t);
    const Matrix& m = s.state.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        put(m(r, c).real());
        put(m(r, c).imag());
      }
    }
  }
}

SingleRunReport run_single(ExperimentConfig config, const RunOptions& options) {
  const auto dir = prepare(config, options);
  const AnnealProblem problem(build_problem(config.problem));
  config.anneal.validate();

  SingleRunReport report;
  report.out_dir = dir;
  report.ground_energy = problem.ground_energy();
  log_line(options, "ground-state energy " + format_real(problem.ground_energy()));
  report.point = run_variational(problem, config.anneal, config.variational);
  const auto& point = report.point;
  log_line(options, "conventional error " + format_real(point.conventional.error) + ", twisted error " +
                        format_real(point.twisted.error));

  {
    auto out = open_output(dir / "trajectory.csv");
    write_trajectory_csv(out, point.descent);
  }
  {
    auto out = open_output(dir / "merit.csv");
    write_merit_header(out);
    write_merit_row(out, config.anneal.T, config.anneal.gamma, 0, point.conventional);
    write_merit_row(out, config.anneal.T, config.anneal.gamma, point.descent.history.back().step, point.twisted);
  }
  write_thetas_file(dir / "thetas.txt", point.descent.thetas);

  json outputs = json::array({"trajectory.csv", "merit.csv", "thetas.txt"});
  if (options.snapshot_count > 0) {
    const auto n = static_cast<std::size_t>(problem.n_qubits());
    for (const auto& [name, thetas] : {std::pair{std::string("conventional"), TwistAngles::zeros(n)},
                                       std::pair{std::string("twisted"), point.descent.thetas}}) {
      const AnnealOutcome o = run_anneal(problem, thetas, config.anneal, options.snapshot_count);
      const AnnealSchedule schedule(twisted_driver(problem.driver(), thetas), problem.dense(), config.anneal.T);
      auto csv = open_output(dir / ("snapshots_" + name + ".csv"));
      write_snapshot_csv(csv, o.evolution.samples, schedule);
      outputs.push_back("snapshots_" + name + ".csv");
      if (options.dump_states) {
        auto bin = open_output(dir / ("states_" + name + ".bin"), std::ios::out | std::ios::binary);
        write_state_dump(bin, o.evolution.samples);
        outputs.push_back("states_" + name + ".bin");
      }
    }
  }

  json m = manifest_base("run", config, options);
  m["outputs"] = outputs;
  m["summary"] = {{"ground_energy", problem.ground_energy()},
                  {"conventional_energy", point.conventional.energy},
                  {"conventional_error", point.conventional.error},
                  {"twisted_energy", point.twisted.energy},
                  {"twisted_error", point.twisted.error},
                  {"steps_run", point.descent.history.back().step},
                  {"stopped_early", point.descent.stopped_early},
                  {"final_thetas", point.descent.thetas.vector()}};
  write_manifest(dir, m);
  return report;
}

TimeScanReport run_timescan(ExperimentConfig config, const RunOptions& options) {
  const auto dir = prepare(config, options);
  const AnnealProblem problem(build_problem(config.problem));
  config.anneal.validate();

  TimeScanReport report;
  report.out_dir = dir;
  report.ground_energy = problem.ground_energy();
  report.scan = anneal_time_scan(config.scan_T, problem, config.anneal, config.variational, [&](const TimeScanPoint& p) {
    log_line(options, "T=" + format_real(p.T) + " conventional error " + format_real(p.conventional.error) +
                          ", twisted error " + format_real(p.twisted.error));
  });
  const auto& scan = report.scan;

  {
    auto out = open_output(dir / "timescan.csv");
    write_timescan_csv(out, scan);
  }
  {
    auto out = open_output(dir / "merit.csv");
    write_merit_header(out);
    for (const auto& p : scan.points) {
      write_merit_row(out, p.T, config.anneal.gamma, 0, p.conventional);
      write_merit_row(out, p.T, config.anneal.gamma, p.descent.history.back().step, p.twisted);
    }
  }
  write_thetas_file(dir / "thetas_opt.txt", scan.points[scan.twisted_opt].descent.thetas);

  json m = manifest_base("timescan", config, options);
  m["outputs"] = json::array({"timescan.csv", "merit.csv", "thetas_opt.txt"});
  m["summary"] = {{"ground_energy", problem.ground_energy()},
                  {"twisted_T_opt", scan.T_opt()},
                  {"twisted_error_at_T_opt", scan.points[scan.twisted_opt].twisted.error},
                  {"conventional_T_opt", scan.points[scan.conventional_opt].T},
                  {"conventional_error_at_T_opt", scan.points[scan.conventional_opt].conventional.error}};
  write_manifest(dir, m);
  return report;
}

SpectrumReport run_spectrum(ExperimentConfig config, const TwistAngles& thetas, const RunOptions& options) {
  const auto dir = prepare(config, options);
  const AnnealProblem problem(build_problem(config.problem));
  config.anneal.validate();
  if (thetas.size() != static_cast<std::size_t>(problem.n_qubits())) {
    throw DimensionError("spectrum: " + std::to_string(thetas.size()) + " angles for " +
                         std::to_string(problem.n_qubits()) + " qubits");
  }
  const AnnealSchedule schedule(twisted_driver(problem.driver(), thetas), problem.dense(), config.anneal.T);

  SpectrumReport report;
  report.out_dir = dir;
  report.spectrum = spectrum_trace(schedule, config.spectrum.n_points, config.spectrum.levels, false, options.jobs);
  const int levels = static_cast<int>(report.spectrum.levels.front().size());
  for (int j = 1; j < levels; ++j) report.gaps.push_back(gap_trace(report.spectrum, j));
  if (levels > 1) report.adiabatic = adiabatic_trace(schedule, config.spectrum.n_points, levels - 1, options.jobs);
  if (!report.spectrum.continuity_warnings.empty()) {
    log_line(options, std::to_string(report.spectrum.continuity_warnings.size()) +
                          " eigenvector continuity warnings; first: " + report.spectrum.continuity_warnings.front());
  }

  {
    auto out = open_output(dir / "spectrum.csv");
    write_spectrum_csv(out, report.spectrum);
  }
  {
    auto out = open_output(dir / "gaps.csv");
    write_gaps_csv(out, report.gaps);
  }
  {
    auto out = open_output(dir / "adiabatic.csv");
    write_adiabatic_csv(out, report.adiabatic);
  }

  json m = manifest_base("spectrum", config, options);
  m["outputs"] = json::array({"spectrum.csv", "gaps.csv", "adiabatic.csv"});
  m["thetas"] = thetas.vector();
  json summary = {{"ground_energy", problem.ground_energy()},
                  {"continuity_warnings", report.spectrum.continuity_warnings.size()}};
  if (!report.gaps.empty()) {
    summary["min_gap_1"] = report.gaps.front().min_gap;
    summary["t_at_min_gap_1"] = report.gaps.front().t_at_min;
  }
  m["summary"] = summary;
  write_manifest(dir, m);
  return report;
}

}  // namespace tqa
