#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twistqa/config.hpp"
#include "twistqa/lindblad.hpp"
#include "twistqa/spectral.hpp"
#include "twistqa/variational.hpp"

namespace tqa {

struct RunOptions {
  std::optional<std::filesystem::path> out_dir;  // overrides outputs.dir
  std::optional<std::uint64_t> seed;             // overrides variational.seed
  int jobs = 0;                                  // <= 0: one per logical processor
  int snapshot_count = 0;                        // evolution snapshots per anneal (run only)
  bool dump_states = false;                      // binary density-matrix dump of the snapshots
  std::string command_line;                      // echoed into the manifest
  std::ostream* log = nullptr;                   // progress lines, if set
};

struct SingleRunReport {
  double ground_energy = 0.0;
  TimeScanPoint point;
  std::filesystem::path out_dir;
};

// Conventional baseline then gradient descent at anneal.T. Writes
// trajectory.csv, merit.csv, thetas.txt and manifest.json (plus snapshot
// files when requested).
SingleRunReport run_single(ExperimentConfig config, const RunOptions& options);

struct TimeScanReport {
  double ground_energy = 0.0;
  TimeScanResult scan;
  std::filesystem::path out_dir;
};

// anneal_time_scan over scan.T. Writes timescan.csv, merit.csv,
// thetas_opt.txt and manifest.json.
TimeScanReport run_timescan(ExperimentConfig config, const RunOptions& options);

struct SpectrumReport {
  SpectrumTrace spectrum;
  std::vector<GapTrace> gaps;  // levels 1..k-1
  AdiabaticTrace adiabatic;
  std::filesystem::path out_dir;
};

// Spectral diagnostics of the (twisted) schedule at anneal.T. Writes
// spectrum.csv, gaps.csv, adiabatic.csv and manifest.json.
SpectrumReport run_spectrum(ExperimentConfig config, const TwistAngles& thetas, const RunOptions& options);

// Whitespace-separated angles, `#` comments. Throws ParseError when the
// count differs from expected_size.
TwistAngles read_thetas_file(const std::filesystem::path& path, std::size_t expected_size);
TwistAngles parse_thetas(std::istream& in, const std::string& origin, std::size_t expected_size);
void write_thetas_file(const std::filesystem::path& path, const TwistAngles& thetas);

// CSV emitters; schemas are fixed and always carry a header row.
void write_trajectory_csv(std::ostream& out, const VariationalState& state);
void write_merit_header(std::ostream& out);
void write_merit_row(std::ostream& out, double T, double gamma, int step, const AnnealOutcome& outcome);
void write_timescan_csv(std::ostream& out, const TimeScanResult& scan);
void write_spectrum_csv(std::ostream& out, const SpectrumTrace& trace);
void write_gaps_csv(std::ostream& out, const std::vector<GapTrace>& gaps);
void write_adiabatic_csv(std::ostream& out, const AdiabaticTrace& trace);
// t, trace_re, purity, energy with energy = Tr(H(t) rho(t)).
void write_snapshot_csv(std::ostream& out, const std::vector<StateSample>& samples, const AnnealSchedule& schedule);
// Per sample: t, then the d*d entries row-major as (re, im); little-endian doubles.
void write_state_dump(std::ostream& out, const std::vector<StateSample>& samples);

}  // namespace tqa
