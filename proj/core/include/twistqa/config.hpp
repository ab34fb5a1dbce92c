#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistqa/models.hpp"
#include "twistqa/pauli.hpp"
#include "twistqa/variational.hpp"

namespace tqa {

enum class ProblemKind { Hydrogen, SpinStar, PauliFile };

std::string_view to_string(ProblemKind kind);

struct ProblemSpec {
  ProblemKind kind = ProblemKind::Hydrogen;
  int n_peripheral = 4;
  double omega = 1.0;
  double omega1 = 1.0;
  double J = 15.0;
  std::filesystem::path path;  // resolved against the config file's directory
};

struct SpectrumSettings {
  int n_points = 201;
  int levels = 0;  // 0 keeps every level
};

/// Everything one experiment needs. Built from a flat `key = value` text
/// document; see parse_config for the schema.
struct ExperimentConfig {
  ProblemSpec problem;
  AnnealConfig anneal;
  VariationalSettings variational;
  std::vector<double> scan_T;
  SpectrumSettings spectrum;
  std::filesystem::path output_dir = "out";
  std::string origin;  // file name or preset name
  std::string text;    // source document, echoed into the manifest
};

/// Parses an experiment config.
///
/// One `key = value` per line, `#` comments, blank lines ignored. Keys:
///
///   problem.kind            hydrogen | spin_star | pauli_file   (required)
///   problem.n_peripheral    int >= 1          spin_star only, default 4
///   problem.omega           real              spin_star only, default 1
///   problem.omega1          real              spin_star only, default 1
///   problem.J               real              spin_star only, default 15
///   problem.path            path              pauli_file only, must exist
///   anneal.T                real > 0          default 1
///   anneal.n_time_steps     int >= 2          default 2000
///   anneal.max_dt           real >= 0         default 0 (off)
///   anneal.gamma            real >= 0         default 0
///   anneal.lindblad_axis    Z                 default Z
///   variational.alpha       real > 0          default 0.05
///   variational.n_steps     int >= 0          default 200
///   variational.fd_step     real > 0          default 1e-3
///   variational.seed        uint64            default 0
///   scan.T                  list of reals > 0 (comma or space separated)
///   scan.log_range          lo hi count       count log-spaced values
///   spectrum.n_points       int >= 2          default 201
///   spectrum.levels         int >= 0          default 0 (all)
///   outputs.dir             path              default "out"
///
/// Without a scan entry the scan defaults to 20 log-spaced times over
/// [0.5, 500] (hydrogen, pauli_file) or [0.1, 50] (spin_star). Any error is
/// reported as a ParseError carrying the line and the key.
ExperimentConfig parse_config(std::string_view text, const std::string& origin,
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

std::vector<std::string> preset_names();
// Throws ParseError for an unknown name.
ExperimentConfig load_preset(std::string_view name);

// count values geometrically spaced from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, int count);

PauliSum build_problem(const ProblemSpec& spec);

// Ordered (key, value) pairs of the resolved configuration.
std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& config);

}  // namespace tqa
