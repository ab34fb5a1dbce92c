#include "twistqa/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "twistqa/csv.hpp"
#include "twistqa/error.hpp"
#include "twistqa/presets_embedded.hpp"

namespace tqa {

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Hydrogen: return "hydrogen";
    case ProblemKind::SpinStar: return "spin_star";
    case ProblemKind::PauliFile: return "pauli_file";
  }
  return "unknown";
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || count < 1) throw DomainError("log_spaced: need 0 < lo <= hi and count >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = std::log(hi / lo) / (count - 1);
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = lo * std::exp(step * k);
  out.front() = lo;
  out.back() = hi;
  return out;
}

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

class Reader {
 public:
  Reader(std::map<std::string, Entry> entries, std::string origin)
      : entries_(std::move(entries)), origin_(std::move(origin)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const auto it = entries_.find(key);
    throw ParseError(origin_, it == entries_.end() ? 0 : it->second.line, key + ": " + what);
  }

  const std::string* raw(const std::string& key) {
    used_.insert(key);
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second.value;
  }

  double real(const std::string& key, double fallback, const std::function<bool(double)>& ok, const char* rule) {
    const std::string* v = raw(key);
    if (!v) return fallback;
    const double x = parse_real(key, *v);
    if (!ok(x)) fail(key, std::string("value must be ") + rule);
    return x;
  }

  long long integer(const std::string& key, long long fallback, long long min_value) {
    const std::string* v = raw(key);
    if (!v) return fallback;
    long long x = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), x);
    if (ec != std::errc{} || ptr != v->data() + v->size()) fail(key, "expected an integer, got '" + *v + "'");
    if (x < min_value) fail(key, "value must be at least " + std::to_string(min_value));
    return x;
  }

  std::uint64_t unsigned64(const std::string& key, std::uint64_t fallback) {
    const std::string* v = raw(key);
    if (!v) return fallback;
    std::uint64_t x = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), x);
    if (ec != std::errc{} || ptr != v->data() + v->size()) fail(key, "expected an unsigned integer, got '" + *v + "'");
    return x;
  }

  std::vector<double> reals(const std::string& key) {
    const std::string* v = raw(key);
    std::vector<double> out;
    if (!v) return out;
    std::string tokens = *v;
    for (char& c : tokens) {
      if (c == ',') c = ' ';
    }
    std::istringstream in(tokens);
    std::string tok;
    while (in >> tok) out.push_back(parse_real(key, tok));
    if (out.empty()) fail(key, "expected at least one number");
    return out;
  }

  void reject_unused() const {
    for (const auto& [key, entry] : entries_) {
      if (!used_.count(key)) throw ParseError(origin_, entry.line, "unknown key '" + key + "'");
    }
  }

  double parse_real(const std::string& key, const std::string& tok) const {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(x)) {
      fail(key, "expected a finite number, got '" + tok + "'");
    }
    return x;
  }

 private:
  std::map<std::string, Entry> entries_;
  std::set<std::string> used_;
  std::string origin_;
};

}  // namespace

ExperimentConfig parse_config(std::string_view text, const std::string& origin, const std::filesystem::path& base_dir) {
  std::map<std::string, Entry> entries;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string content = trim(line.substr(0, line.find('#')));
      if (content.empty()) continue;
      const auto eq = content.find('=');
      if (eq == std::string::npos) throw ParseError(origin, line_no, "expected `key = value`");
      const std::string key = trim(std::string_view(content).substr(0, eq));
      const std::string value = trim(std::string_view(content).substr(eq + 1));
      if (key.empty()) throw ParseError(origin, line_no, "missing key before '='");
      if (value.empty()) throw ParseError(origin, line_no, key + ": missing value");
      if (entries.count(key)) {
        throw ParseError(origin, line_no,
                         key + ": duplicate key (first set on line " + std::to_string(entries[key].line) + ")");
      }
      entries[key] = {value, line_no};
    }
  }

  Reader r(std::move(entries), origin);
  ExperimentConfig cfg;
  cfg.origin = origin;
  cfg.text = std::string(text);

  auto positive = [](double x) { return x > 0.0; };
  auto nonnegative = [](double x) { return x >= 0.0; };
  auto any = [](double) { return true; };

  const std::string* kind = r.raw("problem.kind");
  if (!kind) throw ParseError(origin, 0, "problem.kind: required key missing");
  if (*kind == "hydrogen") {
    cfg.problem.kind = ProblemKind::Hydrogen;
  } else if (*kind == "spin_star") {
    cfg.problem.kind = ProblemKind::SpinStar;
  } else if (*kind == "pauli_file") {
    cfg.problem.kind = ProblemKind::PauliFile;
  } else {
    r.fail("problem.kind", "expected hydrogen, spin_star or pauli_file, got '" + *kind + "'");
  }

  const bool star = cfg.problem.kind == ProblemKind::SpinStar;
  for (const char* key : {"problem.n_peripheral", "problem.omega", "problem.omega1", "problem.J"}) {
    if (!star && r.has(key)) r.fail(key, "only applies to problem.kind = spin_star");
  }
  if (cfg.problem.kind != ProblemKind::PauliFile && r.has("problem.path")) {
    r.fail("problem.path", "only applies to problem.kind = pauli_file");
  }
  cfg.problem.n_peripheral = static_cast<int>(r.integer("problem.n_peripheral", 4, 1));
  if (cfg.problem.n_peripheral + 1 > kDefaultMaxQubits) r.fail("problem.n_peripheral", "too many qubits");
  cfg.problem.omega = r.real("problem.omega", 1.0, any, "finite");
  cfg.problem.omega1 = r.real("problem.omega1", 1.0, any, "finite");
  cfg.problem.J = r.real("problem.J", 15.0, any, "finite");
  if (cfg.problem.kind == ProblemKind::PauliFile) {
    const std::string* path = r.raw("problem.path");
    if (!path) throw ParseError(origin, 0, "problem.path: required for problem.kind = pauli_file");
    std::filesystem::path p(*path);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    if (!std::filesystem::exists(p)) r.fail("problem.path", "file '" + p.string() + "' does not exist");
    cfg.problem.path = p;
  }

  cfg.anneal.T = r.real("anneal.T", 1.0, positive, "positive");
  cfg.anneal.n_time_steps = static_cast<int>(r.integer("anneal.n_time_steps", 2000, 2));
  cfg.anneal.max_dt = r.real("anneal.max_dt", 0.0, nonnegative, "nonnegative");
  cfg.anneal.gamma = r.real("anneal.gamma", 0.0, nonnegative, "nonnegative");
  if (const std::string* axis = r.raw("anneal.lindblad_axis"); axis && *axis != "Z") {
    r.fail("anneal.lindblad_axis", "only Z is supported");
  }

  cfg.variational.alpha = r.real("variational.alpha", 0.05, positive, "positive");
  cfg.variational.n_steps = static_cast<int>(r.integer("variational.n_steps", 200, 0));
  cfg.variational.fd_step = r.real("variational.fd_step", 1e-3, positive, "positive");
  cfg.variational.seed = r.unsigned64("variational.seed", 0);

  if (r.has("scan.T") && r.has("scan.log_range")) r.fail("scan.log_range", "conflicts with scan.T");
  if (r.has("scan.T")) {
    cfg.scan_T = r.reals("scan.T");
    for (double T : cfg.scan_T) {
      if (!(T > 0.0)) r.fail("scan.T", "annealing times must be positive");
    }
  } else if (r.has("scan.log_range")) {
    const std::vector<double> spec = r.reals("scan.log_range");
    if (spec.size() != 3) r.fail("scan.log_range", "expected `lo hi count`");
    if (!(spec[0] > 0.0) || !(spec[1] >= spec[0])) r.fail("scan.log_range", "need 0 < lo <= hi");
    if (spec[2] < 1 || spec[2] != std::floor(spec[2])) r.fail("scan.log_range", "count must be a positive integer");
    cfg.scan_T = log_spaced(spec[0], spec[1], static_cast<int>(spec[2]));
  } else {
    cfg.scan_T = star ? log_spaced(0.1, 50.0, 20) : log_spaced(0.5, 500.0, 20);
  }

  cfg.spectrum.n_points = static_cast<int>(r.integer("spectrum.n_points", 201, 2));
  cfg.spectrum.levels = static_cast<int>(r.integer("spectrum.levels", 0, 0));
  if (const std::string* dir = r.raw("outputs.dir")) cfg.output_dir = *dir;

  r.reject_unused();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string(), path.parent_path());
}

std::vector<std::string> preset_names() { return {"hydrogen-paper", "spinstar-paper"}; }

ExperimentConfig load_preset(std::string_view name) {
  if (name == "hydrogen-paper") return parse_config(embedded::kHydrogenPaperPreset, "preset:hydrogen-paper");
  if (name == "spinstar-paper") return parse_config(embedded::kSpinStarPaperPreset, "preset:spinstar-paper");
  throw ParseError("--preset", 0, "unknown preset '" + std::string(name) + "'");
}

PauliSum build_problem(const ProblemSpec& spec) {
  switch (spec.kind) {
    case ProblemKind::Hydrogen: return hydrogen_hamiltonian();
    case ProblemKind::SpinStar: return deformed_spin_star(spec.n_peripheral, spec.omega, spec.omega1, spec.J);
    case ProblemKind::PauliFile: return read_pauli_file(spec.path);
  }
  throw DomainError("build_problem: unknown problem kind");
}

std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& c) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("problem.kind", std::string(to_string(c.problem.kind)));
  if (c.problem.kind == ProblemKind::SpinStar) {
    out.emplace_back("problem.n_peripheral", std::to_string(c.problem.n_peripheral));
    out.emplace_back("problem.omega", format_real(c.problem.omega));
    out.emplace_back("problem.omega1", format_real(c.problem.omega1));
    out.emplace_back("problem.J", format_real(c.problem.J));
  }
  if (c.problem.kind == ProblemKind::PauliFile) out.emplace_back("problem.path", c.problem.path.string());
  out.emplace_back("anneal.T", format_real(c.anneal.T));
  out.emplace_back("anneal.n_time_steps", std::to_string(c.anneal.n_time_steps));
  out.emplace_back("anneal.max_dt", format_real(c.anneal.max_dt));
  out.emplace_back("anneal.gamma", format_real(c.anneal.gamma));
  out.emplace_back("anneal.lindblad_axis", "Z");
  out.emplace_back("variational.alpha", format_real(c.variational.alpha));
  out.emplace_back("variational.n_steps", std::to_string(c.variational.n_steps));
  out.emplace_back("variational.fd_step", format_real(c.variational.fd_step));
  out.emplace_back("variational.seed", std::to_string(c.variational.seed));
  std::string scan;
  for (double T : c.scan_T) scan += (scan.empty() ? "" : ", ") + format_real(T);
  out.emplace_back("scan.T", scan);
  out.emplace_back("spectrum.n_points", std::to_string(c.spectrum.n_points));
  out.emplace_back("spectrum.levels", std::to_string(c.spectrum.levels));
  out.emplace_back("outputs.dir", c.output_dir.string());
  return out;
}

}  // namespace tqa
