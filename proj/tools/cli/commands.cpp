// Copyright 2026 The cqad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cqad/device.hpp"
#include "cqad/dicke.hpp"
#include "cqad/dynamics.hpp"
#include "cqad/errors.hpp"
#include "cqad/export.hpp"
#include "cqad/hamiltonian.hpp"
#include "cqad/readout.hpp"
#include "cqad/spectroscopy.hpp"
#include "cqad/version.hpp"
#include "json.hpp"
#include "manifest.hpp"

namespace cqad::cli {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kConfigHint =
    "--config <device.json> is required (format: data/devices/device.schema.json, "
    "described in docs/formats.md); a synthetic cluster may be given with "
    "--modes-ghz and --couplings-mhz instead";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputError : public Error {
 public:
  using Error::Error;
};

struct ClusterOptions {
  std::string config;
  std::string cluster;
  std::vector<double> modes_ghz;
  std::vector<double> couplings_mhz;
};

struct ResolvedCluster {
  ClusterSpec cluster;
  std::optional<std::string> digest;
};

void add_cluster_options(CLI::App* sub, ClusterOptions& o) {
  sub->add_option("--config", o.config, "Device description file");
  sub->add_option("--cluster", o.cluster, "Cluster name within the device file");
  sub->add_option("--modes-ghz", o.modes_ghz, "Synthetic cluster: mode frequencies, descending")
      ->delimiter(',');
  sub->add_option("--couplings-mhz", o.couplings_mhz, "Synthetic cluster: couplings g/2pi")
      ->delimiter(',');
}

ResolvedCluster resolve_cluster(const ClusterOptions& o) {
  if (!o.modes_ghz.empty() || !o.couplings_mhz.empty()) {
    if (!o.config.empty() || !o.cluster.empty()) {
      throw UsageError("--modes-ghz/--couplings-mhz cannot be combined with --config/--cluster");
    }
    if (o.modes_ghz.size() != o.couplings_mhz.size()) {
      throw UsageError(fmt::format("--modes-ghz has {} values but --couplings-mhz has {}",
                                   o.modes_ghz.size(), o.couplings_mhz.size()));
    }
    ClusterSpec c;
    c.name = "synthetic";
    for (std::size_t i = 0; i < o.modes_ghz.size(); ++i) {
      c.modes.push_back(ModeSpec{o.modes_ghz[i], o.couplings_mhz[i]});
    }
    validate_cluster(c, ModeOrdering::kDescendingOrDegenerate);
    return {c, std::nullopt};
  }
  if (o.config.empty()) throw UsageError(kConfigHint);
  if (o.cluster.empty()) throw UsageError("--cluster is required with --config");
  const DeviceConfig device = load_device_config(o.config);
  return {device.cluster(o.cluster), file_digest(o.config)};
}

std::map<std::string, std::string> collect_parameters(const CLI::App& sub) {
  std::map<std::string, std::string> parameters;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help" || name == "out") continue;
    // Flags left unset record their default only when they have one.
    std::string value = opt->count() > 0 ? fmt::format("{}", fmt::join(opt->results(), ","))
                                         : opt->get_default_str();
    if (!value.empty()) parameters.emplace(name, std::move(value));
  }
  return parameters;
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError(fmt::format("{}: cannot open for writing", path.string()));
  file << bytes;
  if (!file.flush()) throw OutputError(fmt::format("{}: write failed", path.string()));
}

void write_outputs(const CLI::App& sub, const fs::path& out_path, const std::string& bytes,
                   const std::optional<std::string>& digest) {
  write_file(out_path, bytes);
  RunManifest manifest{sub.get_name(), collect_parameters(sub), digest, kVersion};
  write_file(manifest_path_for(out_path), manifest_to_json(manifest));
}

std::optional<double> optional_flag(const CLI::Option* opt, double value) {
  return opt->count() > 0 ? std::optional<double>(value) : std::nullopt;
}

ordered_json nullable(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(); }

double mean_spacing_mhz(const ClusterSpec& c) {
  const std::vector<double> s = intra_cluster_spacings(c);
  double total = 0.0;
  for (double x : s) total += x;
  return total / static_cast<double>(s.size());
}

std::string dicke_report(const ClusterSpec& c, double qubit_ghz, double floor, double t_max_us,
                         std::size_t samples) {
  const CollectiveCouplings cc = collective_couplings(c);
  ordered_json doc;
  doc["cluster"] = c.name;
  doc["n_modes"] = cc.n_modes;
  doc["qubit_frequency_ghz"] = qubit_ghz;
  doc["g_eff_mhz"] = cc.g_eff_mhz;
  doc["g_bar_mhz"] = cc.g_bar_mhz;
  doc["tau_min_purity_us"] = {
      {"effective_coupling", tau_min_purity(cc, PurityTimeConvention::kEffectiveCoupling)},
      {"mean_coupling", tau_min_purity(cc, PurityTimeConvention::kMeanCoupling)}};
  doc["fidelity_floor"] = floor;

  std::optional<double> spacing;
  std::optional<double> tau_series;
  std::optional<double> tau_equal;
  std::optional<double> tau_exact;
  if (cc.n_modes >= 2) {
    spacing = mean_spacing_mhz(c);
    if (*spacing > 0.0) {
      tau_series = tau_timed(cc.n_modes, *spacing, floor);
      tau_equal = tau_timed_numeric(cc.n_modes, *spacing, floor);
    }
    try {
      tau_exact = tau_timed_numeric(c, floor);
    } catch (const ExtractionError&) {
      // degenerate modes never dephase; reported as null
    }
  }
  doc["mean_spacing_mhz"] = nullable(spacing);
  doc["tau_timed_us"] = {{"series", nullable(tau_series)},
                         {"numeric_equal_spacing", nullable(tau_equal)},
                         {"numeric_exact", nullable(tau_exact)}};

  const PopulationTrace trace = simulate_trace(c, qubit_ghz, t_max_us, samples);
  if (const auto i = first_local_minimum(trace.purity)) {
    doc["first_purity_minimum"] = {{"time_us", trace.times_us[*i]}, {"purity", trace.purity[*i]}};
  } else {
    doc["first_purity_minimum"] = nullptr;
  }

  std::vector<double> f_exact;
  std::vector<double> f_closed;
  std::vector<double> p_analytic;
  std::vector<double> p_static;
  for (double t : trace.times_us) {
    f_exact.push_back(fidelity_exact(c, qubit_ghz, t));
    f_closed.push_back(fidelity_closed_form(cc.n_modes, spacing.value_or(0.0), t));
    p_analytic.push_back(purity_analytic(cc.g_eff_mhz, t));
    p_static.push_back(static_dicke_population(cc.n_modes, cc.g_bar_mhz, t));
  }
  ordered_json normalized = ordered_json::array();
  for (const auto& v : normalized_collective_population(trace, cc.n_modes, cc.g_bar_mhz)) {
    normalized.push_back(nullable(v));
  }
  doc["curves"] = {{"times_us", trace.times_us},
                   {"fidelity_exact", f_exact},
                   {"fidelity_closed_form", f_closed},
                   {"p_excited_simulated", trace.p_excited},
                   {"purity_simulated", trace.purity},
                   {"purity_analytic", p_analytic},
                   {"static_dicke_population", p_static},
                   {"normalized_collective_population", normalized}};
  return doc.dump(2) + "\n";
}

// Reads rows of "p0,p1" or "n0,n1" after a header naming the columns.
std::vector<ProbabilityVector> read_readout_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw cqad::ParseError(fmt::format("{}: cannot open file", path.string()));
  std::string line;
  if (!std::getline(in, line)) throw cqad::ParseError(fmt::format("{}: empty file", path.string()));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool counts = false;
  if (line == "n0,n1") {
    counts = true;
  } else if (line != "p0,p1") {
    throw cqad::ParseError(fmt::format("{}:1: header must be 'p0,p1' or 'n0,n1'", path.string()));
  }
  std::vector<ProbabilityVector> rows;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    double a = 0.0;
    double b = 0.0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string first = line.substr(0, comma);
      const std::string second = line.substr(comma + 1);
      a = std::stod(first, &used_a);
      b = std::stod(second, &used_b);
      if (used_a != first.size() || used_b != second.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw cqad::ParseError(fmt::format("{}:{}: expected two numbers", path.string(), number));
    }
    if (counts) {
      if (!(a >= 0.0 && b >= 0.0 && a + b > 0.0)) {
        throw ValidationError(fmt::format("{}:{}: counts must be >= 0 with a positive total",
                                          path.string(), number));
      }
      rows.emplace_back(a / (a + b), b / (a + b));
    } else {
      rows.emplace_back(a, b);
    }
  }
  if (rows.empty()) throw EmptyResultError(fmt::format("{}: no data rows", path.string()));
  return rows;
}

struct Corrected {
  ProbabilityVector constrained;
  Eigen::Vector2d unconstrained;
};

Corrected correct(const ResponseMatrix& m, const ProbabilityVector& measured) {
  return {correct_constrained(m, measured), invert_unconstrained(m, measured)};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int replay(const fs::path& manifest_path, const std::string& out_path, std::ostream& out,
           std::ostream& err) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw cqad::ParseError(fmt::format("{}: cannot open file", manifest_path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const RunManifest m = manifest_from_json(buffer.str(), manifest_path.string());
  if (m.command == "replay") throw ValidationError("a manifest cannot record a replay");

  const auto config = m.parameters.find("config");
  if (config != m.parameters.end()) {
    if (!m.config_digest) throw ValidationError("manifest names a config but has no config_digest");
    const std::string actual = file_digest(config->second);
    if (actual != *m.config_digest) {
      throw ValidationError(fmt::format("config digest mismatch for {}: manifest {}, file {}",
                                        config->second, *m.config_digest, actual));
    }
  }
  if (m.tool_version != kVersion) {
    err << fmt::format("warning: manifest written by cqad {}, replaying with {}\n", m.tool_version,
                       kVersion);
  }
  std::vector<std::string> args{m.command};
  for (const auto& [key, value] : m.parameters) {
    args.push_back("--" + key);
    args.push_back(value);
  }
  args.push_back("--out");
  args.push_back(out_path);
  return dispatch(args, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulation and analysis of a qubit coupled to clusters of acoustic modes", "cqad"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  const auto positive_count = CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max() / 2);
  const auto thread_count = CLI::Range(1u, 1024u);

  // spectroscopy
  ClusterOptions spec_cluster;
  double spec_fmin = 0.0;
  double spec_fmax = 0.0;
  std::size_t spec_points = 0;
  unsigned spec_threads = 1;
  std::string spec_out;
  CLI::App* spec = app.add_subcommand("spectroscopy", "Dressed-line sweep over qubit frequency (CSV)");
  add_cluster_options(spec, spec_cluster);
  spec->add_option("--fmin", spec_fmin, "Lowest qubit frequency, GHz")->required();
  spec->add_option("--fmax", spec_fmax, "Highest qubit frequency, GHz")->required();
  spec->add_option("--points", spec_points, "Grid points, >= 2")->required()->check(positive_count);
  spec->add_option("--threads", spec_threads, "Worker threads")->capture_default_str()->check(thread_count);
  spec->add_option("--out", spec_out, "Output CSV path")->required();

  // rabi
  ClusterOptions rabi_cluster;
  double rabi_fmin = 0.0;
  double rabi_fmax = 0.0;
  std::size_t rabi_fpoints = 0;
  double rabi_tmax = kDefaultTraceDurationUs;
  std::size_t rabi_tsteps = kDefaultTraceSamples;
  double rabi_t1 = 0.0;
  unsigned rabi_threads = 1;
  std::string rabi_format = "csv";
  std::string rabi_out;
  CLI::App* rabi = app.add_subcommand("rabi", "Vacuum Rabi grid over qubit frequency and time");
  add_cluster_options(rabi, rabi_cluster);
  rabi->add_option("--fmin", rabi_fmin, "Lowest qubit frequency, GHz")->required();
  rabi->add_option("--fmax", rabi_fmax, "Highest qubit frequency, GHz")->required();
  rabi->add_option("--fpoints", rabi_fpoints, "Frequency points, >= 2")->required()->check(positive_count);
  rabi->add_option("--tmax-us", rabi_tmax, "Evolution time span, us")->capture_default_str();
  rabi->add_option("--tsteps", rabi_tsteps, "Time samples on [0, tmax], >= 2")->capture_default_str()->check(positive_count);
  CLI::Option* rabi_t1_opt =
      rabi->add_option("--t1-us", rabi_t1, "Apply an exp(-t/T1) envelope to the qubit population");
  rabi->add_option("--threads", rabi_threads, "Worker threads")->capture_default_str()->check(thread_count);
  rabi->add_option("--format", rabi_format, "csv (long form) or json (matrix)")->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  rabi->add_option("--out", rabi_out, "Output path")->required();

  // trace
  ClusterOptions trace_cluster;
  double trace_qubit = 0.0;
  double trace_tmax = kDefaultTraceDurationUs;
  std::size_t trace_tsteps = kDefaultTraceSamples;
  double trace_t1 = 0.0;
  std::string trace_out;
  CLI::App* trace = app.add_subcommand("trace", "Qubit population and purity versus time (CSV)");
  add_cluster_options(trace, trace_cluster);
  CLI::Option* trace_qubit_opt = trace->add_option(
      "--qubit-ghz", trace_qubit, "Qubit frequency, GHz (default: coupling-weighted mode frequency)");
  trace->add_option("--tmax-us", trace_tmax, "Evolution time span, us")->capture_default_str();
  trace->add_option("--tsteps", trace_tsteps, "Time samples on [0, tmax], >= 2")->capture_default_str()->check(positive_count);
  CLI::Option* trace_t1_opt =
      trace->add_option("--t1-us", trace_t1, "Apply an exp(-t/T1) envelope to the qubit population");
  trace->add_option("--out", trace_out, "Output CSV path")->required();

  // dicke
  ClusterOptions dicke_cluster;
  double dicke_qubit = 0.0;
  double dicke_floor = 0.9;
  double dicke_tmax = kDefaultTraceDurationUs;
  std::size_t dicke_tsteps = kDefaultTraceSamples;
  std::string dicke_out;
  CLI::App* dicke = app.add_subcommand("dicke", "Collective-coupling report (JSON)");
  add_cluster_options(dicke, dicke_cluster);
  CLI::Option* dicke_qubit_opt = dicke->add_option(
      "--qubit-ghz", dicke_qubit, "Qubit frequency, GHz (default: coupling-weighted mode frequency)");
  dicke->add_option("--fidelity-floor", dicke_floor, "Timed-Dicke fidelity threshold F0")->capture_default_str();
  dicke->add_option("--tmax-us", dicke_tmax, "Curve time span, us")->capture_default_str();
  dicke->add_option("--tsteps", dicke_tsteps, "Curve samples on [0, tmax], >= 2")->capture_default_str()->check(positive_count);
  dicke->add_option("--out", dicke_out, "Output JSON path")->required();

  // readout
  std::string ro_config;
  std::string ro_qubit;
  double ro_p0 = 0.0;
  double ro_p1 = 0.0;
  double ro_n0 = 0.0;
  double ro_n1 = 0.0;
  std::string ro_input;
  std::string ro_out;
  CLI::App* readout = app.add_subcommand("readout", "Readout-error correction of measured probabilities");
  readout->add_option("--config", ro_config, "Device description file");
  readout->add_option("--qubit", ro_qubit, "Qubit whose response matrix is applied")->required();
  CLI::Option* p0_opt = readout->add_option("--p0", ro_p0, "Measured P(0)");
  CLI::Option* p1_opt = readout->add_option("--p1", ro_p1, "Measured P(1)");
  CLI::Option* n0_opt = readout->add_option("--n0", ro_n0, "Shots reading 0");
  CLI::Option* n1_opt = readout->add_option("--n1", ro_n1, "Shots reading 1");
  CLI::Option* input_opt = readout->add_option("--input", ro_input, "CSV with header p0,p1 or n0,n1");
  p0_opt->needs(p1_opt);
  p1_opt->needs(p0_opt);
  n0_opt->needs(n1_opt);
  n1_opt->needs(n0_opt);
  readout->add_option("--out", ro_out, "Output path (JSON, or CSV with --input)")->required();

  // replay
  std::string replay_manifest;
  std::string replay_out;
  CLI::App* replay_cmd = app.add_subcommand("replay", "Re-run a recorded manifest");
  replay_cmd->add_option("manifest", replay_manifest, "Manifest written by a previous run")->required();
  replay_cmd->add_option("--out", replay_out, "Output path for the reproduced run")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    // help() delegates to the selected subcommand, if any
    out << app.help();
    return kExitSuccess;
  }

  if (spec->parsed()) {
    const ResolvedCluster rc = resolve_cluster(spec_cluster);
    const SpectroscopySweep sweep = sweep_spectrum(rc.cluster, spec_fmin, spec_fmax, spec_points, spec_threads);
    std::ostringstream csv;
    write_spectroscopy_csv(csv, sweep);
    write_outputs(*spec, spec_out, csv.str(), rc.digest);
    out << fmt::format("wrote {} ({} points x {} lines)\n", spec_out, sweep.size(),
                       sweep.lines.front().size());
    return kExitSuccess;
  }
  if (rabi->parsed()) {
    const ResolvedCluster rc = resolve_cluster(rabi_cluster);
    const RabiGrid grid =
        simulate_rabi_grid(rc.cluster, FrequencyGrid{rabi_fmin, rabi_fmax, rabi_fpoints}, rabi_tmax,
                           rabi_tsteps, optional_flag(rabi_t1_opt, rabi_t1), rabi_threads);
    std::ostringstream data;
    if (rabi_format == "json") {
      write_rabi_json(data, grid);
    } else {
      write_rabi_csv(data, grid);
    }
    write_outputs(*rabi, rabi_out, data.str(), rc.digest);
    out << fmt::format("wrote {} ({} frequencies x {} times{})\n", rabi_out, grid.p_excited.rows(),
                       grid.p_excited.cols(), grid.envelope_applied ? ", T1 envelope" : "");
    return kExitSuccess;
  }
  if (trace->parsed()) {
    const ResolvedCluster rc = resolve_cluster(trace_cluster);
    const double f = trace_qubit_opt->count() > 0 ? trace_qubit : bright_mode_frequency(rc.cluster);
    const PopulationTrace tr =
        simulate_trace(rc.cluster, f, trace_tmax, trace_tsteps, optional_flag(trace_t1_opt, trace_t1));
    std::ostringstream csv;
    write_trace_csv(csv, tr);
    write_outputs(*trace, trace_out, csv.str(), rc.digest);
    out << fmt::format("wrote {} ({} samples, qubit at {} GHz)\n", trace_out, tr.times_us.size(), f);
    return kExitSuccess;
  }
  if (dicke->parsed()) {
    const ResolvedCluster rc = resolve_cluster(dicke_cluster);
    const double f = dicke_qubit_opt->count() > 0 ? dicke_qubit : bright_mode_frequency(rc.cluster);
    const std::string report = dicke_report(rc.cluster, f, dicke_floor, dicke_tmax, dicke_tsteps);
    write_outputs(*dicke, dicke_out, report, rc.digest);
    const CollectiveCouplings cc = collective_couplings(rc.cluster);
    out << fmt::format("cluster {}: g_eff = {:.4f} MHz, g_bar = {:.4f} MHz, tau_minP = {:.1f} ns\n",
                       rc.cluster.name, cc.g_eff_mhz, cc.g_bar_mhz, 1e3 * tau_min_purity(cc));
    out << fmt::format("wrote {}\n", dicke_out);
    return kExitSuccess;
  }
  if (readout->parsed()) {
    if (ro_config.empty()) throw UsageError(kConfigHint);
    const int modes = (p0_opt->count() > 0) + (n0_opt->count() > 0) + (input_opt->count() > 0);
    if (modes != 1) throw UsageError("give exactly one of --p0/--p1, --n0/--n1 or --input");
    const DeviceConfig device = load_device_config(ro_config);
    const ResponseMatrix& m = device.response_matrix(ro_qubit);
    const std::string digest = file_digest(ro_config);

    if (input_opt->count() > 0) {
      std::ostringstream csv;
      csv << "measured_p0,measured_p1,constrained_p0,constrained_p1,unconstrained_p0,unconstrained_p1\n";
      const std::vector<ProbabilityVector> rows = read_readout_csv(ro_input);
      for (const ProbabilityVector& measured : rows) {
        const Corrected c = correct(m, measured);
        csv << fmt::format("{},{},{},{},{},{}\n", format_number(measured.p0()),
                           format_number(measured.p1()), format_number(c.constrained.p0()),
                           format_number(c.constrained.p1()), format_number(c.unconstrained(0)),
                           format_number(c.unconstrained(1)));
      }
      write_outputs(*readout, ro_out, csv.str(), digest);
      out << fmt::format("wrote {} ({} rows)\n", ro_out, rows.size());
      return kExitSuccess;
    }

    std::optional<ProbabilityVector> measured;
    if (p0_opt->count() > 0) {
      measured.emplace(ro_p0, ro_p1);
    } else {
      if (!(ro_n0 >= 0.0 && ro_n1 >= 0.0 && ro_n0 + ro_n1 > 0.0)) {
        throw ValidationError("counts must be >= 0 with a positive total");
      }
      measured.emplace(ro_n0 / (ro_n0 + ro_n1), ro_n1 / (ro_n0 + ro_n1));
    }
    const Corrected c = correct(m, *measured);
    ordered_json doc;
    doc["qubit"] = ro_qubit;
    doc["measured"] = {measured->p0(), measured->p1()};
    doc["constrained"] = {c.constrained.p0(), c.constrained.p1()};
    doc["unconstrained"] = {c.unconstrained(0), c.unconstrained(1)};
    write_outputs(*readout, ro_out, doc.dump(2) + "\n", digest);
    out << fmt::format("constrained:   {:.5f} {:.5f}\nunconstrained: {:.5f} {:.5f}\n",
                       c.constrained.p0(), c.constrained.p1(), c.unconstrained(0), c.unconstrained(1));
    return kExitSuccess;
  }
  if (replay_cmd->parsed()) return replay(replay_manifest, replay_out, out, err);
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InversionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ExtractionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const EmptyResultError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    // validation, parse, structural, leakage and output failures
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace cqad::cli
