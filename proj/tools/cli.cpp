// Copyright 2026 The twoset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "reference_table.hpp"
#include "twoset/bisep.hpp"
#include "twoset/errors.hpp"
#include "twoset/io.hpp"
#include "twoset/measurement.hpp"
#include "twoset/state.hpp"
#include "twoset/witness.hpp"
#include "version.hpp"

namespace twoset::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::uint64_t kDefaultShots = 100000;
constexpr int kTableMaxQubits = 16;
constexpr int kCertifyMaxQubits = 12;
// |<W>| below this is treated as zero, so a state exactly at the threshold is not detected.
constexpr double kZeroTolerance = 1e-12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_name(Format f) {
  switch (f) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    default: return "text";
  }
}

json config_to_json(const RunConfig& c) {
  json families = json::array();
  for (Family f : c.families) families.push_back(to_string(f));
  return {{"command", c.command},
          {"families", families},
          {"n_min", c.n_min},
          {"n_max", c.n_max},
          {"p_noise", c.p_noise ? json(*c.p_noise) : json(nullptr)},
          {"shots", c.shots},
          {"seed", c.seed},
          {"restarts", c.restarts},
          {"format", format_name(c.format)},
          {"out", c.out_path},
          {"check", c.check},
          {"negate", c.negate},
          {"bootstrap", c.bootstrap},
          {"ingest", c.ingest},
          {"counts_out", c.counts_out}};
}

json run_record(const RunConfig& c, json result) {
  return {{"tool", {{"name", "twoset"}, {"version", tool_version()}}},
          {"config", config_to_json(c)},
          {"result", std::move(result)}};
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw UsageError("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("--n expects an integer or a range like 2..10, got '" + text + "'");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("--n range '" + text + "' is empty");
  return {lo, hi};
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::string s(env);
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kSeedEnv) + " must be a nonnegative integer");
  }
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string full(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  os << content;
}

// Human text goes to `out`; the machine rendering goes to --out, or to `out`
// instead of the text when no --out is given.
void emit(const RunConfig& c, std::ostream& out, const std::string& text, const json& record,
          const std::string& csv) {
  std::string machine;
  switch (c.format) {
    case Format::kJson: machine = record.dump(2) + "\n"; break;
    case Format::kCsv: machine = csv; break;
    case Format::kText: machine = text; break;
  }
  if (!c.out_path.empty()) {
    write_file(c.out_path, machine);
    out << text;
  } else {
    out << machine;
  }
}

int single_n(const RunConfig& c) {
  if (c.n_min != c.n_max) throw UsageError(c.command + " takes a single --n");
  return c.n_min;
}

// --- table ---------------------------------------------------------------

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.n_min < 2 || c.n_max > kTableMaxQubits) {
    throw UsageError("table --n must lie within [2, " + std::to_string(kTableMaxQubits) + "]");
  }
  std::vector<ThresholdReport> reports;
  for (Family f : c.families) {
    for (int n = c.n_min; n <= c.n_max; ++n) reports.push_back(noise_threshold(f, n));
  }

  std::ostringstream text;
  text << "Noise tolerance of the two-setting witnesses (largest detected p_noise)\n";
  text << std::left << std::setw(9) << "N";
  for (int n = c.n_min; n <= c.n_max; ++n) text << std::right << std::setw(6) << n;
  text << '\n';
  for (Family f : c.families) {
    text << std::left << std::setw(9) << to_string(f);
    for (const auto& r : reports) {
      if (r.family == f) text << std::right << std::setw(6) << fixed(r.p_threshold, 2);
    }
    text << '\n';
  }

  json check = {{"performed", c.check}};
  bool pass = true;
  if (c.check) {
    const ReferenceTable ref = load_reference_table();
    json entries = json::array();
    int checked = 0;
    int failed = 0;
    for (const auto& r : reports) {
      const auto& row = ref.values.at(r.family);
      auto it = row.find(r.n);
      if (it == row.end()) continue;
      const bool ok = std::abs(r.p_threshold - it->second) <= ref.tolerance;
      ++checked;
      if (!ok) {
        ++failed;
        text << "MISMATCH " << to_string(r.family) << " n=" << r.n << ": computed " << full(r.p_threshold)
             << ", reference " << fixed(it->second, 2) << '\n';
      }
      entries.push_back({{"family", to_string(r.family)},
                         {"n", r.n},
                         {"computed", r.p_threshold},
                         {"reference", it->second},
                         {"pass", ok}});
    }
    pass = failed == 0;
    text << "check against reference table v" << ref.version << ": " << (pass ? "PASS" : "FAIL") << " ("
         << checked - failed << "/" << checked << " entries within +-" << ref.tolerance << ")\n";
    check["reference_version"] = ref.version;
    check["tolerance"] = ref.tolerance;
    check["entries"] = entries;
    check["pass"] = pass;
    if (checked == 0) err << "twoset: no reference entries in the requested range\n";
  }

  json result_reports = json::array();
  for (const auto& r : reports) result_reports.push_back(io::threshold_to_json(r));
  emit(c, out, text.str(), run_record(c, {{"reports", result_reports}, {"check", check}}),
       io::thresholds_to_csv(reports));
  return pass ? kExitOk : kExitFail;
}

// --- eval ----------------------------------------------------------------

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const int n = single_n(c);
  if (n < 2 || n > kDefaultMaxQubits) throw UsageError("eval --n must lie within [2, 20]");
  const Family family = c.families.front();
  const double p = c.p_noise.value_or(0.0);
  const Witness w = build_witness(family, n);
  const double value = witness_expectation(w, white_noise_mix(p, make_target(family, n)));
  const ThresholdReport threshold = noise_threshold(family, n);
  const bool detected = value < -kZeroTolerance;
  const std::string verdict = detected ? "detected" : "not detected";

  std::ostringstream text;
  text << "family " << to_string(family) << ", n = " << n << ", p_noise = " << full(p) << '\n';
  text << "<W> = " << full(value) << '\n';
  text << "threshold p* = " << full(threshold.p_threshold) << '\n';
  text << "verdict: " << verdict;
  if (detected) text << " (" << detection_label(n) << ")";
  text << '\n';

  json result = {{"family", to_string(family)},
                 {"n", n},
                 {"p_noise", p},
                 {"expectation", value},
                 {"p_threshold", threshold.p_threshold},
                 {"detected", detected},
                 {"verdict", verdict},
                 {"label", detection_label(n)}};
  std::ostringstream csv;
  csv << "family,n,p_noise,expectation,p_threshold,detected\n"
      << to_string(family) << ',' << n << ',' << full(p) << ',' << full(value) << ',' << full(threshold.p_threshold)
      << ',' << (detected ? "true" : "false") << '\n';
  emit(c, out, text.str(), run_record(c, result), csv.str());
  return kExitOk;
}

// --- simulate ------------------------------------------------------------

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Family family = c.families.front();
  std::optional<CountsTable> counts_a;
  std::optional<CountsTable> counts_b;
  std::optional<double> exact;
  int n = 0;

  if (!c.ingest.empty()) {
    if (c.ingest.size() != 2) throw UsageError("--ingest takes exactly two files (setting A, setting B)");
    int expected_n = c.n_min == c.n_max ? c.n_min : 0;
    if (expected_n >= 2) {
      const auto settings = settings_for(family, expected_n);
      counts_a = io::load_counts_file(c.ingest[0], &settings.first);
      counts_b = io::load_counts_file(c.ingest[1], &settings.second);
    } else {
      counts_a = io::load_counts_file(c.ingest[0]);
      counts_b = io::load_counts_file(c.ingest[1]);
    }
    n = counts_a->num_qubits();
    err << "twoset: ingested " << counts_a->shots() << " + " << counts_b->shots() << " shots\n";
  } else {
    n = single_n(c);
    if (n < 2 || n > kDefaultMaxQubits) throw UsageError("simulate --n must lie within [2, 20]");
    if (c.shots == 0) throw UsageError("--shots must be at least 1");
    const double p = c.p_noise.value_or(0.0);
    const NoisyState state = white_noise_mix(p, make_target(family, n));
    const auto [setting_a, setting_b] = settings_for(family, n);
    counts_a = sample_outcomes(state, setting_a, c.shots, c.seed, {.stream = 0});
    counts_b = sample_outcomes(state, setting_b, c.shots, c.seed, {.stream = 1});
    exact = witness_expectation(build_witness(family, n), state);
  }

  const WitnessEstimate est =
      estimate_witness(*counts_a, *counts_b, family, {.bootstrap = c.bootstrap, .resamples = 1000, .seed = c.seed});
  const bool detected = est.estimate < 0;
  const std::string verdict = detected ? "detected" : "not detected";

  json files = json::array();
  if (!c.counts_out.empty()) {
    const bool csv = c.format == Format::kCsv;
    const std::string ext = csv ? ".csv" : ".json";
    const std::string path_a = c.counts_out + "_A" + ext;
    const std::string path_b = c.counts_out + "_B" + ext;
    write_file(path_a, csv ? io::counts_to_csv(*counts_a) : io::counts_to_json(*counts_a).dump(2) + "\n");
    write_file(path_b, csv ? io::counts_to_csv(*counts_b) : io::counts_to_json(*counts_b).dump(2) + "\n");
    files = {path_a, path_b};
  }

  std::ostringstream text;
  text << "family " << to_string(family) << ", n = " << n << ", settings " << counts_a->setting().str() << " ("
       << counts_a->shots() << " shots) / " << counts_b->setting().str() << " (" << counts_b->shots()
       << " shots)\n";
  text << "estimate <W> = " << full(est.estimate) << " +- " << full(est.std_error)
       << (c.bootstrap ? " (bootstrap)" : "") << '\n';
  if (exact) text << "exact    <W> = " << full(*exact) << '\n';
  text << "verdict: " << verdict;
  if (detected && est.std_error > 0) text << " at " << fixed(-est.estimate / est.std_error, 1) << " standard errors";
  text << '\n';

  json result = io::estimate_to_json(est);
  result["family"] = to_string(family);
  result["n"] = n;
  result["settings"] = {counts_a->setting().str(), counts_b->setting().str()};
  result["shots"] = {counts_a->shots(), counts_b->shots()};
  result["exact"] = exact ? json(*exact) : json(nullptr);
  result["detected"] = detected;
  result["verdict"] = verdict;
  result["counts_files"] = files;
  result["ingested"] = !c.ingest.empty();
  std::ostringstream csv;
  csv << "family,n,estimate,std_error,exact,detected\n"
      << to_string(family) << ',' << n << ',' << full(est.estimate) << ',' << full(est.std_error) << ','
      << (exact ? full(*exact) : "") << ',' << (detected ? "true" : "false") << '\n';
  emit(c, out, text.str(), run_record(c, result), csv.str());
  return kExitOk;
}

// --- certify -------------------------------------------------------------

int cmd_certify(const RunConfig& c, std::ostream& out) {
  const int n = single_n(c);
  if (n < 2 || n > kCertifyMaxQubits) throw UsageError("certify --n must lie within [2, 12]");
  if (c.restarts < 1) throw UsageError("--restarts must be at least 1");
  const Family family = c.families.front();
  Witness w = build_witness(family, n);
  if (c.negate) w = w.negated();
  const BisepReport report = certify(w, c.restarts, c.seed);

  std::ostringstream text;
  text << "biseparable minimum of " << (c.negate ? "-W" : "W") << " for " << to_string(family) << ", n = " << n
       << " (" << c.restarts << " restarts per cut)\n";
  text << std::left << std::setw(28) << "cut" << std::setw(18) << "min <W>"
       << "converged\n";
  for (const auto& cut : report.cuts) {
    std::ostringstream v;
    v << std::scientific << std::setprecision(6) << cut.min_value;
    text << std::left << std::setw(28) << cut.cut.str() << std::setw(18) << v.str() << cut.converged_restarts << "/"
         << cut.restarts << '\n';
  }
  text << "global minimum " << full(report.global_min) << " at " << report.cuts[report.argmin_cut].cut.str() << '\n';
  text << "certificate: " << (report.pass ? "PASS" : "FAIL") << '\n';

  std::ostringstream csv;
  csv << "cut,min_value,converged_restarts,restarts\n";
  for (const auto& cut : report.cuts) {
    csv << '"' << cut.cut.str() << "\"," << full(cut.min_value) << ',' << cut.converged_restarts << ','
        << cut.restarts << '\n';
  }
  emit(c, out, text.str(), run_record(c, io::bisep_to_json(report)), csv.str());
  return report.pass ? kExitOk : kExitFail;
}

// --- witness / settings ----------------------------------------------------

int cmd_witness(const RunConfig& c, std::ostream& out) {
  const int n = single_n(c);
  if (n < 2 || n > kTableMaxQubits) throw UsageError("witness --n must lie within [2, 16]");
  const Witness w = build_witness(c.families.front(), n);
  std::ostringstream text;
  std::ostringstream csv;
  text << "W for " << to_string(w.family()) << ", n = " << n << ": " << w.terms().size() << " terms, settings "
       << w.settings().first.str() << " / " << w.settings().second.str() << '\n';
  csv << "string,coeff\n";
  for (const auto& [string, coeff] : w.terms().terms()) {
    text << "  " << std::showpos << full(coeff) << std::noshowpos << "  " << string.str() << '\n';
    csv << string.str() << ',' << full(coeff) << '\n';
  }
  emit(c, out, text.str(), run_record(c, io::witness_to_json(w)), csv.str());
  return kExitOk;
}

int cmd_settings(const RunConfig& c, std::ostream& out) {
  const int n = single_n(c);
  if (n < 2 || n > 63) throw UsageError("settings --n must lie within [2, 63]");
  const auto witness = settings_count(SettingsMethod::kWitness, n);
  const auto bell = settings_count(SettingsMethod::kBellGhz, n);
  std::ostringstream text;
  text << "local measurement settings for n = " << n << ": witness " << witness << ", GHZ Bell inequality " << bell
       << " (ratio " << bell / witness << ")\n";
  json result = {{"n", n}, {"witness", witness}, {"bell_ghz", bell}, {"ratio", bell / witness}};
  std::ostringstream csv;
  csv << "n,witness,bell_ghz,ratio\n" << n << ',' << witness << ',' << bell << ',' << bell / witness << '\n';
  emit(c, out, text.str(), run_record(c, result), csv.str());
  return kExitOk;
}

}  // namespace

ReferenceTable load_reference_table() {
  const json j = json::parse(kReferenceTableJson);
  ReferenceTable table;
  table.version = j.at("version").get<int>();
  table.tolerance = j.at("tolerance").get<double>();
  const auto ns = j.at("n").get<std::vector<int>>();
  for (Family f : {Family::kGhz, Family::kCluster}) {
    const auto row = j.at(to_string(f)).get<std::vector<double>>();
    if (row.size() != ns.size()) throw ParseError("reference table row length mismatch");
    for (std::size_t i = 0; i < ns.size(); ++i) table.values[f][ns[i]] = row[i];
  }
  return table;
}

std::string tool_version() { return kVersion; }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-setting entanglement witnesses for GHZ and linear cluster states", "twoset"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  RunConfig config;
  std::string family_text;
  std::string n_text;
  std::string format_text = "text";
  std::string p_text;
  std::optional<std::uint64_t> seed;

  auto common = [&](CLI::App* sub, bool allow_all_families) {
    sub->add_option("--family", family_text, allow_all_families ? "ghz, cluster or all" : "ghz or cluster")
        ->check(CLI::IsMember(allow_all_families ? std::vector<std::string>{"ghz", "cluster", "all"}
                                                 : std::vector<std::string>{"ghz", "cluster"},
                              CLI::ignore_case));
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", config.out_path, "Write the machine-readable record here");
  };

  auto* table = app.add_subcommand("table", "Noise-tolerance thresholds per family and qubit count");
  common(table, true);
  table->add_option("--n", n_text, "Qubit count or range, e.g. 2..10")->default_val("2..10");
  table->add_flag("--check", config.check, "Compare against the reference table; exit 1 on mismatch");

  auto* eval = app.add_subcommand("eval", "Exact witness value on the noisy target state");
  common(eval, false);
  eval->add_option("--n", n_text, "Qubit count")->required();
  eval->add_option("--p", p_text, "White-noise fraction in [0, 1] (default 0), or 'threshold'");

  auto* simulate = app.add_subcommand("simulate", "Sample both settings and estimate the witness");
  common(simulate, false);
  simulate->add_option("--n", n_text, "Qubit count");
  simulate->add_option("--p", p_text, "White-noise fraction in [0, 1] (default 0)");
  simulate->add_option("--shots", config.shots, "Shots per setting")->default_val(kDefaultShots);
  simulate->add_option("--seed", seed, "RNG seed (default: $TWOSET_SEED or 1)");
  simulate->add_option("--ingest", config.ingest, "Counts files for settings A and B; skips simulation")
      ->expected(2);
  simulate->add_option("--counts-out", config.counts_out, "Write the counts tables to PREFIX_A/PREFIX_B");
  simulate->add_flag("--bootstrap", config.bootstrap, "Bootstrap standard error (1000 resamples)");

  auto* cert = app.add_subcommand("certify", "Minimize the witness over biseparable states");
  common(cert, false);
  cert->add_option("--n", n_text, "Qubit count (<= 12)")->required();
  cert->add_option("--restarts", config.restarts, "Random restarts per cut")->default_val(kDefaultRestarts);
  cert->add_option("--seed", seed, "RNG seed (default: $TWOSET_SEED or 1)");
  cert->add_flag("--negate", config.negate, "Certify -W instead (control that must fail)");

  auto* wit = app.add_subcommand("witness", "Print the Pauli decomposition of a witness");
  common(wit, false);
  wit->add_option("--n", n_text, "Qubit count")->required();

  auto* settings = app.add_subcommand("settings", "Compare measurement-setting counts");
  settings->add_option("--n", n_text, "Qubit count")->required();
  settings->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  settings->add_option("--out", config.out_path, "Write the machine-readable record here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "twoset: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    config.format = format_text == "json" ? Format::kJson : format_text == "csv" ? Format::kCsv : Format::kText;
    if (family_text.empty()) family_text = config.command == "table" ? "all" : "ghz";
    if (family_text == "all" || family_text == "ALL") {
      config.families = {Family::kGhz, Family::kCluster};
    } else {
      config.families = {parse_family(family_text)};
    }
    if (!n_text.empty()) std::tie(config.n_min, config.n_max) = parse_n_range(n_text);
    config.seed = seed ? *seed : default_seed();

    if (!p_text.empty()) {
      if (p_text == "threshold") {
        if (config.n_min != config.n_max || config.n_min < 2) throw UsageError("--p threshold needs a single --n");
        config.p_noise = closed_form_threshold(config.families.front(), config.n_min);
      } else {
        try {
          std::size_t used = 0;
          config.p_noise = std::stod(p_text, &used);
          if (used != p_text.size()) throw UsageError("");
        } catch (const std::exception&) {
          throw UsageError("--p expects a number in [0, 1] or 'threshold', got '" + p_text + "'");
        }
      }
      if (!(*config.p_noise >= 0.0 && *config.p_noise <= 1.0)) throw UsageError("--p must lie within [0, 1]");
    }
    if (!config.p_noise && (config.command == "eval" || (config.command == "simulate" && config.ingest.empty()))) {
      config.p_noise = 0.0;
    }
    if (config.command == "simulate" && config.ingest.empty() && n_text.empty()) {
      throw UsageError("simulate needs --n unless --ingest is given");
    }
  } catch (const UsageError& e) {
    err << "twoset: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "twoset: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (config.command == "table") return cmd_table(config, out, err);
    if (config.command == "eval") return cmd_eval(config, out);
    if (config.command == "simulate") return cmd_simulate(config, out, err);
    if (config.command == "certify") return cmd_certify(config, out);
    if (config.command == "witness") return cmd_witness(config, out);
    return cmd_settings(config, out);
  } catch (const UsageError& e) {
    err << "twoset: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "twoset: error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace twoset::cli
