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

#include "twoset/io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "twoset/errors.hpp"

namespace twoset::io {

namespace {

constexpr char kStateMagic[4] = {'T', 'W', 'S', 'V'};
constexpr std::uint32_t kStateVersion = 1;

json amplitudes_to_json(const StateVector& s) {
  json arr = json::array();
  for (const auto& a : s.amplitudes()) arr.push_back({a.real(), a.imag()});
  return arr;
}

template <typename T>
void put_le(std::ostream& os, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  os.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& is) {
  unsigned char bytes[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw ParseError("truncated binary state");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::string two_decimals(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

}  // namespace

json state_to_json(const StateVector& s) {
  return {{"n", s.num_qubits()}, {"basis_order", "qubit1_msb"}, {"amplitudes", amplitudes_to_json(s)}};
}

StateVector state_from_json(const json& j) {
  const int n = require<int>(j, "n");
  if (require<std::string>(j, "basis_order") != "qubit1_msb") throw ParseError("unsupported basis_order");
  const json& arr = j.at("amplitudes");
  std::vector<Amplitude> amps;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("amplitudes must be [re, im] pairs");
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return StateVector(n, std::move(amps));
}

void write_state_binary(std::ostream& os, const StateVector& s) {
  os.write(kStateMagic, 4);
  put_le<std::uint32_t>(os, kStateVersion);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(s.num_qubits()));
  for (const auto& a : s.amplitudes()) {
    put_le<double>(os, a.real());
    put_le<double>(os, a.imag());
  }
}

StateVector read_state_binary(std::istream& is) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kStateMagic, 4) != 0) throw ParseError("not a binary state dump");
  if (get_le<std::uint32_t>(is) != kStateVersion) throw ParseError("unsupported binary state version");
  const auto n = get_le<std::uint32_t>(is);
  if (n < 1 || n > 30) throw ParseError("binary state qubit count out of range");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) {
    const double re = get_le<double>(is);
    const double im = get_le<double>(is);
    a = {re, im};
  }
  return StateVector(static_cast<int>(n), std::move(amps));
}

json witness_to_json(const Witness& w) {
  json terms = json::array();
  for (const auto& [string, coeff] : w.terms().terms()) terms.push_back({{"string", string.str()}, {"coeff", coeff}});
  return {{"family", to_string(w.family())},
          {"n", w.num_qubits()},
          {"negated", w.is_negated()},
          {"terms", terms},
          {"settings", {w.settings().first.str(), w.settings().second.str()}}};
}

Witness witness_from_json(const json& j) {
  const Family family = parse_family(require<std::string>(j, "family"));
  const int n = require<int>(j, "n");
  PauliSum terms(n);
  for (const auto& t : j.at("terms")) {
    terms.add(PauliString::parse(require<std::string>(t, "string")), require<double>(t, "coeff"));
  }
  const auto settings = require<std::vector<std::string>>(j, "settings");
  if (settings.size() != 2) throw ParseError("a witness has exactly two settings");
  const bool negated = j.value("negated", false);
  return Witness(family, std::move(terms),
                 {MeasurementSetting::parse(settings[0]), MeasurementSetting::parse(settings[1])}, negated);
}

json counts_to_json(const CountsTable& c) {
  json counts = json::object();
  for (const auto& [outcome, count] : c.counts()) counts[outcome_to_string(outcome, c.num_qubits())] = count;
  return {{"setting", c.setting().str()}, {"shots", c.shots()}, {"counts", counts}};
}

CountsTable counts_from_json(const json& j) {
  MeasurementSetting setting = MeasurementSetting::parse(require<std::string>(j, "setting"));
  const auto shots = require<std::uint64_t>(j, "shots");
  if (!j.at("counts").is_object()) throw ParseError("counts must be an object");
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& [key, value] : j.at("counts").items()) {
    if (static_cast<int>(key.size()) != setting.num_qubits()) {
      throw ParseError("outcome '" + key + "' does not match setting length");
    }
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
      throw ParseError("count for '" + key + "' must be a nonnegative integer");
    }
    counts[outcome_from_string(key)] += value.get<std::uint64_t>();
  }
  return CountsTable(std::move(setting), shots, std::move(counts));
}

std::string counts_to_csv(const CountsTable& c) {
  std::ostringstream os;
  os << "outcome,count\n";
  for (const auto& [outcome, count] : c.counts()) os << outcome_to_string(outcome, c.num_qubits()) << ',' << count << '\n';
  return os.str();
}

CountsTable counts_from_csv(const std::string& text, const MeasurementSetting& setting) {
  std::istringstream is(text);
  std::string line;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line == "outcome,count") continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("CSV row '" + line + "' lacks a comma");
    const std::string key = line.substr(0, comma);
    if (static_cast<int>(key.size()) != setting.num_qubits()) throw ParseError("outcome '" + key + "' has wrong length");
    std::uint64_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoull(line.substr(comma + 1), &used);
      if (used != line.size() - comma - 1) throw ParseError("trailing characters");
    } catch (const std::exception&) {
      throw ParseError("bad count in CSV row '" + line + "'");
    }
    counts[outcome_from_string(key)] += count;
    shots += count;
  }
  return CountsTable(setting, shots, std::move(counts));
}

json threshold_to_json(const ThresholdReport& r) {
  return {{"family", to_string(r.family)},
          {"n", r.n},
          {"p_threshold", r.p_threshold},
          {"method", to_string(r.method)},
          {"p_closed_form", r.p_closed_form},
          {"p_root_find", r.p_root_find ? json(*r.p_root_find) : json(nullptr)},
          {"trace_p1", r.trace_p1},
          {"trace_p2", r.trace_p2}};
}

std::string thresholds_to_csv(const std::vector<ThresholdReport>& reports) {
  std::vector<int> ns;
  std::vector<Family> families;
  for (const auto& r : reports) {
    if (std::find(ns.begin(), ns.end(), r.n) == ns.end()) ns.push_back(r.n);
    if (std::find(families.begin(), families.end(), r.family) == families.end()) families.push_back(r.family);
  }
  std::sort(ns.begin(), ns.end());
  std::ostringstream os;
  os << "N";
  for (int n : ns) os << ',' << n;
  os << '\n';
  for (Family f : families) {
    os << to_string(f);
    for (int n : ns) {
      os << ',';
      auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.family == f && r.n == n; });
      if (it != reports.end()) os << two_decimals(it->p_threshold);
    }
    os << '\n';
  }
  return os.str();
}

json bisep_to_json(const BisepReport& r) {
  json cuts = json::array();
  for (const auto& c : r.cuts) {
    json part_a = json::array();
    json part_b = json::array();
    for (int s : c.cut.part_a) part_a.push_back(s + 1);
    for (int s : c.cut.part_b) part_b.push_back(s + 1);
    cuts.push_back({{"cut", c.cut.str()},
                    {"part_a", part_a},
                    {"part_b", part_b},
                    {"min_value", c.min_value},
                    {"converged", c.converged},
                    {"restarts", c.restarts},
                    {"converged_restarts", c.converged_restarts},
                    {"state_a", amplitudes_to_json(c.state_a)},
                    {"state_b", amplitudes_to_json(c.state_b)}});
  }
  return {{"family", to_string(r.family)},
          {"n", r.n},
          {"negated", r.negated},
          {"restarts", r.restarts},
          {"seed", r.seed},
          {"global_min", r.global_min},
          {"argmin_cut", r.cuts.empty() ? json(nullptr) : json(r.cuts[r.argmin_cut].cut.str())},
          {"pass", r.pass},
          {"cuts", cuts}};
}

json estimate_to_json(const WitnessEstimate& e) {
  return {{"estimate", e.estimate},
          {"std_error", e.std_error},
          {"projector_1", e.projector_1},
          {"projector_2", e.projector_2}};
}

CountsTable load_counts_file(const std::string& path, const MeasurementSetting* csv_setting) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const bool is_csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  if (is_csv) {
    if (csv_setting == nullptr) throw ParseError("CSV counts need an explicit setting");
    return counts_from_csv(text, *csv_setting);
  }
  try {
    return counts_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace twoset::io
