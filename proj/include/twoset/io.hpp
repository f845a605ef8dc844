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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoset/bisep.hpp"
#include "twoset/measurement.hpp"
#include "twoset/state.hpp"
#include "twoset/witness.hpp"

// JSON and CSV encodings of the library's data types. Pauli strings use the
// "+XZI" text form; outcomes are bit strings with qubit 1 leftmost.
namespace twoset::io {

using nlohmann::json;

// {n, basis_order: "qubit1_msb", amplitudes: [[re, im], ...]}
json state_to_json(const StateVector& s);
StateVector state_from_json(const json& j);

// Little-endian binary dump: magic "TWSV", u32 version (1), u32 n, then 2^n
// (f64 re, f64 im) pairs in qubit1_msb order.
void write_state_binary(std::ostream& os, const StateVector& s);
StateVector read_state_binary(std::istream& is);

// {family, n, negated, terms: [{string, coeff}], settings: [A, B]}
json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

// {setting: "xzxz", shots, counts: {"0110": 123, ...}}
json counts_to_json(const CountsTable& c);
CountsTable counts_from_json(const json& j);

// "outcome,count" rows; shots is the sum of the counts.
std::string counts_to_csv(const CountsTable& c);
CountsTable counts_from_csv(const std::string& text, const MeasurementSetting& setting);

json threshold_to_json(const ThresholdReport& r);

/// Table layout: a header "N,2,3,..." then one row per family, values to 2 d.p.
std::string thresholds_to_csv(const std::vector<ThresholdReport>& reports);

json bisep_to_json(const BisepReport& r);

json estimate_to_json(const WitnessEstimate& e);

/// Reads a CountsTable from a .json or .csv file; CSV needs `setting`.
CountsTable load_counts_file(const std::string& path, const MeasurementSetting* csv_setting = nullptr);

}  // namespace twoset::io
