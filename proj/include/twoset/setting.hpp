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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twoset/family.hpp"
#include "twoset/pauli.hpp"

namespace twoset {

/// Local observable measured on one qubit.
enum class Axis : char { kX = 'x', kZ = 'z' };

// One local measurement setting: a choice of x or z for every qubit, all
// measured simultaneously.
class MeasurementSetting {
 public:
  explicit MeasurementSetting(std::vector<Axis> axes);

  /// Parses a string such as "xzxz". Throws ParseError on other characters.
  static MeasurementSetting parse(std::string_view text);

  int num_qubits() const { return static_cast<int>(axes_.size()); }
  Axis axis(int site) const { return axes_.at(site); }
  const std::vector<Axis>& axes() const { return axes_; }

  /// True iff every non-identity letter of `p` is the letter this setting measures there.
  bool measures(const PauliString& p) const;

  std::string str() const;

  friend bool operator==(const MeasurementSetting&, const MeasurementSetting&) = default;

 private:
  std::vector<Axis> axes_;
};

/// Setting A and setting B of the two-setting scheme. GHZ: all x, then all z.
/// Cluster: x on odd sites and z on even sites (1-based), then the complement.
std::pair<MeasurementSetting, MeasurementSetting> settings_for(Family family, int n);

}  // namespace twoset
