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

#include "twoset/setting.hpp"

#include "twoset/errors.hpp"

namespace twoset {

MeasurementSetting::MeasurementSetting(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > PauliString::kMaxQubits) {
    throw DimensionError("a measurement setting needs 1..64 axes");
  }
}

MeasurementSetting MeasurementSetting::parse(std::string_view text) {
  std::vector<Axis> axes;
  for (char c : text) {
    if (c == 'x' || c == 'X') {
      axes.push_back(Axis::kX);
    } else if (c == 'z' || c == 'Z') {
      axes.push_back(Axis::kZ);
    } else {
      throw ParseError("invalid axis '" + std::string(1, c) + "' in setting '" + std::string(text) + "'");
    }
  }
  if (axes.empty()) throw ParseError("empty measurement setting");
  return MeasurementSetting(std::move(axes));
}

bool MeasurementSetting::measures(const PauliString& p) const {
  if (p.num_qubits() != num_qubits()) return false;
  for (int j = 0; j < num_qubits(); ++j) {
    const Pauli op = p.op(j);
    if (op == Pauli::kI) continue;
    if (op == Pauli::kY) return false;
    if ((op == Pauli::kX) != (axes_[j] == Axis::kX)) return false;
  }
  return true;
}

std::string MeasurementSetting::str() const {
  std::string out;
  for (Axis a : axes_) out.push_back(static_cast<char>(a));
  return out;
}

std::pair<MeasurementSetting, MeasurementSetting> settings_for(Family family, int n) {
  if (n < 2 || n > PauliString::kMaxQubits) throw DomainError("settings need 2 <= n <= 64");
  std::vector<Axis> a(n);
  std::vector<Axis> b(n);
  for (int j = 0; j < n; ++j) {
    if (family == Family::kGhz) {
      a[j] = Axis::kX;
      b[j] = Axis::kZ;
    } else {
      // Site j is qubit j+1, so even j is an odd qubit.
      a[j] = j % 2 == 0 ? Axis::kX : Axis::kZ;
      b[j] = j % 2 == 0 ? Axis::kZ : Axis::kX;
    }
  }
  return {MeasurementSetting(std::move(a)), MeasurementSetting(std::move(b))};
}

}  // namespace twoset
