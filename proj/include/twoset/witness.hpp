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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "twoset/family.hpp"
#include "twoset/pauli.hpp"
#include "twoset/setting.hpp"
#include "twoset/state.hpp"

namespace twoset {

// One of the two projectors inside a witness: the projector onto the common +1
// eigenspace of the selected generators, together with the setting in which all
// of its terms are measured.
struct ProjectorSpec {
  std::uint64_t generator_subset = 0;  // bit k-1 selects generator k
  MeasurementSetting setting;
};

/// GHZ: {S_1} in all-x, {S_2..S_n} in all-z.
/// Cluster: odd-k generators in setting A, even-k generators in setting B.
std::array<ProjectorSpec, 2> projector_specs(Family family, int n);

/// Expands prod_{k in subset} (1 + S_k)/2 into 2^|subset| Pauli terms.
PauliSum stabilizer_projector(const GeneratorSet& gens, std::uint64_t subset);

// W = 3*1 - 2 (P_1 + P_2) as an explicit real Pauli decomposition. The identity
// term is merged, so tr(W)/2^n is a single coefficient.
class Witness {
 public:
  Witness(Family family, PauliSum terms, std::pair<MeasurementSetting, MeasurementSetting> settings,
          bool negated = false);

  Family family() const { return family_; }
  int num_qubits() const { return terms_.num_qubits(); }
  const PauliSum& terms() const { return terms_; }
  const std::pair<MeasurementSetting, MeasurementSetting>& settings() const { return settings_; }

  /// True for the sign-flipped control operator produced by negated().
  bool is_negated() const { return negated_; }

  /// -W, used as a control that the biseparability check can fail.
  Witness negated() const;

  /// Every non-identity term is measurable in one of the two settings.
  bool two_setting_measurable() const;

 private:
  Family family_;
  PauliSum terms_;
  std::pair<MeasurementSetting, MeasurementSetting> settings_;
  bool negated_;
};

/// Throw DomainError for n < 2.
Witness build_ghz_witness(int n);
Witness build_cluster_witness(int n);
Witness build_witness(Family family, int n);

double witness_expectation(const Witness& w, const StateVector& s);
double witness_expectation(const Witness& w, const NoisyState& s);

enum class ThresholdMethod { kClosedForm, kRootFind };

std::string to_string(ThresholdMethod method);

struct ThresholdReport {
  int n = 0;
  Family family = Family::kGhz;
  double p_threshold = 0.0;  // the reported value, from `method`
  ThresholdMethod method = ThresholdMethod::kClosedForm;
  double p_closed_form = 0.0;
  std::optional<double> p_root_find;  // absent when n exceeds the root-finding limit
  double trace_p1 = 0.0;
  double trace_p2 = 0.0;
};

/// Closed forms: GHZ 1/(3 - 4/2^n); cluster 1/(4 - 2 (2^-floor(n/2) + 2^-ceil(n/2))).
double closed_form_threshold(Family family, int n);

inline constexpr int kDefaultRootFindMaxQubits = 16;
inline constexpr double kThresholdAgreement = 1e-9;

/// Largest white-noise fraction with a negative witness value on the noisy
/// target. Also solves <W>(p) = 0 by bracketing root finding on [0, 1] for
/// n <= root_find_max_n and throws NumericError if the two disagree by more
/// than kThresholdAgreement.
ThresholdReport noise_threshold(Family family, int n, int root_find_max_n = kDefaultRootFindMaxQubits);

enum class SettingsMethod { kWitness, kBellGhz };

/// Local settings needed: 2 for the witnesses, 2^n for the GHZ Bell-inequality scheme.
std::uint64_t settings_count(SettingsMethod method, int n);

/// "entangled" for n = 2, where genuine multipartite entanglement is the same notion.
std::string detection_label(int n);

}  // namespace twoset
