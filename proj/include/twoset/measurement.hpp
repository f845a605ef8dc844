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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twoset/family.hpp"
#include "twoset/setting.hpp"
#include "twoset/state.hpp"

namespace twoset {

// Outcome encoding: bit (n-1-j) of an outcome index is 0 when qubit j+1
// returned +1 and 1 when it returned -1, so outcome strings read like basis
// labels with qubit 1 leftmost.

/// Exact Born-rule probabilities of the 2^n outcomes of one setting.
struct OutcomeDistribution {
  MeasurementSetting setting;
  std::vector<double> probabilities;
};

// Outcome counts of one setting. Only observed outcomes are stored.
class CountsTable {
 public:
  /// Throws ContractError if the counts do not sum to `shots` or shots is 0,
  /// DimensionError if an outcome does not fit in n bits.
  CountsTable(MeasurementSetting setting, std::uint64_t shots, std::map<std::uint64_t, std::uint64_t> counts);

  const MeasurementSetting& setting() const { return setting_; }
  int num_qubits() const { return setting_.num_qubits(); }
  std::uint64_t shots() const { return shots_; }
  const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(std::uint64_t outcome) const;

  /// Sums two tables of the same setting.
  CountsTable merged(const CountsTable& other) const;

  friend bool operator==(const CountsTable&, const CountsTable&) = default;

 private:
  MeasurementSetting setting_;
  std::uint64_t shots_;
  std::map<std::uint64_t, std::uint64_t> counts_;
};

std::string outcome_to_string(std::uint64_t outcome, int n);
std::uint64_t outcome_from_string(std::string_view bits);

/// Throws DimensionError if the setting and state sizes differ.
OutcomeDistribution outcome_distribution(const StateVector& s, const MeasurementSetting& m);
OutcomeDistribution outcome_distribution(const NoisyState& s, const MeasurementSetting& m);

struct SamplingOptions {
  std::uint64_t stream = 0;  // independent Philox stream, e.g. one per setting
  int threads = 1;
  std::uint64_t block_size = 1 << 16;
};

/// i.i.d. draws from `dist`; shot i uses Philox draw (seed, stream, i), so the
/// table depends only on the arguments and not on `threads`.
CountsTable sample_outcomes(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed,
                            const SamplingOptions& options = {});
CountsTable sample_outcomes(const StateVector& s, const MeasurementSetting& m, std::uint64_t shots,
                            std::uint64_t seed, const SamplingOptions& options = {});
CountsTable sample_outcomes(const NoisyState& s, const MeasurementSetting& m, std::uint64_t shots,
                            std::uint64_t seed, const SamplingOptions& options = {});

/// Empirical <prod_{j in sites} O_j> with 0-based `sites`. Throws DomainError
/// if `sites` is empty or out of range.
double correlation_from_counts(const CountsTable& c, std::span<const int> sites);
double correlation_from_distribution(const OutcomeDistribution& d, std::span<const int> sites);

struct WitnessEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double projector_1 = 0.0;  // estimated <P_1>, from setting A
  double projector_2 = 0.0;  // estimated <P_2>, from setting B
};

struct EstimateOptions {
  bool bootstrap = false;  // resample the tables instead of the plug-in variance
  int resamples = 1000;
  std::uint64_t seed = 0;
};

/// W = 3 - 2(<P_1> + <P_2>), each projector value being the fraction of shots
/// whose stabilizer parities in that projector are all +1. The standard error
/// is sqrt(4 var(P_1) + 4 var(P_2)) with plug-in binomial variances.
/// Throws ContractError unless A and B are the family's two settings.
WitnessEstimate estimate_witness(const CountsTable& counts_a, const CountsTable& counts_b, Family family,
                                 const EstimateOptions& options = {});

/// Infinite-shot limit of estimate_witness; std_error is 0.
WitnessEstimate estimate_witness(const OutcomeDistribution& dist_a, const OutcomeDistribution& dist_b,
                                 Family family);

/// Per-outcome indicator of whether every parity check of projector `which`
/// (0 or 1) passes. Exposed for tests.
bool projector_accepts(Family family, int n, int which, std::uint64_t outcome);

}  // namespace twoset
