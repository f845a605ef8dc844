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

#include "twoset/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <numeric>

#include "twoset/errors.hpp"
#include "twoset/rng.hpp"
#include "twoset/witness.hpp"

namespace twoset {

namespace {

void check_match(const MeasurementSetting& m, int n) {
  if (m.num_qubits() != n) {
    throw DimensionError("setting has " + std::to_string(m.num_qubits()) + " axes, state has " +
                         std::to_string(n) + " qubits");
  }
}

std::uint64_t site_mask(std::span<const int> sites, int n) {
  if (sites.empty()) throw DomainError("correlation needs at least one site");
  std::uint64_t mask = 0;
  for (int site : sites) {
    if (site < 0 || site >= n) throw DomainError("correlation site " + std::to_string(site) + " out of range");
    mask |= std::uint64_t{1} << (n - 1 - site);
  }
  return mask;
}

// Support masks of the generators selected for one projector.
std::vector<std::uint64_t> parity_masks(Family family, int n, int which) {
  const GeneratorSet gens = generators_for(family, n);
  const std::uint64_t subset = projector_specs(family, n)[which].generator_subset;
  std::vector<std::uint64_t> masks;
  for (int k = 0; k < n; ++k) {
    if (subset & (std::uint64_t{1} << k)) masks.push_back(gens.generators[k].support());
  }
  return masks;
}

bool all_even(const std::vector<std::uint64_t>& masks, std::uint64_t outcome) {
  return std::all_of(masks.begin(), masks.end(),
                     [outcome](std::uint64_t m) { return (std::popcount(m & outcome) & 1) == 0; });
}

void check_family_settings(const MeasurementSetting& a, const MeasurementSetting& b, Family family) {
  if (a.num_qubits() != b.num_qubits()) throw ContractError("settings A and B have different sizes");
  const auto expected = settings_for(family, a.num_qubits());
  if (!(a == expected.first) || !(b == expected.second)) {
    throw ContractError("settings " + a.str() + "/" + b.str() + " do not match the " + to_string(family) +
                        " pattern " + expected.first.str() + "/" + expected.second.str());
  }
}

double accepted_fraction(const CountsTable& c, const std::vector<std::uint64_t>& masks) {
  std::uint64_t accepted = 0;
  for (const auto& [outcome, count] : c.counts()) {
    if (all_even(masks, outcome)) accepted += count;
  }
  return static_cast<double>(accepted) / static_cast<double>(c.shots());
}

double accepted_fraction(const OutcomeDistribution& d, const std::vector<std::uint64_t>& masks) {
  double acc = 0;
  for (std::uint64_t b = 0; b < d.probabilities.size(); ++b) {
    if (all_even(masks, b)) acc += d.probabilities[b];
  }
  return acc;
}

// Resampling a table with replacement and recounting accepted shots is a
// Bernoulli(f) draw per shot, which is what is simulated here.
double bootstrap_variance(double fraction, std::uint64_t shots, int resamples, std::uint64_t seed,
                          std::uint64_t stream) {
  std::vector<double> values(resamples);
  for (int r = 0; r < resamples; ++r) {
    std::uint64_t accepted = 0;
    for (std::uint64_t i = 0; i < shots; ++i) {
      if (Philox4x32::uniform(seed, stream, static_cast<std::uint64_t>(r) * shots + i) < fraction) ++accepted;
    }
    values[r] = static_cast<double>(accepted) / static_cast<double>(shots);
  }
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / resamples;
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return resamples > 1 ? ss / (resamples - 1) : 0.0;
}

}  // namespace

CountsTable::CountsTable(MeasurementSetting setting, std::uint64_t shots,
                         std::map<std::uint64_t, std::uint64_t> counts)
    : setting_(std::move(setting)), shots_(shots), counts_(std::move(counts)) {
  if (shots_ == 0) throw ContractError("a counts table needs at least one shot");
  const int n = setting_.num_qubits();
  std::uint64_t total = 0;
  for (const auto& [outcome, count] : counts_) {
    if (n < 64 && (outcome >> n) != 0) throw DimensionError("outcome does not fit in " + std::to_string(n) + " bits");
    total += count;
  }
  if (total != shots_) {
    throw ContractError("counts sum to " + std::to_string(total) + " but shots = " + std::to_string(shots_));
  }
  std::erase_if(counts_, [](const auto& kv) { return kv.second == 0; });
}

std::uint64_t CountsTable::count(std::uint64_t outcome) const {
  auto it = counts_.find(outcome);
  return it == counts_.end() ? 0 : it->second;
}

CountsTable CountsTable::merged(const CountsTable& other) const {
  if (!(setting_ == other.setting_)) throw ContractError("cannot merge tables of different settings");
  auto counts = counts_;
  for (const auto& [outcome, count] : other.counts_) counts[outcome] += count;
  return CountsTable(setting_, shots_ + other.shots_, std::move(counts));
}

std::string outcome_to_string(std::uint64_t outcome, int n) {
  std::string out(n, '0');
  for (int j = 0; j < n; ++j) {
    if ((outcome >> (n - 1 - j)) & 1) out[j] = '1';
  }
  return out;
}

std::uint64_t outcome_from_string(std::string_view bits) {
  if (bits.empty() || bits.size() > 64) throw ParseError("outcome string must have 1..64 characters");
  std::uint64_t out = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("invalid outcome string '" + std::string(bits) + "'");
    out = (out << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return out;
}

OutcomeDistribution outcome_distribution(const StateVector& s, const MeasurementSetting& m) {
  const int n = s.num_qubits();
  check_match(m, n);
  std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
  // Hadamard on every x-measured site turns the x eigenbasis into the z basis.
  for (int j = 0; j < n; ++j) {
    if (m.axis(j) != Axis::kX) continue;
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      if (b & bit) continue;
      const Amplitude a0 = amps[b];
      const Amplitude a1 = amps[b | bit];
      amps[b] = (a0 + a1) * M_SQRT1_2;
      amps[b | bit] = (a0 - a1) * M_SQRT1_2;
    }
  }
  OutcomeDistribution dist{m, std::vector<double>(amps.size())};
  for (std::size_t b = 0; b < amps.size(); ++b) dist.probabilities[b] = std::norm(amps[b]);
  return dist;
}

OutcomeDistribution outcome_distribution(const NoisyState& s, const MeasurementSetting& m) {
  OutcomeDistribution dist = outcome_distribution(s.pure(), m);
  const double p = s.p_noise();
  const double uniform = std::ldexp(1.0, -s.num_qubits());
  for (double& v : dist.probabilities) v = p * uniform + (1.0 - p) * v;
  return dist;
}

CountsTable sample_outcomes(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed,
                            const SamplingOptions& options) {
  if (shots == 0) throw DomainError("shots must be at least 1");
  std::vector<double> cdf(dist.probabilities.size());
  std::partial_sum(dist.probabilities.begin(), dist.probabilities.end(), cdf.begin());
  const double total = cdf.back();
  if (!(total > 0)) throw NumericError("outcome distribution has zero mass");

  const std::uint64_t block = std::max<std::uint64_t>(options.block_size, 1);
  const std::uint64_t num_blocks = (shots + block - 1) / block;
  auto run_block = [&](std::uint64_t blk) {
    std::map<std::uint64_t, std::uint64_t> counts;
    const std::uint64_t end = std::min(shots, (blk + 1) * block);
    for (std::uint64_t i = blk * block; i < end; ++i) {
      const double u = Philox4x32::uniform(seed, options.stream, i) * total;
      const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      ++counts[static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1))];
    }
    return counts;
  };

  std::map<std::uint64_t, std::uint64_t> merged;
  auto merge = [&merged](const std::map<std::uint64_t, std::uint64_t>& part) {
    for (const auto& [outcome, count] : part) merged[outcome] += count;
  };
  const auto threads = static_cast<std::uint64_t>(std::max(options.threads, 1));
  for (std::uint64_t first = 0; first < num_blocks; first += threads) {
    std::vector<std::future<std::map<std::uint64_t, std::uint64_t>>> pending;
    const std::uint64_t last = std::min(num_blocks, first + threads);
    for (std::uint64_t blk = first + 1; blk < last; ++blk) pending.push_back(std::async(std::launch::async, run_block, blk));
    merge(run_block(first));
    for (auto& f : pending) merge(f.get());
  }
  return CountsTable(dist.setting, shots, std::move(merged));
}

CountsTable sample_outcomes(const StateVector& s, const MeasurementSetting& m, std::uint64_t shots,
                            std::uint64_t seed, const SamplingOptions& options) {
  if (shots == 0) throw DomainError("shots must be at least 1");
  return sample_outcomes(outcome_distribution(s, m), shots, seed, options);
}

CountsTable sample_outcomes(const NoisyState& s, const MeasurementSetting& m, std::uint64_t shots,
                            std::uint64_t seed, const SamplingOptions& options) {
  if (shots == 0) throw DomainError("shots must be at least 1");
  return sample_outcomes(outcome_distribution(s, m), shots, seed, options);
}

double correlation_from_counts(const CountsTable& c, std::span<const int> sites) {
  const std::uint64_t mask = site_mask(sites, c.num_qubits());
  std::int64_t acc = 0;
  for (const auto& [outcome, count] : c.counts()) {
    acc += (std::popcount(outcome & mask) & 1) ? -static_cast<std::int64_t>(count) : static_cast<std::int64_t>(count);
  }
  return static_cast<double>(acc) / static_cast<double>(c.shots());
}

double correlation_from_distribution(const OutcomeDistribution& d, std::span<const int> sites) {
  const std::uint64_t mask = site_mask(sites, d.setting.num_qubits());
  double acc = 0;
  for (std::uint64_t b = 0; b < d.probabilities.size(); ++b) {
    acc += (std::popcount(b & mask) & 1) ? -d.probabilities[b] : d.probabilities[b];
  }
  return acc;
}

bool projector_accepts(Family family, int n, int which, std::uint64_t outcome) {
  if (which != 0 && which != 1) throw DomainError("projector index must be 0 or 1");
  return all_even(parity_masks(family, n, which), outcome);
}

WitnessEstimate estimate_witness(const CountsTable& counts_a, const CountsTable& counts_b, Family family,
                                 const EstimateOptions& options) {
  check_family_settings(counts_a.setting(), counts_b.setting(), family);
  const int n = counts_a.num_qubits();
  WitnessEstimate out;
  out.projector_1 = accepted_fraction(counts_a, parity_masks(family, n, 0));
  out.projector_2 = accepted_fraction(counts_b, parity_masks(family, n, 1));
  out.estimate = 3.0 - 2.0 * (out.projector_1 + out.projector_2);
  double var1 = 0;
  double var2 = 0;
  if (options.bootstrap) {
    var1 = bootstrap_variance(out.projector_1, counts_a.shots(), options.resamples, options.seed, 0);
    var2 = bootstrap_variance(out.projector_2, counts_b.shots(), options.resamples, options.seed, 1);
  } else {
    var1 = out.projector_1 * (1.0 - out.projector_1) / static_cast<double>(counts_a.shots());
    var2 = out.projector_2 * (1.0 - out.projector_2) / static_cast<double>(counts_b.shots());
  }
  out.std_error = std::sqrt(4.0 * var1 + 4.0 * var2);
  return out;
}

WitnessEstimate estimate_witness(const OutcomeDistribution& dist_a, const OutcomeDistribution& dist_b,
                                 Family family) {
  check_family_settings(dist_a.setting, dist_b.setting, family);
  const int n = dist_a.setting.num_qubits();
  WitnessEstimate out;
  out.projector_1 = accepted_fraction(dist_a, parity_masks(family, n, 0));
  out.projector_2 = accepted_fraction(dist_b, parity_masks(family, n, 1));
  out.estimate = 3.0 - 2.0 * (out.projector_1 + out.projector_2);
  return out;
}

}  // namespace twoset
