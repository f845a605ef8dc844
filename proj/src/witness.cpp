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

#include "twoset/witness.hpp"

#include <bit>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>

#include "twoset/errors.hpp"

namespace twoset {

namespace {

void check_witness_size(int n) {
  if (n < 2) throw DomainError("witnesses need n >= 2, got " + std::to_string(n));
  if (n > 24) throw DomainError("witness expansion limited to n <= 24");
}

std::uint64_t parity_subset(int n, int residue) {
  std::uint64_t subset = 0;
  for (int k = 1; k <= n; ++k) {
    if (k % 2 == residue) subset |= std::uint64_t{1} << (k - 1);
  }
  return subset;
}

}  // namespace

std::array<ProjectorSpec, 2> projector_specs(Family family, int n) {
  auto [setting_a, setting_b] = settings_for(family, n);
  if (family == Family::kGhz) {
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return {ProjectorSpec{1, std::move(setting_a)}, ProjectorSpec{all & ~std::uint64_t{1}, std::move(setting_b)}};
  }
  return {ProjectorSpec{parity_subset(n, 1), std::move(setting_a)},
          ProjectorSpec{parity_subset(n, 0), std::move(setting_b)}};
}

PauliSum stabilizer_projector(const GeneratorSet& gens, std::uint64_t subset) {
  PauliSum out(gens.n);
  const double weight = std::ldexp(1.0, -std::popcount(subset));
  // Walk every submask of `subset`, including the empty one.
  std::uint64_t sub = subset;
  while (true) {
    out.add(subgroup_product(gens, sub), weight);
    if (sub == 0) break;
    sub = (sub - 1) & subset;
  }
  return out;
}

Witness::Witness(Family family, PauliSum terms, std::pair<MeasurementSetting, MeasurementSetting> settings,
                 bool negated)
    : family_(family), terms_(std::move(terms)), settings_(std::move(settings)), negated_(negated) {
  if (settings_.first.num_qubits() != terms_.num_qubits() ||
      settings_.second.num_qubits() != terms_.num_qubits()) {
    throw DimensionError("witness settings do not match its qubit count");
  }
}

Witness Witness::negated() const { return Witness(family_, terms_.scaled(-1.0), settings_, !negated_); }

bool Witness::two_setting_measurable() const {
  for (const auto& [string, coeff] : terms_.terms()) {
    if (string.is_identity()) continue;
    if (!settings_.first.measures(string) && !settings_.second.measures(string)) return false;
  }
  return true;
}

Witness build_witness(Family family, int n) {
  check_witness_size(n);
  const GeneratorSet gens = generators_for(family, n);
  PauliSum terms(n);
  terms.add(PauliString(n), 3.0);
  for (const auto& spec : projector_specs(family, n)) {
    terms.add(stabilizer_projector(gens, spec.generator_subset), -2.0);
  }
  return Witness(family, std::move(terms), settings_for(family, n));
}

Witness build_ghz_witness(int n) { return build_witness(Family::kGhz, n); }

Witness build_cluster_witness(int n) { return build_witness(Family::kCluster, n); }

double witness_expectation(const Witness& w, const StateVector& s) { return expectation(w.terms(), s); }

double witness_expectation(const Witness& w, const NoisyState& s) { return expectation(w.terms(), s); }

std::string to_string(ThresholdMethod method) {
  return method == ThresholdMethod::kClosedForm ? "closed_form" : "root_find";
}

double closed_form_threshold(Family family, int n) {
  if (n < 2) throw DomainError("thresholds need n >= 2");
  if (family == Family::kGhz) return 1.0 / (3.0 - 4.0 / std::ldexp(1.0, n));
  const double even = std::ldexp(1.0, -(n / 2));
  const double odd = std::ldexp(1.0, -((n + 1) / 2));
  return 1.0 / (4.0 - 2.0 * (even + odd));
}

ThresholdReport noise_threshold(Family family, int n, int root_find_max_n) {
  if (n < 2 || n > 62) throw DomainError("thresholds need 2 <= n <= 62");
  ThresholdReport report;
  report.n = n;
  report.family = family;
  report.p_closed_form = closed_form_threshold(family, n);
  report.p_threshold = report.p_closed_form;
  report.method = ThresholdMethod::kClosedForm;
  // A projector onto the joint +1 space of m independent generators has rank 2^{n-m}.
  const auto specs = projector_specs(family, n);
  report.trace_p1 = std::ldexp(1.0, n - std::popcount(specs[0].generator_subset));
  report.trace_p2 = std::ldexp(1.0, n - std::popcount(specs[1].generator_subset));

  if (n <= root_find_max_n) {
    const Witness w = build_witness(family, n);
    const StateVector target = make_target(family, n, std::max(n, kDefaultMaxQubits));
    auto f = [&](double p) { return witness_expectation(w, white_noise_mix(p, target)); };
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(
        f, 0.0, 1.0, boost::math::tools::eps_tolerance<double>(52), max_iter);
    const double root = 0.5 * (lo + hi);
    report.p_root_find = root;
    if (std::abs(root - report.p_closed_form) > kThresholdAgreement) {
      throw NumericError("closed-form threshold " + std::to_string(report.p_closed_form) +
                         " disagrees with root " + std::to_string(root));
    }
  }
  return report;
}

std::uint64_t settings_count(SettingsMethod method, int n) {
  if (n < 2 || n > 63) throw DomainError("settings_count needs 2 <= n <= 63");
  return method == SettingsMethod::kWitness ? 2 : std::uint64_t{1} << n;
}

std::string detection_label(int n) { return n == 2 ? "entangled" : "genuine multipartite entangled"; }

}  // namespace twoset
