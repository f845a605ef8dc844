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
#include <string>
#include <vector>

#include "twoset/state.hpp"
#include "twoset/witness.hpp"

namespace twoset {

// A split of the qubits into two nonempty parts. Sites are 0-based and sorted;
// the canonical form keeps site 0 (qubit 1) in part A.
struct Bipartition {
  int n = 0;
  std::vector<int> part_a;
  std::vector<int> part_b;

  /// Builds the canonical cut from part A's sites (site 0 is swapped into A if needed).
  static Bipartition from_part_a(int n, std::vector<int> part_a);

  /// Basis-index bit mask of part A (site j is bit n-1-j).
  std::uint64_t mask_a() const;

  /// 1-based rendering, e.g. "{1,3}|{2}".
  std::string str() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// All 2^{n-1} - 1 canonical bipartitions, ordered lexicographically by part A.
/// Throws DomainError unless 2 <= n <= 12.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// |a> on part A tensored with |b> on part B, placed at the cut's sites.
StateVector product_state(const Bipartition& cut, const StateVector& a, const StateVector& b);

inline constexpr double kSeesawTolerance = 1e-10;
inline constexpr int kSeesawMaxIterations = 500;
inline constexpr int kDefaultRestarts = 20;
inline constexpr double kCertifyTolerance = 1e-6;

struct SeesawRun {
  double value = 0.0;
  StateVector state_a;
  StateVector state_b;
  bool converged = false;
  int iterations = 0;
  std::vector<double> history;  // value after every half-step
};

// Alternating minimization of <a x b|W|a x b>: with |b> fixed, the best |a> is
// the lowest eigenvector of the operator on A obtained by contracting W with
// |b><b|, and vice versa. Each half-step is an exact minimization, so the
// value never increases.
SeesawRun seesaw(const Witness& w, const Bipartition& cut, const StateVector& initial_b,
                 double tol = kSeesawTolerance, int max_iterations = kSeesawMaxIterations);

struct CutMinimum {
  Bipartition cut;
  double min_value = 0.0;
  StateVector state_a;
  StateVector state_b;
  bool converged = false;  // the best restart converged
  int restarts = 0;
  int converged_restarts = 0;
};

/// Best see-saw result over `restarts` random starting states. Starting states
/// are normalized complex Gaussian vectors drawn from a Philox stream derived
/// from (seed, cut, restart). Non-convergence is reported, not thrown.
CutMinimum min_over_cut(const Witness& w, const Bipartition& cut, int restarts = kDefaultRestarts,
                        std::uint64_t seed = 0, double tol = kSeesawTolerance);

struct BisepReport {
  Family family = Family::kGhz;
  int n = 0;
  bool negated = false;
  std::vector<CutMinimum> cuts;
  double global_min = 0.0;
  std::size_t argmin_cut = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  bool pass = false;  // global_min >= -kCertifyTolerance
};

// Pure states that are products across one cut are the extreme points of the
// biseparable set and <W> is linear, so minimizing over them for every cut
// bounds <W> over all biseparable states.
BisepReport certify(const Witness& w, int restarts = kDefaultRestarts, std::uint64_t seed = 0,
                    int threads = 1);

}  // namespace twoset
