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

#include "twoset/bisep.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "twoset/errors.hpp"

namespace twoset {
namespace {

TEST(Bipartition, Counts) {
  EXPECT_EQ(enumerate_bipartitions(2).size(), 1u);
  EXPECT_EQ(enumerate_bipartitions(3).size(), 3u);
  EXPECT_EQ(enumerate_bipartitions(4).size(), 7u);
  EXPECT_EQ(enumerate_bipartitions(8).size(), 127u);
  EXPECT_THROW(enumerate_bipartitions(1), DomainError);
  EXPECT_THROW(enumerate_bipartitions(13), DomainError);
}

TEST(Bipartition, OrderAndRendering) {
  const auto cuts = enumerate_bipartitions(3);
  std::vector<std::string> names;
  for (const auto& c : cuts) names.push_back(c.str());
  EXPECT_EQ(names, (std::vector<std::string>{"{1}|{2,3}", "{1,2}|{3}", "{1,3}|{2}"}));
  for (const auto& c : enumerate_bipartitions(5)) {
    EXPECT_EQ(c.part_a.front(), 0);
    EXPECT_EQ(c.part_a.size() + c.part_b.size(), 5u);
  }
}

TEST(Bipartition, Canonicalization) {
  const auto c = Bipartition::from_part_a(3, {1});
  EXPECT_EQ(c.part_a, (std::vector<int>{0, 2}));
  EXPECT_EQ(c.part_b, (std::vector<int>{1}));
  EXPECT_EQ(c.mask_a(), 0b101u);
  EXPECT_THROW(Bipartition::from_part_a(3, {0, 1, 2}), DomainError);
  EXPECT_THROW(Bipartition::from_part_a(3, {3}), DomainError);
}

TEST(ProductState, MatchesKroneckerProduct) {
  std::mt19937_64 rng(3);
  const auto a = testing::random_state(1, rng);
  const auto b = testing::random_state(2, rng);
  // A = {1}, B = {2,3}: plain Kronecker product in qubit-1-major order.
  const auto s = product_state(Bipartition::from_part_a(3, {0}), a, b);
  const Eigen::VectorXcd k = testing::kron(testing::vec(a), testing::vec(b));
  EXPECT_LT((testing::vec(s) - k).norm(), 1e-14);
  // A = {1,3}, B = {2}: amplitude at bits (q1 q2 q3) is a[q1 q3] * b[q2].
  const auto a2 = testing::random_state(2, rng);
  const auto b1 = testing::random_state(1, rng);
  const auto t = product_state(Bipartition::from_part_a(3, {0, 2}), a2, b1);
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (int q3 = 0; q3 < 2; ++q3)
        EXPECT_LT(std::abs(t[q1 * 4 + q2 * 2 + q3] - a2[q1 * 2 + q3] * b1[q2]), 1e-15);
}

TEST(Seesaw, MonotoneAndReproducible) {
  const auto w = build_cluster_witness(4);
  std::mt19937_64 rng(11);
  for (const auto& cut : enumerate_bipartitions(4)) {
    const auto b0 = testing::random_state(static_cast<int>(cut.part_b.size()), rng);
    const auto run = seesaw(w, cut, b0);
    for (std::size_t i = 1; i < run.history.size(); ++i) EXPECT_LE(run.history[i], run.history[i - 1] + 1e-12);
    EXPECT_TRUE(run.converged);
    const auto psi = product_state(cut, run.state_a, run.state_b);
    EXPECT_NEAR(witness_expectation(w, psi), run.value, 1e-9);
  }
}

TEST(Seesaw, BellWitnessMinimumIsZero) {
  const auto m = min_over_cut(build_ghz_witness(2), enumerate_bipartitions(2)[0], 20, 7);
  EXPECT_NEAR(m.min_value, 0.0, 1e-7);
  EXPECT_TRUE(m.converged);
}

TEST(Seesaw, GhzThreeMinimaAreZero) {
  const auto w = build_ghz_witness(3);
  for (const auto& cut : enumerate_bipartitions(3)) {
    const auto m = min_over_cut(w, cut, 20, 1);
    EXPECT_NEAR(m.min_value, 0.0, 1e-7) << cut.str();
    EXPECT_NEAR(witness_expectation(w, product_state(cut, m.state_a, m.state_b)), m.min_value, 1e-9);
  }
}

TEST(Seesaw, StableUnderMoreRestarts) {
  const auto w = build_cluster_witness(4);
  for (const auto& cut : enumerate_bipartitions(4)) {
    const double m20 = min_over_cut(w, cut, 20, 3).min_value;
    const double m40 = min_over_cut(w, cut, 40, 3).min_value;
    EXPECT_NEAR(m20, m40, 1e-6) << cut.str();
  }
}

// Random product states never beat the see-saw minimum.
TEST(Seesaw, RandomProductStatesAreAboveMinimum) {
  std::mt19937_64 rng(21);
  for (Family f : {Family::kGhz, Family::kCluster}) {
    const auto w = build_witness(f, 4);
    for (const auto& cut : enumerate_bipartitions(4)) {
      const double best = min_over_cut(w, cut, 20, 0).min_value;
      for (int t = 0; t < 50; ++t) {
        const auto a = testing::random_state(static_cast<int>(cut.part_a.size()), rng);
        const auto b = testing::random_state(static_cast<int>(cut.part_b.size()), rng);
        EXPECT_GE(witness_expectation(w, product_state(cut, a, b)), best - 1e-9);
      }
    }
  }
}

TEST(Certify, PassesForBothFamilies) {
  for (Family f : {Family::kGhz, Family::kCluster}) {
    for (int n = 2; n <= 4; ++n) {
      const auto r = certify(build_witness(f, n), 20, 1);
      EXPECT_TRUE(r.pass) << to_string(f) << n;
      EXPECT_GE(r.global_min, -1e-6);
      EXPECT_LE(r.global_min, 1e-6);
      EXPECT_EQ(r.cuts.size(), enumerate_bipartitions(n).size());
      for (const auto& c : r.cuts) EXPECT_GE(c.min_value, -1.0 - 1e-9);
    }
  }
}

TEST(Certify, NegatedWitnessFails) {
  const auto r = certify(build_ghz_witness(3).negated(), 20, 1);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.negated);
  EXPECT_LT(r.global_min, -1.0);
}

TEST(Certify, DeterministicAcrossThreadCounts) {
  const auto w = build_cluster_witness(4);
  const auto r1 = certify(w, 10, 9, 1);
  const auto r2 = certify(w, 10, 9, 3);
  ASSERT_EQ(r1.cuts.size(), r2.cuts.size());
  for (std::size_t i = 0; i < r1.cuts.size(); ++i) EXPECT_EQ(r1.cuts[i].min_value, r2.cuts[i].min_value);
  EXPECT_EQ(r1.argmin_cut, r2.argmin_cut);
}

}  // namespace
}  // namespace twoset
