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

#include "twoset/state.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "twoset/errors.hpp"
#include "twoset/witness.hpp"

namespace twoset {
namespace {

using testing::dense;
using testing::vec;

PauliString P(const char* text) { return PauliString::parse(text); }

// Reduced density matrix of the sites in `part_a` by explicit partial trace.
Eigen::MatrixXcd reduced_density(const StateVector& s, const std::vector<int>& part_a) {
  const int n = s.num_qubits();
  std::vector<int> part_b;
  for (int j = 0; j < n; ++j) {
    if (std::find(part_a.begin(), part_a.end(), j) == part_a.end()) part_b.push_back(j);
  }
  auto index = [&](std::uint64_t ia, std::uint64_t ib) {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < part_a.size(); ++k) {
      if ((ia >> (part_a.size() - 1 - k)) & 1) idx |= std::uint64_t{1} << (n - 1 - part_a[k]);
    }
    for (std::size_t k = 0; k < part_b.size(); ++k) {
      if ((ib >> (part_b.size() - 1 - k)) & 1) idx |= std::uint64_t{1} << (n - 1 - part_b[k]);
    }
    return idx;
  };
  const std::uint64_t da = std::uint64_t{1} << part_a.size();
  const std::uint64_t db = std::uint64_t{1} << part_b.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da, da);
  for (std::uint64_t i = 0; i < da; ++i) {
    for (std::uint64_t j = 0; j < da; ++j) {
      for (std::uint64_t k = 0; k < db; ++k) rho(i, j) += s[index(i, k)] * std::conj(s[index(j, k)]);
    }
  }
  return rho;
}

std::vector<double> sorted_spectrum(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + rho.rows());
  std::sort(out.rbegin(), out.rend());
  return out;
}

int rank_of(const std::vector<double>& spectrum) {
  return static_cast<int>(std::count_if(spectrum.begin(), spectrum.end(), [](double v) { return v > 1e-10; }));
}

TEST(MakeGhz, Amplitudes) {
  const auto s2 = make_ghz(2);
  EXPECT_NEAR(s2[0].real(), M_SQRT1_2, 1e-15);
  EXPECT_EQ(s2[1], Amplitude(0));
  EXPECT_EQ(s2[2], Amplitude(0));
  EXPECT_NEAR(s2[3].real(), M_SQRT1_2, 1e-15);
  const auto s3 = make_ghz(3);
  EXPECT_EQ(s3.support(), (std::vector<std::uint64_t>{0, 7}));
  EXPECT_NEAR(s3.norm(), 1.0, kNormTolerance);
}

TEST(MakeGhz, DomainErrors) {
  EXPECT_THROW(make_ghz(1), DomainError);
  EXPECT_THROW(make_ghz(21), DomainError);
  EXPECT_THROW(make_ghz(5, 4), DomainError);
  EXPECT_THROW(make_cluster(1), DomainError);
  EXPECT_NO_THROW(make_cluster(4, 4));
}

TEST(MakeCluster, TwoQubits) {
  const auto c = make_cluster(2);
  const double h = 0.5;
  EXPECT_NEAR(std::abs(c[0] - Amplitude(h)), 0, 1e-15);
  EXPECT_NEAR(std::abs(c[1] - Amplitude(h)), 0, 1e-15);
  EXPECT_NEAR(std::abs(c[2] - Amplitude(h)), 0, 1e-15);
  EXPECT_NEAR(std::abs(c[3] - Amplitude(-h)), 0, 1e-15);
  EXPECT_NEAR(expectation(P("XZ"), c), 1.0, 1e-12);
  EXPECT_NEAR(expectation(P("ZX"), c), 1.0, 1e-12);
}

TEST(Stabilizers, TargetsAreFixedByEveryGenerator) {
  for (Family family : {Family::kGhz, Family::kCluster}) {
    for (int n = 2; n <= 12; ++n) {
      const auto s = make_target(family, n);
      for (const auto& g : generators_for(family, n).generators) {
        EXPECT_LT(max_amplitude_deviation(apply_pauli(g, s), s), 1e-12) << g.str();
      }
    }
  }
}

TEST(MakeCluster, GlobalPhaseConvention) {
  for (int n = 2; n <= 8; ++n) {
    const auto c = make_cluster(n);
    EXPECT_GT(c[0].real(), 0);
    EXPECT_EQ(c[0].imag(), 0);
    EXPECT_LT(max_amplitude_deviation(c.canonical_phase(), c), 1e-15);
  }
}

TEST(MakeCluster, SchmidtRanksOfFourQubits) {
  const auto c = make_cluster(4);
  const auto cut1 = sorted_spectrum(reduced_density(c, {0}));
  const auto cut12 = sorted_spectrum(reduced_density(c, {0, 1}));
  EXPECT_EQ(rank_of(cut1), 2);
  EXPECT_EQ(rank_of(cut12), 2);
  const int a1[] = {0};
  const int a12[] = {0, 1};
  const auto lib1 = schmidt_coefficients(c, a1);
  const auto lib12 = schmidt_coefficients(c, a12);
  for (std::size_t k = 0; k < lib1.size(); ++k) EXPECT_NEAR(lib1[k] * lib1[k], cut1[k], 1e-12);
  for (std::size_t k = 0; k < lib12.size(); ++k) EXPECT_NEAR(lib12[k] * lib12[k], cut12[k], 1e-12);
}

// Every common +1 eigenvector of the generators is parallel to make_cluster.
TEST(MakeCluster, UniqueJointEigenvector) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 8; ++n) {
    const auto gens = cluster_generators(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& g : gens.generators) proj = proj * (Eigen::MatrixXcd::Identity(dim, dim) + dense(g)) / 2.0;
    const Eigen::VectorXcd target = vec(make_cluster(n));
    for (int trial = 0; trial < 50; ++trial) {
      const Eigen::VectorXcd v = proj * vec(testing::random_state(n, rng));
      ASSERT_GT(v.norm(), 1e-8);
      EXPECT_NEAR(std::abs(target.dot(v)) / v.norm(), 1.0, 1e-10);
    }
  }
}

TEST(ApplyPauli, Examples) {
  const auto zero = StateVector::basis(1, 0);
  const auto one = StateVector::basis(1, 1);
  EXPECT_LT(max_amplitude_deviation(apply_pauli(P("X"), zero), one), 1e-15);
  const auto bell = make_ghz(2);
  EXPECT_LT(max_amplitude_deviation(apply_pauli(P("ZZ"), bell), bell), 1e-15);
  const auto ghz3 = make_ghz(3);
  EXPECT_LT(max_amplitude_deviation(apply_pauli(P("XXX"), ghz3), ghz3), 1e-15);
  EXPECT_THROW(apply_pauli(P("XX"), ghz3), DimensionError);
}

TEST(ApplyPauli, MatchesDenseAndPreservesNorm) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 10;
    const auto p = testing::random_pauli(n, rng);
    const auto s = testing::random_state(n, rng);
    const auto out = apply_pauli(p, s);
    ASSERT_NEAR(out.norm(), 1.0, 1e-12);
    if (n <= 5) {
      ASSERT_LT((vec(out) - dense(p) * vec(s)).norm(), 1e-12);
    }
  }
}

TEST(Expectation, Examples) {
  const auto ghz3 = make_ghz(3);
  EXPECT_NEAR(expectation(ghz_generators(3).generators[0], ghz3), 1.0, 1e-15);
  const auto noisy = white_noise_mix(0.3, make_cluster(4));
  EXPECT_DOUBLE_EQ(expectation(PauliString(4), noisy), 1.0);
  EXPECT_NEAR(expectation(P("XXX"), white_noise_mix(0.5, ghz3)), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(expectation(P("-III"), white_noise_mix(0.7, ghz3)), -1.0);
}

TEST(Expectation, Errors) {
  EXPECT_THROW(expectation(P("+iZ"), StateVector::basis(1, 0)), NumericError);
  EXPECT_THROW(expectation(P("ZZ"), make_ghz(3)), DimensionError);
  PauliSum sum(2);
  sum.add(P("XX"), 1.0);
  EXPECT_THROW(expectation(sum, make_ghz(3)), DimensionError);
}

TEST(WhiteNoise, Endpoints) {
  std::mt19937_64 rng(9);
  const auto s = testing::random_state(4, rng);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_pauli(4, rng).with_phase(0);
    EXPECT_EQ(expectation(p, white_noise_mix(0.0, s)), expectation(p, s));
    if (!p.is_identity()) {
      EXPECT_EQ(expectation(p, white_noise_mix(1.0, s)), 0.0);
    }
  }
  EXPECT_THROW(white_noise_mix(-0.01, s), DomainError);
  EXPECT_THROW(white_noise_mix(1.01, s), DomainError);
  EXPECT_THROW(white_noise_mix(std::nan(""), s), DomainError);
}

TEST(WhiteNoise, GhzThreeAtTabulatedThreshold) {
  EXPECT_NEAR(witness_expectation(build_ghz_witness(3), white_noise_mix(0.4, make_ghz(3))), 0.0, 1e-12);
}

TEST(WhiteNoise, AffineAndMatchesDensityMatrix) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 6; ++n) {
    const auto s = testing::random_state(n, rng);
    PauliSum o(n);
    o.add(PauliString(n), 0.7);
    for (int t = 0; t < 6; ++t) o.add(testing::random_pauli(n, rng).with_phase(2 * (t % 2)), 0.3 * (t + 1));
    const Eigen::MatrixXcd m = dense(o);
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double oracle = (testing::density(s, p) * m).trace().real();
      EXPECT_NEAR(expectation(o, white_noise_mix(p, s)), oracle, 1e-12) << "n=" << n << " p=" << p;
    }
  }
}

TEST(StateVector, Validation) {
  EXPECT_THROW(StateVector(2, std::vector<Amplitude>(3)), DimensionError);
  EXPECT_THROW(StateVector(1, {Amplitude(1), Amplitude(1)}), NumericError);
  EXPECT_THROW(StateVector::normalized(1, {Amplitude(0), Amplitude(0)}), NumericError);
  const auto s = StateVector::normalized(1, {Amplitude(0, 2), Amplitude(0, 2)});
  const auto c = s.canonical_phase();
  EXPECT_NEAR(c[0].real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(c[0].imag(), 0, 1e-15);
}

// C_3 and GHZ_3 (and C_4 and (|0000>+|0011>+|1100>-|1111>)/2) are related by
// local unitaries, so every bipartition has the same Schmidt spectrum.
TEST(LocalEquivalence, SchmidtSpectraMatch) {
  auto compare = [](const StateVector& a, const StateVector& b) {
    const int n = a.num_qubits();
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> part{n - 1};
      for (int j = 0; j < n - 1; ++j) {
        if (mask & (1u << j)) part.push_back(j);
      }
      const auto sa = schmidt_coefficients(a, part);
      const auto sb = schmidt_coefficients(b, part);
      ASSERT_EQ(sa.size(), sb.size());
      for (std::size_t k = 0; k < sa.size(); ++k) EXPECT_NEAR(sa[k], sb[k], 1e-12);
    }
  };
  compare(make_cluster(3), make_ghz(3));
  std::vector<Amplitude> phi(16);
  phi[0b0000] = 0.5;
  phi[0b0011] = 0.5;
  phi[0b1100] = 0.5;
  phi[0b1111] = -0.5;
  compare(make_cluster(4), StateVector(4, phi));
}

}  // namespace
}  // namespace twoset
