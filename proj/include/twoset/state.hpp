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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "twoset/pauli.hpp"

namespace twoset {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kImagTolerance = 1e-12;

// Dense pure state over 2^n basis states. Basis index b encodes qubit 1 as its
// most significant bit ("qubit1_msb"). Immutable once built; norm is 1.
class StateVector {
 public:
  /// Takes ownership of `amplitudes`; size must be 2^n and the norm 1 within kNormTolerance.
  StateVector(int n, std::vector<Amplitude> amplitudes);

  /// Rescales an arbitrary nonzero vector to unit norm.
  static StateVector normalized(int n, std::vector<Amplitude> amplitudes);

  /// Computational basis state |index>.
  static StateVector basis(int n, std::uint64_t index);

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

  /// Copy with the first nonzero amplitude made real positive.
  StateVector canonical_phase() const;

  /// Indices with |amplitude| > 0, in ascending order.
  std::vector<std::uint64_t> support() const;

 private:
  int n_;
  std::vector<Amplitude> amps_;
};

/// rho(p) = p * 1/2^n + (1 - p) |psi><psi|, kept symbolic.
class NoisyState {
 public:
  /// Throws DomainError unless 0 <= p_noise <= 1.
  NoisyState(double p_noise, StateVector pure);

  double p_noise() const { return p_; }
  const StateVector& pure() const { return pure_; }
  int num_qubits() const { return pure_.num_qubits(); }

 private:
  double p_;
  StateVector pure_;
};

/// (|0...0> + |1...1>)/sqrt(2). Throws DomainError unless 2 <= n <= max_qubits.
StateVector make_ghz(int n, int max_qubits = kDefaultMaxQubits);

/// Linear cluster state: |+>^n followed by CZ on every adjacent pair, so the
/// |0...0> amplitude is real positive.
StateVector make_cluster(int n, int max_qubits = kDefaultMaxQubits);

StateVector make_target(Family family, int n, int max_qubits = kDefaultMaxQubits);

/// Exact P|psi>. Throws DimensionError on size mismatch.
StateVector apply_pauli(const PauliString& p, const StateVector& s);

/// <psi|P|psi> as a complex number, no Hermiticity check.
std::complex<double> expectation_complex(const PauliString& p, const StateVector& s);

/// Real expectation values. Throw NumericError if the imaginary part exceeds
/// kImagTolerance, DimensionError on size mismatch.
double expectation(const PauliString& p, const StateVector& s);
double expectation(const PauliString& p, const NoisyState& s);
double expectation(const PauliSum& o, const StateVector& s);
double expectation(const PauliSum& o, const NoisyState& s);

/// Throws DomainError unless 0 <= p <= 1.
NoisyState white_noise_mix(double p, const StateVector& s);

/// Schmidt coefficients (descending singular values) of `s` across the cut
/// separating the sites in `part_a_sites` (0-based) from the rest.
std::vector<double> schmidt_coefficients(const StateVector& s, std::span<const int> part_a_sites);

/// Max |a_i - b_i|; throws DimensionError if sizes differ.
double max_amplitude_deviation(const StateVector& a, const StateVector& b);

}  // namespace twoset
