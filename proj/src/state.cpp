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

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "twoset/errors.hpp"

namespace twoset {

namespace {

constexpr Amplitude kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

double squared_norm(std::span<const Amplitude> amps) {
  long double acc = 0;
  for (const auto& a : amps) acc += static_cast<long double>(std::norm(a));
  return static_cast<double>(acc);
}

void check_state_size(int n, int max_qubits) {
  if (n < 2 || n > max_qubits) {
    throw DomainError("qubit count " + std::to_string(n) + " outside [2, " + std::to_string(max_qubits) +
                      "]");
  }
}

void check_match(int op_qubits, int state_qubits) {
  if (op_qubits != state_qubits) {
    throw DimensionError("operator acts on " + std::to_string(op_qubits) + " qubits, state has " +
                         std::to_string(state_qubits));
  }
}

double real_checked(std::complex<double> v, const char* what) {
  if (std::abs(v.imag()) > kImagTolerance) {
    throw NumericError(std::string(what) + " has imaginary expectation " + std::to_string(v.imag()) +
                       "; operator is not Hermitian");
  }
  return v.real();
}

// Sum over basis states b in `indices` of conj(psi[b ^ x]) * (-1)^{z.b} * psi[b].
template <typename Indices>
std::complex<double> masked_overlap(const PauliString& p, const StateVector& s, const Indices& indices) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  std::complex<double> acc = 0;
  for (std::uint64_t b : indices) {
    const Amplitude term = std::conj(s[b ^ x]) * s[b];
    acc += (std::popcount(z & b) & 1) ? -term : term;
  }
  return kIPowers[p.xz_exponent()] * acc;
}

struct IndexRange {
  std::uint64_t count;
  struct Iter {
    std::uint64_t v;
    std::uint64_t operator*() const { return v; }
    Iter& operator++() {
      ++v;
      return *this;
    }
    bool operator!=(const Iter& o) const { return v != o.v; }
  };
  Iter begin() const { return {0}; }
  Iter end() const { return {count}; }
};

// Mostly-zero states (GHZ, basis states) are evaluated over their support only.
bool prefer_sparse(std::size_t support, std::size_t dimension) { return support * 8 < dimension; }

}  // namespace

StateVector::StateVector(int n, std::vector<Amplitude> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  if (n < 1 || n > 30) throw DimensionError("state qubit count " + std::to_string(n) + " outside [1, 30]");
  if (amps_.size() != (std::size_t{1} << n)) {
    throw DimensionError("expected " + std::to_string(std::size_t{1} << n) + " amplitudes, got " +
                         std::to_string(amps_.size()));
  }
  const double nrm = std::sqrt(squared_norm(amps_));
  if (std::abs(nrm - 1.0) > kNormTolerance) {
    throw NumericError("state norm " + std::to_string(nrm) + " differs from 1");
  }
}

StateVector StateVector::normalized(int n, std::vector<Amplitude> amplitudes) {
  const double nrm = std::sqrt(squared_norm(amplitudes));
  if (!(nrm > 0) || !std::isfinite(nrm)) throw NumericError("cannot normalize a zero or non-finite vector");
  for (auto& a : amplitudes) a /= nrm;
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  if (n < 1 || n > 30) throw DimensionError("state qubit count out of range");
  if (index >> n) throw DimensionError("basis index exceeds 2^n");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

StateVector StateVector::canonical_phase() const {
  auto first = std::find_if(amps_.begin(), amps_.end(), [](const Amplitude& a) { return std::abs(a) > 0; });
  std::vector<Amplitude> out = amps_;
  if (first != amps_.end()) {
    const Amplitude rot = std::conj(*first) / std::abs(*first);
    for (auto& a : out) a *= rot;
  }
  return StateVector(n_, std::move(out));
}

std::vector<std::uint64_t> StateVector::support() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (amps_[b] != Amplitude{0, 0}) out.push_back(b);
  }
  return out;
}

NoisyState::NoisyState(double p_noise, StateVector pure) : p_(p_noise), pure_(std::move(pure)) {
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) {
    throw DomainError("noise fraction " + std::to_string(p_noise) + " outside [0, 1]");
  }
}

StateVector make_ghz(int n, int max_qubits) {
  check_state_size(n, max_qubits);
  std::vector<Amplitude> amps(std::size_t{1} << n);
  amps.front() = M_SQRT1_2;
  amps.back() = M_SQRT1_2;
  return StateVector(n, std::move(amps));
}

StateVector make_cluster(int n, int max_qubits) {
  check_state_size(n, max_qubits);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Amplitude> amps(dim, Amplitude(std::pow(2.0, -0.5 * n), 0.0));
  // CZ between sites j and j+1 flips the sign where both bits are set.
  for (int j = 0; j + 1 < n; ++j) {
    const std::uint64_t pair = (std::uint64_t{1} << (n - 1 - j)) | (std::uint64_t{1} << (n - 2 - j));
    for (std::uint64_t b = 0; b < dim; ++b) {
      if ((b & pair) == pair) amps[b] = -amps[b];
    }
  }
  return StateVector(n, std::move(amps));
}

StateVector make_target(Family family, int n, int max_qubits) {
  return family == Family::kGhz ? make_ghz(n, max_qubits) : make_cluster(n, max_qubits);
}

StateVector apply_pauli(const PauliString& p, const StateVector& s) {
  check_match(p.num_qubits(), s.num_qubits());
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const Amplitude phase = kIPowers[p.xz_exponent()];
  std::vector<Amplitude> out(s.dimension());
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    const Amplitude a = phase * s[b];
    out[b ^ x] = (std::popcount(z & b) & 1) ? -a : a;
  }
  return StateVector(s.num_qubits(), std::move(out));
}

std::complex<double> expectation_complex(const PauliString& p, const StateVector& s) {
  check_match(p.num_qubits(), s.num_qubits());
  return masked_overlap(p, s, IndexRange{s.dimension()});
}

double expectation(const PauliString& p, const StateVector& s) {
  return real_checked(expectation_complex(p, s), "Pauli string");
}

double expectation(const PauliString& p, const NoisyState& s) {
  const double pure = expectation(p, s.pure());
  // tr(P)/2^n is the phase for the identity letters and 0 otherwise.
  const double mixed = p.support() == 0 ? real_checked(p.phase(), "Pauli string") : 0.0;
  return s.p_noise() * mixed + (1.0 - s.p_noise()) * pure;
}

double expectation(const PauliSum& o, const StateVector& s) {
  check_match(o.num_qubits(), s.num_qubits());
  std::complex<double> total = 0;
  const auto support = s.support();
  if (prefer_sparse(support.size(), s.dimension())) {
    for (const auto& [string, coeff] : o.terms()) total += coeff * masked_overlap(string, s, support);
  } else {
    const IndexRange all{s.dimension()};
    for (const auto& [string, coeff] : o.terms()) total += coeff * masked_overlap(string, s, all);
  }
  return real_checked(total, "Pauli sum");
}

double expectation(const PauliSum& o, const NoisyState& s) {
  const double pure = expectation(o, s.pure());
  return s.p_noise() * o.identity_coeff() + (1.0 - s.p_noise()) * pure;
}

NoisyState white_noise_mix(double p, const StateVector& s) { return NoisyState(p, s); }

std::vector<double> schmidt_coefficients(const StateVector& s, std::span<const int> part_a_sites) {
  const int n = s.num_qubits();
  std::uint64_t mask_a = 0;
  for (int site : part_a_sites) {
    if (site < 0 || site >= n) throw DimensionError("cut site out of range");
    mask_a |= std::uint64_t{1} << (n - 1 - site);
  }
  const int size_a = std::popcount(mask_a);
  const int size_b = n - size_a;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << size_a, Eigen::Index{1} << size_b);
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    std::uint64_t ia = 0;
    std::uint64_t ib = 0;
    for (int bit = n - 1; bit >= 0; --bit) {
      const std::uint64_t v = (b >> bit) & 1;
      if ((mask_a >> bit) & 1) {
        ia = (ia << 1) | v;
      } else {
        ib = (ib << 1) | v;
      }
    }
    m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = s[b];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double max_amplitude_deviation(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("state dimensions differ");
  double worst = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace twoset
