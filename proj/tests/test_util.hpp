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

// Dense-matrix oracles for the tests. These build operators by explicit
// Kronecker products of 2x2 matrices and never touch the bitmask code paths.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "twoset/pauli.hpp"
#include "twoset/state.hpp"

namespace twoset::testing {

inline Eigen::Matrix2cd letter_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::kI: m << 1, 0, 0, 1; break;
    case Pauli::kX: m << 0, 1, 1, 0; break;
    case Pauli::kY: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::kZ: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// Qubit 1 is the leftmost Kronecker factor, i.e. the most significant index bit.
inline Eigen::MatrixXcd dense(const PauliString& p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int j = 0; j < p.num_qubits(); ++j) m = kron(m, letter_matrix(p.op(j)));
  return p.phase() * m;
}

inline Eigen::MatrixXcd dense(const PauliSum& o) {
  const Eigen::Index dim = Eigen::Index{1} << o.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [string, coeff] : o.terms()) m += coeff * dense(string);
  return m;
}

inline Eigen::VectorXcd vec(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

/// rho = p 1/2^n + (1-p)|psi><psi| as a dense matrix.
inline Eigen::MatrixXcd density(const StateVector& s, double p) {
  const Eigen::VectorXcd v = vec(s);
  const auto dim = v.size();
  return p * Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim) + (1.0 - p) * v * v.adjoint();
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {g(rng), g(rng)};
  return StateVector::normalized(n, std::move(amps));
}

inline PauliString random_pauli(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Pauli> ops(n);
  for (auto& op : ops) op = static_cast<Pauli>(letter(rng));
  return PauliString::from_ops(ops, letter(rng));
}

// W = 3 - 2 (P1 + P2) with each projector formed as a product of (1 + S_k)/2.
inline Eigen::MatrixXcd dense_witness(Family family, int n) {
  const auto gens = generators_for(family, n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  auto projector = [&](auto selected) {
    Eigen::MatrixXcd m = id;
    for (int k = 1; k <= n; ++k) {
      if (selected(k)) m = m * (id + dense(gens.generators[k - 1])) / 2.0;
    }
    return m;
  };
  if (family == Family::kGhz) {
    return 3.0 * id - 2.0 * (projector([](int k) { return k == 1; }) + projector([](int k) { return k >= 2; }));
  }
  return 3.0 * id -
         2.0 * (projector([](int k) { return k % 2 == 0; }) + projector([](int k) { return k % 2 == 1; }));
}

}  // namespace twoset::testing
