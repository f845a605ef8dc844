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

#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twoset/family.hpp"

namespace twoset {

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

// A tensor product of single-qubit Paulis with a global phase in {+1, -1, +i, -i}.
//
// Sites are numbered 0..n-1 internally; site j corresponds to qubit j+1 in the
// usual 1-based notation and to bit (n-1-j) of both Pauli masks and statevector
// basis indices, so qubit 1 is the most significant bit.
//
// Storage is the symplectic form i^e * prod_j X^{x_j} Z^{z_j}, with Y = i X Z.
// Every operator has exactly one such representation, so equality is exact.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  /// Identity on n qubits with phase +1.
  explicit PauliString(int n);

  /// Builds from per-site letters and a visible phase i^phase_exponent.
  static PauliString from_ops(std::span<const Pauli> ops, int phase_exponent = 0);

  /// Parses "+XZI", "-YY", "+iZ", "-iXX" or a bare "XZI" (phase +1). Site 1 is leftmost.
  static PauliString parse(std::string_view text);

  /// Single operator `op` on 0-based `site`, identity elsewhere.
  static PauliString single(int n, int site, Pauli op);

  /// Builds directly from masks in the i^e X^x Z^z form.
  static PauliString from_masks(int n, std::uint64_t x_mask, std::uint64_t z_mask,
                                int xz_exponent = 0);

  int num_qubits() const { return n_; }
  Pauli op(int site) const;
  std::vector<Pauli> ops() const;

  /// Visible phase k such that the operator equals i^k times the letter string.
  int phase_exponent() const;
  std::complex<double> phase() const;

  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int xz_exponent() const { return e_; }

  /// Sites carrying a non-identity letter.
  std::uint64_t support() const { return x_ | z_; }
  int weight() const { return std::popcount(support()); }

  bool is_identity() const { return x_ == 0 && z_ == 0 && e_ == 0; }
  bool is_hermitian() const { return phase_exponent() % 2 == 0; }

  /// Same letters with the visible phase replaced by i^k.
  PauliString with_phase(int k) const;

  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  PauliString(int n, std::uint64_t x, std::uint64_t z, int e) : n_(n), x_(x), z_(z), e_(e & 3) {}

  std::uint64_t bit(int site) const { return std::uint64_t{1} << (n_ - 1 - site); }

  int n_;
  std::uint64_t x_;
  std::uint64_t z_;
  int e_;
};

/// Exact product a*b including phase. Throws DimensionError on size mismatch.
PauliString multiply(const PauliString& a, const PauliString& b);

inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

/// True iff ab = ba, i.e. an even number of anticommuting sites.
bool commutes(const PauliString& a, const PauliString& b);

/// A real linear combination of Hermitian Pauli strings kept in canonical form:
/// every stored string has phase +1 (a -1 phase is folded into its coefficient),
/// duplicates are merged, and terms are ordered by their masks so the identity,
/// when present, comes first.
class PauliSum {
 public:
  explicit PauliSum(int n);

  int num_qubits() const { return n_; }

  /// Adds coeff * p. Throws ContractError if p has phase +-i, DimensionError on size mismatch.
  void add(const PauliString& p, double coeff);
  void add(const PauliSum& other, double scale = 1.0);

  /// Coefficient of the identity string, which equals tr(O) / 2^n.
  double identity_coeff() const;
  double coeff(const PauliString& p) const;

  std::size_t size() const { return terms_.size(); }
  const std::map<PauliString, double>& terms() const { return terms_; }

  PauliSum scaled(double factor) const;

 private:
  int n_;
  std::map<PauliString, double> terms_;
};

/// The n independent commuting generators of a target state's stabilizer group.
struct GeneratorSet {
  int n = 0;
  Family family = Family::kGhz;
  std::vector<PauliString> generators;
};

/// {X...X, Z_{k-1} Z_k for k = 2..n}. Throws DomainError for n < 2.
GeneratorSet ghz_generators(int n);

/// Linear-chain cluster generators Z_{k-1} X_k Z_{k+1}, truncated at the ends.
GeneratorSet cluster_generators(int n);

GeneratorSet generators_for(Family family, int n);

/// Product of the generators selected by `subset` (bit k-1 selects generator k),
/// multiplied in ascending generator order. The empty subset gives the identity.
PauliString subgroup_product(const GeneratorSet& gens, std::uint64_t subset);

}  // namespace twoset

template <>
struct std::hash<twoset::PauliString> {
  std::size_t operator()(const twoset::PauliString& p) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(p.x_mask());
    h ^= std::hash<std::uint64_t>{}(p.z_mask()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ (static_cast<std::size_t>(p.xz_exponent()) << 1) ^ static_cast<std::size_t>(p.num_qubits());
  }
};
