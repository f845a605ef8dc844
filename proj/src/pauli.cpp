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

#include "twoset/pauli.hpp"

#include <algorithm>
#include <cctype>

#include "twoset/errors.hpp"

namespace twoset {

std::string to_string(Family family) { return family == Family::kGhz ? "ghz" : "cluster"; }

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ghz") return Family::kGhz;
  if (lower == "cluster") return Family::kCluster;
  throw ParseError("unknown family '" + std::string(text) + "' (expected ghz or cluster)");
}

namespace {

void check_size(int n) {
  if (n < 1 || n > PauliString::kMaxQubits) {
    throw DimensionError("Pauli string size " + std::to_string(n) + " outside [1, 64]");
  }
}

void check_same_size(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Pauli strings act on " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
}

}  // namespace

PauliString::PauliString(int n) : n_(n), x_(0), z_(0), e_(0) { check_size(n); }

PauliString PauliString::from_masks(int n, std::uint64_t x_mask, std::uint64_t z_mask,
                                    int xz_exponent) {
  check_size(n);
  const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((x_mask | z_mask) & ~valid) {
    throw DimensionError("Pauli mask has bits beyond qubit count");
  }
  return PauliString(n, x_mask, z_mask, ((xz_exponent % 4) + 4) % 4);
}

PauliString PauliString::from_ops(std::span<const Pauli> ops, int phase_exponent) {
  const int n = static_cast<int>(ops.size());
  check_size(n);
  PauliString p(n);
  int y_count = 0;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t b = p.bit(j);
    switch (ops[j]) {
      case Pauli::kI: break;
      case Pauli::kX: p.x_ |= b; break;
      case Pauli::kZ: p.z_ |= b; break;
      case Pauli::kY:
        p.x_ |= b;
        p.z_ |= b;
        ++y_count;
        break;
    }
  }
  // Each Y contributes a factor i relative to XZ.
  p.e_ = (((phase_exponent + y_count) % 4) + 4) % 4;
  return p;
}

PauliString PauliString::single(int n, int site, Pauli op) {
  check_size(n);
  if (site < 0 || site >= n) {
    throw DimensionError("site " + std::to_string(site) + " outside [0, " + std::to_string(n) + ")");
  }
  std::vector<Pauli> ops(n, Pauli::kI);
  ops[site] = op;
  return from_ops(ops);
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    phase = text[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase += 1;
      ++pos;
    }
  }
  std::vector<Pauli> ops;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I':
      case '_': ops.push_back(Pauli::kI); break;
      case 'X': ops.push_back(Pauli::kX); break;
      case 'Y': ops.push_back(Pauli::kY); break;
      case 'Z': ops.push_back(Pauli::kZ); break;
      default:
        throw ParseError("invalid character '" + std::string(1, text[pos]) + "' in Pauli string '" +
                         std::string(text) + "'");
    }
  }
  if (ops.empty() || static_cast<int>(ops.size()) > kMaxQubits) {
    throw ParseError("Pauli string '" + std::string(text) + "' must have 1..64 sites");
  }
  return from_ops(ops, phase);
}

Pauli PauliString::op(int site) const {
  if (site < 0 || site >= n_) throw DimensionError("site out of range");
  const bool x = (x_ & bit(site)) != 0;
  const bool z = (z_ & bit(site)) != 0;
  if (x && z) return Pauli::kY;
  if (x) return Pauli::kX;
  if (z) return Pauli::kZ;
  return Pauli::kI;
}

std::vector<Pauli> PauliString::ops() const {
  std::vector<Pauli> out(n_);
  for (int j = 0; j < n_; ++j) out[j] = op(j);
  return out;
}

int PauliString::phase_exponent() const {
  return ((e_ - std::popcount(x_ & z_)) % 4 + 4) % 4;
}

std::complex<double> PauliString::phase() const {
  static constexpr std::complex<double> kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[phase_exponent()];
}

PauliString PauliString::with_phase(int k) const {
  PauliString p = *this;
  p.e_ = ((k + std::popcount(x_ & z_)) % 4 + 4) % 4;
  return p;
}

std::string PauliString::str() const {
  static constexpr const char* kSigns[4] = {"+", "+i", "-", "-i"};
  std::string out = kSigns[phase_exponent()];
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  for (int j = 0; j < n_; ++j) out.push_back(kLetters[static_cast<int>(op(j))]);
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  const int sign = std::popcount(a.z_mask() & b.x_mask()) & 1;
  return PauliString::from_masks(a.num_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(),
                                 a.xz_exponent() + b.xz_exponent() + 2 * sign);
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  const int anti = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
  return anti % 2 == 0;
}

PauliSum::PauliSum(int n) : n_(n) { check_size(n); }

void PauliSum::add(const PauliString& p, double coeff) {
  if (p.num_qubits() != n_) {
    throw DimensionError("term acts on " + std::to_string(p.num_qubits()) + " qubits, sum on " +
                         std::to_string(n_));
  }
  const int k = p.phase_exponent();
  if (k % 2 != 0) throw ContractError("non-Hermitian term " + p.str() + " in a real Pauli sum");
  terms_[p.with_phase(0)] += k == 2 ? -coeff : coeff;
}

void PauliSum::add(const PauliSum& other, double scale) {
  for (const auto& [string, coeff] : other.terms_) add(string, scale * coeff);
}

double PauliSum::identity_coeff() const { return coeff(PauliString(n_)); }

double PauliSum::coeff(const PauliString& p) const {
  const int k = p.phase_exponent();
  if (k % 2 != 0) return 0.0;
  auto it = terms_.find(p.with_phase(0));
  if (it == terms_.end()) return 0.0;
  return k == 2 ? -it->second : it->second;
}

PauliSum PauliSum::scaled(double factor) const {
  PauliSum out = *this;
  for (auto& [string, coeff] : out.terms_) coeff *= factor;
  return out;
}

namespace {

void check_generator_count(int n) {
  if (n < 2) throw DomainError("generator sets need n >= 2, got " + std::to_string(n));
  if (n > PauliString::kMaxQubits) throw DomainError("n exceeds 64 qubits");
}

}  // namespace

GeneratorSet ghz_generators(int n) {
  check_generator_count(n);
  GeneratorSet set{n, Family::kGhz, {}};
  set.generators.reserve(n);
  set.generators.push_back(PauliString::from_ops(std::vector<Pauli>(n, Pauli::kX)));
  for (int k = 1; k < n; ++k) {
    std::vector<Pauli> ops(n, Pauli::kI);
    ops[k - 1] = Pauli::kZ;
    ops[k] = Pauli::kZ;
    set.generators.push_back(PauliString::from_ops(ops));
  }
  return set;
}

GeneratorSet cluster_generators(int n) {
  check_generator_count(n);
  GeneratorSet set{n, Family::kCluster, {}};
  set.generators.reserve(n);
  for (int k = 0; k < n; ++k) {
    std::vector<Pauli> ops(n, Pauli::kI);
    ops[k] = Pauli::kX;
    if (k > 0) ops[k - 1] = Pauli::kZ;
    if (k + 1 < n) ops[k + 1] = Pauli::kZ;
    set.generators.push_back(PauliString::from_ops(ops));
  }
  return set;
}

GeneratorSet generators_for(Family family, int n) {
  return family == Family::kGhz ? ghz_generators(n) : cluster_generators(n);
}

PauliString subgroup_product(const GeneratorSet& gens, std::uint64_t subset) {
  const int count = static_cast<int>(gens.generators.size());
  if (count < 64 && (subset >> count) != 0) {
    throw DomainError("subset selects generators beyond the set size");
  }
  PauliString acc(gens.n);
  for (int k = 0; k < count; ++k) {
    if (subset & (std::uint64_t{1} << k)) acc = multiply(acc, gens.generators[k]);
  }
  return acc;
}

}  // namespace twoset
