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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <sstream>

#include "twoset/errors.hpp"
#include "twoset/rng.hpp"

namespace twoset {

namespace {

constexpr Amplitude kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
constexpr double kDegeneracyTolerance = 1e-10;

// W = sum_t c_t P_t^A (x) P_t^B, grouped by the A-side string.
struct SplitTerm {
  PauliString a;
  PauliString b;
  double coeff;
};

PauliString restrict_to(const PauliString& p, const std::vector<int>& sites) {
  std::vector<Pauli> ops;
  ops.reserve(sites.size());
  for (int s : sites) ops.push_back(p.op(s));
  return PauliString::from_ops(ops);
}

std::vector<SplitTerm> split_terms(const Witness& w, const std::vector<int>& first,
                                   const std::vector<int>& second) {
  std::vector<SplitTerm> out;
  for (const auto& [string, coeff] : w.terms().terms()) {
    out.push_back({restrict_to(string, first), restrict_to(string, second), coeff});
  }
  return out;
}

// Dense operator on the free part, sum_t c_t <fixed|P_t^fixed|fixed> P_t^free.
Eigen::MatrixXcd contracted_operator(const std::vector<SplitTerm>& terms, const StateVector& fixed) {
  std::map<PauliString, double> weights;
  std::map<PauliString, double> fixed_values;
  for (const auto& t : terms) {
    auto [it, inserted] = fixed_values.try_emplace(t.b, 0.0);
    if (inserted) it->second = expectation_complex(t.b, fixed).real();
    weights[t.a] += t.coeff * it->second;
  }
  const int n_free = terms.front().a.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n_free;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, weight] : weights) {
    if (weight == 0.0) continue;
    const Amplitude phase = kIPowers[p.xz_exponent()] * weight;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dim); ++i) {
      const Amplitude v = (std::popcount(p.z_mask() & i) & 1) ? -phase : phase;
      h(static_cast<Eigen::Index>(i ^ p.x_mask()), static_cast<Eigen::Index>(i)) += v;
    }
  }
  return h;
}

StateVector to_state(int n, const Eigen::VectorXcd& v) {
  std::vector<Amplitude> amps(v.data(), v.data() + v.size());
  return StateVector::normalized(n, std::move(amps)).canonical_phase();
}

bool lex_less(const StateVector& a, const StateVector& b) {
  constexpr double kEps = 1e-12;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > kEps) return a[i].real() < b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > kEps) return a[i].imag() < b[i].imag();
  }
  return false;
}

struct EigenMin {
  double value;
  StateVector vector;
};

EigenMin lowest_eigenvector(const Eigen::MatrixXcd& h, int n) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
  const auto& values = solver.eigenvalues();
  const double lowest = values(0);
  StateVector best = to_state(n, solver.eigenvectors().col(0));
  for (Eigen::Index k = 1; k < values.size() && values(k) - lowest < kDegeneracyTolerance; ++k) {
    StateVector candidate = to_state(n, solver.eigenvectors().col(k));
    if (lex_less(candidate, best)) best = std::move(candidate);
  }
  return {lowest, std::move(best)};
}

void check_cut(const Witness& w, const Bipartition& cut) {
  if (cut.n != w.num_qubits()) throw DimensionError("cut and witness sizes differ");
  if (cut.n > 12) throw DomainError("biseparability search limited to n <= 12");
}

StateVector random_state(int n, std::uint64_t seed, std::uint64_t stream) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Amplitude> amps(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    // Box-Muller: two uniforms give one complex Gaussian.
    const double u1 = 1.0 - Philox4x32::uniform(seed, stream, 2 * i);
    const double u2 = Philox4x32::uniform(seed, stream, 2 * i + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    amps[i] = std::polar(r, 2.0 * M_PI * u2);
  }
  return StateVector::normalized(n, std::move(amps));
}

}  // namespace

Bipartition Bipartition::from_part_a(int n, std::vector<int> part_a) {
  if (n < 2 || n > 64) throw DomainError("bipartitions need 2 <= n <= 64");
  std::sort(part_a.begin(), part_a.end());
  part_a.erase(std::unique(part_a.begin(), part_a.end()), part_a.end());
  if (part_a.empty() || static_cast<int>(part_a.size()) >= n || part_a.front() < 0 || part_a.back() >= n) {
    throw DomainError("part A must be a nonempty proper subset of the sites");
  }
  std::vector<int> part_b;
  for (int s = 0; s < n; ++s) {
    if (!std::binary_search(part_a.begin(), part_a.end(), s)) part_b.push_back(s);
  }
  if (part_a.front() != 0) std::swap(part_a, part_b);
  return Bipartition{n, std::move(part_a), std::move(part_b)};
}

std::uint64_t Bipartition::mask_a() const {
  std::uint64_t mask = 0;
  for (int s : part_a) mask |= std::uint64_t{1} << (n - 1 - s);
  return mask;
}

std::string Bipartition::str() const {
  std::ostringstream os;
  auto emit = [&os](const std::vector<int>& part) {
    os << '{';
    for (std::size_t i = 0; i < part.size(); ++i) os << (i ? "," : "") << part[i] + 1;
    os << '}';
  };
  emit(part_a);
  os << '|';
  emit(part_b);
  return os.str();
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 2 || n > 12) throw DomainError("enumerate_bipartitions needs 2 <= n <= 12");
  std::vector<Bipartition> out;
  const std::uint32_t rest = (1u << (n - 1)) - 1;  // sites 1..n-1
  for (std::uint32_t t = 0; t < rest; ++t) {
    std::vector<int> part_a{0};
    for (int s = 1; s < n; ++s) {
      if (t & (1u << (s - 1))) part_a.push_back(s);
    }
    out.push_back(Bipartition::from_part_a(n, std::move(part_a)));
  }
  std::sort(out.begin(), out.end(), [](const Bipartition& a, const Bipartition& b) { return a.part_a < b.part_a; });
  return out;
}

StateVector product_state(const Bipartition& cut, const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != static_cast<int>(cut.part_a.size()) ||
      b.num_qubits() != static_cast<int>(cut.part_b.size())) {
    throw DimensionError("part states do not match the cut");
  }
  const int n = cut.n;
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    std::uint64_t ia = 0;
    std::uint64_t ib = 0;
    for (int s : cut.part_a) ia = (ia << 1) | ((idx >> (n - 1 - s)) & 1);
    for (int s : cut.part_b) ib = (ib << 1) | ((idx >> (n - 1 - s)) & 1);
    amps[idx] = a[ia] * b[ib];
  }
  return StateVector::normalized(n, std::move(amps));
}

SeesawRun seesaw(const Witness& w, const Bipartition& cut, const StateVector& initial_b, double tol,
                 int max_iterations) {
  check_cut(w, cut);
  const int size_a = static_cast<int>(cut.part_a.size());
  const int size_b = static_cast<int>(cut.part_b.size());
  if (initial_b.num_qubits() != size_b) throw DimensionError("initial state does not match part B");
  const auto a_terms = split_terms(w, cut.part_a, cut.part_b);
  const auto b_terms = split_terms(w, cut.part_b, cut.part_a);

  EigenMin step_a = lowest_eigenvector(contracted_operator(a_terms, initial_b), size_a);
  EigenMin step_b = lowest_eigenvector(contracted_operator(b_terms, step_a.vector), size_b);
  SeesawRun run{step_b.value, step_a.vector, step_b.vector, false, 1, {step_a.value, step_b.value}};
  double previous = step_a.value;
  while (run.iterations < max_iterations) {
    if (std::abs(previous - run.value) < tol) {
      run.converged = true;
      break;
    }
    previous = run.value;
    step_a = lowest_eigenvector(contracted_operator(a_terms, run.state_b), size_a);
    step_b = lowest_eigenvector(contracted_operator(b_terms, step_a.vector), size_b);
    run.history.push_back(step_a.value);
    run.history.push_back(step_b.value);
    run.state_a = step_a.vector;
    run.state_b = step_b.vector;
    run.value = step_b.value;
    ++run.iterations;
  }
  if (!run.converged && std::abs(previous - run.value) < tol) run.converged = true;
  return run;
}

CutMinimum min_over_cut(const Witness& w, const Bipartition& cut, int restarts, std::uint64_t seed, double tol) {
  check_cut(w, cut);
  if (restarts < 1) throw DomainError("need at least one restart");
  const int size_b = static_cast<int>(cut.part_b.size());
  std::optional<SeesawRun> best;
  int converged = 0;
  for (int r = 0; r < restarts; ++r) {
    const std::uint64_t stream = (cut.mask_a() << 20) | static_cast<std::uint64_t>(r);
    SeesawRun run = seesaw(w, cut, random_state(size_b, seed, stream), tol);
    if (run.converged) ++converged;
    if (!best || run.value < best->value) best = std::move(run);
  }
  return CutMinimum{cut, best->value, best->state_a, best->state_b, best->converged, restarts, converged};
}

BisepReport certify(const Witness& w, int restarts, std::uint64_t seed, int threads) {
  const int n = w.num_qubits();
  if (n > 12) throw DomainError("certify limited to n <= 12");
  const auto cuts = enumerate_bipartitions(n);
  BisepReport report;
  report.family = w.family();
  report.n = n;
  report.negated = w.is_negated();
  report.restarts = restarts;
  report.seed = seed;

  const std::size_t workers = static_cast<std::size_t>(std::max(threads, 1));
  for (std::size_t first = 0; first < cuts.size(); first += workers) {
    std::vector<std::future<CutMinimum>> pending;
    const std::size_t last = std::min(cuts.size(), first + workers);
    for (std::size_t i = first + 1; i < last; ++i) {
      pending.push_back(std::async(std::launch::async, [&, i] { return min_over_cut(w, cuts[i], restarts, seed); }));
    }
    report.cuts.push_back(min_over_cut(w, cuts[first], restarts, seed));
    for (auto& f : pending) report.cuts.push_back(f.get());
  }

  report.argmin_cut = 0;
  for (std::size_t i = 1; i < report.cuts.size(); ++i) {
    if (report.cuts[i].min_value < report.cuts[report.argmin_cut].min_value) report.argmin_cut = i;
  }
  report.global_min = report.cuts[report.argmin_cut].min_value;
  report.pass = report.global_min >= -kCertifyTolerance;
  return report;
}

}  // namespace twoset
