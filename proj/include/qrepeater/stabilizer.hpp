// Copyright 2026 The qrepeater Authors
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

#ifndef QREPEATER_STABILIZER_HPP
#define QREPEATER_STABILIZER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qrepeater/pauli.hpp"

namespace qrep {

/// Independent, pairwise commuting list of Pauli generators.
class StabilizerSet {
 public:
  StabilizerSet() = default;
  /// Validates length, commutation and independence; throws std::invalid_argument.
  StabilizerSet(std::size_t n_qubits, std::vector<PauliOperator> generators);
  static StabilizerSet from_strings(const std::vector<std::string_view> &gens);

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<PauliOperator> &generators() const { return gens_; }
  const PauliOperator &operator[](std::size_t k) const { return gens_[k]; }

  /// +1 if p is in the group, -1 if -p is, nullopt if neither.
  std::optional<int> membership_sign(const PauliOperator &p) const;
  bool contains(const PauliOperator &p) const;

  /// Same group (signs included) via mutual membership.
  bool same_group(const StabilizerSet &other) const;
  /// Same group once every sign is ignored.
  bool same_group_up_to_signs(const StabilizerSet &other) const;

  /// Reduced row echelon form over columns (x_1..x_n, z_1..z_n).
  StabilizerSet canonical() const;
  /// Same generators with every sign set to +1.
  StabilizerSet unsigned_copy() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> gens_;
};

/// Rank over GF(2) of the symplectic bit rows (x|z).
std::size_t symplectic_rank(const std::vector<PauliOperator> &rows);

/// Row-reduces in place (x columns first, then z) and returns the pivot column
/// of every kept row. Rows reduced to identity are dropped.
std::vector<std::size_t> row_reduce(std::vector<PauliOperator> &rows);

struct MeasurementReduction {
    /// Generators on the unmeasured qubits, renumbered 1..m in increasing
    /// order of the original index.
    StabilizerSet reduced;
    /// Pauli on the remaining qubits. Applying it maps the post-measurement
    /// state onto the +1 eigenstate of reduced.unsigned_copy().
    PauliOperator byproduct;
    /// Original (1-based) index of each remaining qubit.
    std::vector<std::size_t> remaining;
};

/// X-basis measurement of the listed qubits with the given +-1 outcomes,
/// followed by removal of the measured qubits.
/// Throws std::invalid_argument for bad inputs and std::domain_error when an
/// outcome has zero probability.
MeasurementReduction measure_x_and_reduce(const StabilizerSet &s, const std::vector<std::size_t> &measured,
                                          const std::vector<int> &outcomes);

/// Pauli B with B s_j B^dag = t_j for every generator, where the groups of s
/// and target agree up to signs. Solved over GF(2); earliest variables in
/// the order (x_1, z_1, x_2, z_2, ...) are used first and free ones are 0.
PauliOperator solve_byproduct(const StabilizerSet &actual, const StabilizerSet &target);

/// Dense real amplitudes of the unique joint +1 eigenstate (qubit q is bit q-1).
/// Requires a full-rank set on at most 14 qubits.
std::vector<double> statevector_oracle(const StabilizerSet &s);
/// Applies a real Pauli to a dense vector.
std::vector<double> apply_pauli(const PauliOperator &p, const std::vector<double> &state);
double inner_product(const std::vector<double> &a, const std::vector<double> &b);

constexpr std::size_t kMaxOracleQubits = 14;

}  // namespace qrep

#endif
