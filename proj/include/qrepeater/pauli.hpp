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

#ifndef QREPEATER_PAULI_HPP
#define QREPEATER_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qrep {

/// Pauli operator in XZ form: sign * prod_q X_q^{x_q} Z_q^{z_q}.
///
/// Qubits are 1-based in every public accessor. A qubit with both bits set
/// holds the real operator XZ (= -iY); to_string() prints it as Y and folds
/// the phase into the printed sign.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n);

  /// Parses strings like "+XZI", "-ZX_", "Y_Y". '_' and 'I' are identity.
  static PauliOperator from_string(std::string_view text);
  /// Single-qubit factor on an n-qubit register, e.g. single(4, 2, 'X').
  static PauliOperator single(std::size_t n, std::size_t qubit, char kind);

  std::size_t num_qubits() const { return x_.size(); }
  int sign() const { return sign_; }
  void set_sign(int s);
  void negate() { sign_ = -sign_; }

  bool x(std::size_t qubit) const;
  bool z(std::size_t qubit) const;
  void set_x(std::size_t qubit, bool v);
  void set_z(std::size_t qubit, bool v);

  const std::vector<uint8_t> &x_bits() const { return x_; }
  const std::vector<uint8_t> &z_bits() const { return z_; }

  bool is_identity() const;  // ignores sign
  std::size_t weight() const;
  bool commutes(const PauliOperator &other) const;
  /// Number of positions where this operator acts as XZ. Odd means the
  /// operator is anti-Hermitian (only arises for products of anticommuting
  /// operators).
  std::size_t y_count() const;

  /// Left-to-right product: (*this) * rhs.
  PauliOperator &operator*=(const PauliOperator &rhs);

  bool operator==(const PauliOperator &other) const;
  bool operator!=(const PauliOperator &other) const { return !(*this == other); }
  bool equal_up_to_sign(const PauliOperator &other) const;

  std::string to_string() const;

 private:
  void check_qubit(std::size_t qubit) const;
  std::vector<uint8_t> x_;
  std::vector<uint8_t> z_;
  int sign_ = 1;
};

PauliOperator operator*(const PauliOperator &a, const PauliOperator &b);

}  // namespace qrep

#endif
