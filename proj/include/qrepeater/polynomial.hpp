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

#ifndef QREPEATER_POLYNOMIAL_HPP
#define QREPEATER_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

namespace qrep {

/// Dense polynomial in (f_u, f_n) with double coefficients; coefficient(i, j)
/// multiplies f_u^i f_n^j. Integer and dyadic coefficients stay exact.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(double constant);  // NOLINT: implicit on purpose, for formula templates
  static BiPoly fu();
  static BiPoly fn();
  static BiPoly monomial(double c, std::size_t i, std::size_t j);

  double coefficient(std::size_t i, std::size_t j) const;
  std::size_t degree_u() const { return c_.empty() ? 0 : c_.size() - 1; }
  std::size_t degree_n() const;
  double evaluate(double u, double n) const;
  /// Largest |coefficient| difference against another polynomial.
  double max_coefficient_difference(const BiPoly &other) const;

  BiPoly &operator+=(const BiPoly &o);
  BiPoly &operator-=(const BiPoly &o);
  BiPoly &operator*=(const BiPoly &o);
  BiPoly operator-() const;

 private:
  friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
  void add_term(double c, std::size_t i, std::size_t j);
  std::vector<std::vector<double>> c_;
};

BiPoly operator+(BiPoly a, const BiPoly &b);
BiPoly operator-(BiPoly a, const BiPoly &b);
BiPoly operator*(const BiPoly &a, const BiPoly &b);

/// x^k for doubles and polynomials alike.
template <typename T>
T ipow(const T &x, unsigned k) {
    T r(1.0);
    T b = x;
    while (k) {
        if (k & 1) {
            r = r * b;
        }
        b = b * b;
        k >>= 1;
    }
    return r;
}

}  // namespace qrep

#endif
