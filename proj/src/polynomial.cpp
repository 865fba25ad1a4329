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

#include "qrepeater/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace qrep {

BiPoly::BiPoly(double constant) {
    if (constant != 0.0) {
        c_ = {{constant}};
    }
}

BiPoly BiPoly::fu() { return monomial(1.0, 1, 0); }
BiPoly BiPoly::fn() { return monomial(1.0, 0, 1); }

BiPoly BiPoly::monomial(double c, std::size_t i, std::size_t j) {
    BiPoly p;
    p.add_term(c, i, j);
    return p;
}

void BiPoly::add_term(double c, std::size_t i, std::size_t j) {
    if (c == 0.0) {
        return;
    }
    if (c_.size() <= i) {
        c_.resize(i + 1);
    }
    if (c_[i].size() <= j) {
        c_[i].resize(j + 1, 0.0);
    }
    c_[i][j] += c;
}

double BiPoly::coefficient(std::size_t i, std::size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) {
        return 0.0;
    }
    return c_[i][j];
}

std::size_t BiPoly::degree_n() const {
    std::size_t d = 0;
    for (const auto &row : c_) {
        if (!row.empty()) {
            d = std::max(d, row.size() - 1);
        }
    }
    return d;
}

double BiPoly::evaluate(double u, double n) const {
    // Horner in both variables
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        double inner = 0.0;
        for (std::size_t j = c_[i].size(); j-- > 0;) {
            inner = inner * n + c_[i][j];
        }
        acc = acc * u + inner;
    }
    return acc;
}

double BiPoly::max_coefficient_difference(const BiPoly &other) const {
    double worst = 0.0;
    std::size_t du = std::max(c_.size(), other.c_.size());
    std::size_t dn = std::max(degree_n(), other.degree_n()) + 1;
    for (std::size_t i = 0; i < du; i++) {
        for (std::size_t j = 0; j < dn; j++) {
            worst = std::max(worst, std::fabs(coefficient(i, j) - other.coefficient(i, j)));
        }
    }
    return worst;
}

BiPoly &BiPoly::operator+=(const BiPoly &o) {
    for (std::size_t i = 0; i < o.c_.size(); i++) {
        for (std::size_t j = 0; j < o.c_[i].size(); j++) {
            add_term(o.c_[i][j], i, j);
        }
    }
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto &row : r.c_) {
        for (auto &v : row) {
            v = -v;
        }
    }
    return r;
}

BiPoly &BiPoly::operator-=(const BiPoly &o) { return *this += -o; }

BiPoly &BiPoly::operator*=(const BiPoly &o) {
    *this = *this * o;
    return *this;
}

BiPoly operator+(BiPoly a, const BiPoly &b) {
    a += b;
    return a;
}

BiPoly operator-(BiPoly a, const BiPoly &b) {
    a -= b;
    return a;
}

BiPoly operator*(const BiPoly &a, const BiPoly &b) {
    BiPoly r;
    if (a.c_.empty() || b.c_.empty()) {
        return r;
    }
    std::size_t dn = a.degree_n() + b.degree_n() + 1;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, std::vector<double>(dn, 0.0));
    for (std::size_t i = 0; i < a.c_.size(); i++) {
        for (std::size_t j = 0; j < a.c_[i].size(); j++) {
            double ca = a.c_[i][j];
            if (ca == 0.0) {
                continue;
            }
            for (std::size_t k = 0; k < b.c_.size(); k++) {
                for (std::size_t l = 0; l < b.c_[k].size(); l++) {
                    r.c_[i + k][j + l] += ca * b.c_[k][l];
                }
            }
        }
    }
    return r;
}

}  // namespace qrep
