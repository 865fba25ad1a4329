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

#ifndef QREPEATER_CSS_CODE_HPP
#define QREPEATER_CSS_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrepeater/pauli.hpp"

namespace qrep {

/// Bit i of a word is physical position i+1.
using Word = uint64_t;
constexpr std::size_t kMaxCodeLength = 64;

/// Binary linear code given by its parity-check rows.
class ClassicalCode {
 public:
  ClassicalCode() = default;
  ClassicalCode(std::size_t n, std::vector<Word> parity_rows);

  std::size_t n() const { return n_; }
  const std::vector<Word> &parity_check() const { return rows_; }
  std::vector<std::vector<uint8_t>> parity_check_matrix() const;
  bool is_codeword(Word w) const;
  Word syndrome(Word w) const;
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Word> &basis() const { return basis_; }
  /// Every codeword, in increasing integer order of its word.
  const std::vector<Word> &codewords() const { return codewords_; }

 private:
  std::size_t n_ = 0;
  std::vector<Word> rows_;
  std::vector<Word> basis_;
  std::vector<Word> codewords_;
};

struct CssCode {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PauliOperator> x_stabilizers;
    std::vector<PauliOperator> z_stabilizers;
    std::vector<PauliOperator> logical_x;
    std::vector<PauliOperator> logical_z;
    std::size_t d = 0;

    /// CSS form, commutation, independence, k count and logical pairing.
    /// Throws std::invalid_argument with the first violated condition.
    void validate() const;
};

CssCode steane_code();
/// [[23,1,7]] from the cyclic [23,12,7] Golay code.
CssCode golay_code();

/// Text format: "name NAME", "d D", "S <pauli>", "LX <pauli>", "LZ <pauli>";
/// '#' comments. k is inferred.
CssCode parse_css_code(std::istream &in);
CssCode read_css_code_file(const std::string &path);
std::string format_css_code(const CssCode &c);

/// Rows of the X-sector with X -> 1 and identity -> 0.
ClassicalCode parity_check_from_stabilizers(const CssCode &c);
/// Word with the support of logical X number `index`.
Word logical_x_support(const CssCode &c, std::size_t index = 0);

struct TransversalReport {
    bool cx_valid = false;
    bool h_valid = false;
    bool cz_valid = false;
};
TransversalReport transversal_validity(const CssCode &c);

/// Flip bits and the "?" mask of one block.
struct ErrorPattern {
    std::vector<uint8_t> flips;
    std::vector<uint8_t> erasures;
    std::size_t loss_count() const;
};

Word to_word(const std::vector<uint8_t> &bits);
std::vector<uint8_t> from_word(Word w, std::size_t n);

struct AbortPolicy {
    enum class Kind { max_losses, custom };
    Kind kind = Kind::max_losses;
    std::size_t n_max = 0;
    std::function<bool(const ErrorPattern &)> fatal;

    static AbortPolicy max_losses(std::size_t n_max);
    static AbortPolicy custom(std::function<bool(const ErrorPattern &)> fatal);
    bool is_fatal(const ErrorPattern &e) const;
    void validate(std::size_t n) const;
};

struct DecodeResult {
    std::vector<uint8_t> codeword;
    bool aborted = false;
};

/// Maximum-likelihood decoding over flips with known erasures: the codeword
/// closest to the received bits on non-erased positions, lowest in
/// lexicographic order (position 1 most significant) on ties.
DecodeResult decode(const std::vector<uint8_t> &received, const std::vector<uint8_t> &erasures,
                    const ClassicalCode &cc);
/// Decodes `transmitted` corrupted by `e` (erased bits are left as sent).
DecodeResult decode(const ErrorPattern &e, const std::vector<uint8_t> &transmitted, const ClassicalCode &cc);
Word decode_word(Word received, Word erased, const ClassicalCode &cc);
/// All codewords at minimum distance on the non-erased positions.
std::vector<Word> ml_candidates(Word received, Word erased, const ClassicalCode &cc);
bool lex_less(Word a, Word b);

/// sum_{k <= n_max} C(n,k) f_n^k (1-f_n)^(n-k).
double success_probability(const AbortPolicy &policy, double f_n, std::size_t n);

class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qrep

#endif
