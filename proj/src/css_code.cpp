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

#include "qrepeater/css_code.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "qrepeater/stabilizer.hpp"

namespace qrep {

namespace {

bool pure(const PauliOperator &p, char kind) {
    for (std::size_t q = 1; q <= p.num_qubits(); q++) {
        if ((kind == 'X' && p.z(q)) || (kind == 'Z' && p.x(q))) {
            return false;
        }
    }
    return true;
}

PauliOperator from_support(std::size_t n, Word w, char kind) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; q++) {
        if ((w >> q) & 1) {
            if (kind == 'X') {
                p.set_x(q + 1, true);
            } else {
                p.set_z(q + 1, true);
            }
        }
    }
    return p;
}

Word word_from_string(const std::string &bits) {
    Word w = 0;
    for (std::size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            w |= Word{1} << k;
        }
    }
    return w;
}

}  // namespace

Word to_word(const std::vector<uint8_t> &bits) {
    if (bits.size() > kMaxCodeLength) {
        throw std::invalid_argument("words are limited to 64 bits");
    }
    Word w = 0;
    for (std::size_t k = 0; k < bits.size(); k++) {
        if (bits[k]) {
            w |= Word{1} << k;
        }
    }
    return w;
}

std::vector<uint8_t> from_word(Word w, std::size_t n) {
    std::vector<uint8_t> out(n);
    for (std::size_t k = 0; k < n; k++) {
        out[k] = (w >> k) & 1;
    }
    return out;
}

ClassicalCode::ClassicalCode(std::size_t n, std::vector<Word> parity_rows) : n_(n), rows_(std::move(parity_rows)) {
    if (n == 0 || n > kMaxCodeLength) {
        throw std::invalid_argument("code length must be in 1..64");
    }
    Word full = n == 64 ? ~Word{0} : ((Word{1} << n) - 1);
    for (Word r : rows_) {
        if (r & ~full) {
            throw std::invalid_argument("parity row wider than the code");
        }
    }
    // kernel basis by elimination on a copy of H
    std::vector<Word> h = rows_;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < h.size(); col++) {
        std::size_t p = r;
        while (p < h.size() && !((h[p] >> col) & 1)) {
            p++;
        }
        if (p == h.size()) {
            continue;
        }
        std::swap(h[r], h[p]);
        for (std::size_t i = 0; i < h.size(); i++) {
            if (i != r && ((h[i] >> col) & 1)) {
                h[i] ^= h[r];
            }
        }
        pivot_cols.push_back(col);
        r++;
    }
    std::vector<uint8_t> is_pivot(n, 0);
    for (auto c : pivot_cols) {
        is_pivot[c] = 1;
    }
    for (std::size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        Word v = Word{1} << free;
        for (std::size_t i = 0; i < pivot_cols.size(); i++) {
            if ((h[i] >> free) & 1) {
                v |= Word{1} << pivot_cols[i];
            }
        }
        basis_.push_back(v);
    }
    if (basis_.size() > 24) {
        throw std::invalid_argument("code dimension above 24 is not enumerable");
    }
    codewords_.reserve(std::size_t{1} << basis_.size());
    for (uint64_t m = 0; m < (uint64_t{1} << basis_.size()); m++) {
        Word c = 0;
        for (std::size_t i = 0; i < basis_.size(); i++) {
            if ((m >> i) & 1) {
                c ^= basis_[i];
            }
        }
        codewords_.push_back(c);
    }
    std::sort(codewords_.begin(), codewords_.end());
}

std::vector<std::vector<uint8_t>> ClassicalCode::parity_check_matrix() const {
    std::vector<std::vector<uint8_t>> out;
    for (Word r : rows_) {
        out.push_back(from_word(r, n_));
    }
    return out;
}

Word ClassicalCode::syndrome(Word w) const {
    Word s = 0;
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (__builtin_popcountll(rows_[i] & w) & 1) {
            s |= Word{1} << i;
        }
    }
    return s;
}

bool ClassicalCode::is_codeword(Word w) const { return syndrome(w) == 0; }

void CssCode::validate() const {
    auto fail = [&](const std::string &why) { throw std::invalid_argument("code " + name + ": " + why); };
    std::vector<PauliOperator> all;
    for (const auto &p : x_stabilizers) {
        if (p.num_qubits() != n || !pure(p, 'X')) {
            fail("x stabilizer " + p.to_string() + " is not an X-type string on n qubits");
        }
        all.push_back(p);
    }
    for (const auto &p : z_stabilizers) {
        if (p.num_qubits() != n || !pure(p, 'Z')) {
            fail("z stabilizer " + p.to_string() + " is not a Z-type string on n qubits");
        }
        all.push_back(p);
    }
    for (std::size_t a = 0; a < all.size(); a++) {
        for (std::size_t b = a + 1; b < all.size(); b++) {
            if (!all[a].commutes(all[b])) {
                fail("stabilizers " + all[a].to_string() + " and " + all[b].to_string() + " anticommute");
            }
        }
    }
    if (symplectic_rank(all) != all.size()) {
        fail("stabilizers are not independent");
    }
    if (all.size() + k != n) {
        fail("n - generator count != k");
    }
    if (logical_x.size() != k || logical_z.size() != k) {
        fail("need k logical X and k logical Z operators");
    }
    for (const auto &l : logical_x) {
        if (l.num_qubits() != n) {
            fail("logical operator length mismatch");
        }
    }
    for (const auto &l : logical_z) {
        if (l.num_qubits() != n) {
            fail("logical operator length mismatch");
        }
    }
    std::vector<PauliOperator> with_logicals = all;
    for (std::size_t i = 0; i < k; i++) {
        for (const auto &s : all) {
            if (!logical_x[i].commutes(s) || !logical_z[i].commutes(s)) {
                fail("logical operator anticommutes with a stabilizer");
            }
        }
        for (std::size_t j = 0; j < k; j++) {
            bool anti = !logical_x[i].commutes(logical_z[j]);
            if (anti != (i == j)) {
                fail("logical X/Z pairing is broken");
            }
        }
        with_logicals.push_back(logical_x[i]);
        with_logicals.push_back(logical_z[i]);
    }
    if (symplectic_rank(with_logicals) != with_logicals.size()) {
        fail("logical operators depend on the stabilizers");
    }
    if (d == 0) {
        fail("distance must be positive");
    }
}

CssCode steane_code() {
    CssCode c;
    c.name = "steane";
    c.n = 7;
    c.k = 1;
    c.d = 3;
    for (const char *s : {"___XXXX", "_XX__XX", "X_X_X_X"}) {
        c.x_stabilizers.push_back(PauliOperator::from_string(s));
    }
    for (const char *s : {"___ZZZZ", "_ZZ__ZZ", "Z_Z_Z_Z"}) {
        c.z_stabilizers.push_back(PauliOperator::from_string(s));
    }
    c.logical_x.push_back(PauliOperator::from_string("XXXXXXX"));
    c.logical_z.push_back(PauliOperator::from_string("ZZZZZZZ"));
    c.validate();
    return c;
}

CssCode golay_code() {
    // Shifts of the reciprocal check polynomial of the cyclic [23,12,7] code
    // with generator g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11; the check
    // polynomial is h(x) = (x^23 - 1) / g(x). Generated by polynomial division
    // over GF(2) and re-derived in the unit tests.
    static const char *rows[11] = {
        "11111001001010000000000", "01111100100101000000000", "00111110010010100000000",
        "00011111001001010000000", "00001111100100101000000", "00000111110010010100000",
        "00000011111001001010000", "00000001111100100101000", "00000000111110010010100",
        "00000000011111001001010", "00000000001111100100101",
    };
    CssCode c;
    c.name = "golay";
    c.n = 23;
    c.k = 1;
    c.d = 7;
    for (const char *r : rows) {
        Word w = word_from_string(r);
        c.x_stabilizers.push_back(from_support(23, w, 'X'));
        c.z_stabilizers.push_back(from_support(23, w, 'Z'));
    }
    Word all = (Word{1} << 23) - 1;
    c.logical_x.push_back(from_support(23, all, 'X'));
    c.logical_z.push_back(from_support(23, all, 'Z'));
    c.validate();
    return c;
}

CssCode parse_css_code(std::istream &in) {
    CssCode c;
    std::string line;
    std::size_t lineno = 0;
    std::vector<PauliOperator> stabs;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("code file line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::string key, value;
        if (!(ss >> key)) {
            continue;
        }
        if (!(ss >> value)) {
            fail("missing value after '" + key + "'");
        }
        try {
            if (key == "name") {
                c.name = value;
            } else if (key == "d") {
                c.d = std::stoul(value);
            } else if (key == "S") {
                stabs.push_back(PauliOperator::from_string(value));
            } else if (key == "LX") {
                c.logical_x.push_back(PauliOperator::from_string(value));
            } else if (key == "LZ") {
                c.logical_z.push_back(PauliOperator::from_string(value));
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const std::logic_error &e) {
            if (std::string(e.what()).rfind("code file line", 0) == 0) {
                throw;
            }
            fail(e.what());
        }
    }
    if (stabs.empty() && c.logical_x.empty()) {
        throw std::invalid_argument("code file defines no operators");
    }
    c.n = !stabs.empty() ? stabs[0].num_qubits() : c.logical_x[0].num_qubits();
    for (auto &s : stabs) {
        if (s.num_qubits() != c.n) {
            throw std::invalid_argument("code file: stabilizers differ in length");
        }
        if (pure(s, 'X') && !s.is_identity()) {
            c.x_stabilizers.push_back(s);
        } else if (pure(s, 'Z') && !s.is_identity()) {
            c.z_stabilizers.push_back(s);
        } else {
            throw std::invalid_argument("code file: stabilizer " + s.to_string() + " is not CSS");
        }
    }
    if (c.name.empty()) {
        c.name = "custom";
    }
    c.k = c.n - stabs.size();
    c.validate();
    return c;
}

CssCode read_css_code_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open code file " + path);
    }
    return parse_css_code(f);
}

std::string format_css_code(const CssCode &c) {
    auto bare = [](const PauliOperator &p) {
        std::string s = p.to_string();
        s = s.substr(s[1] == 'i' ? 2 : 1);
        std::replace(s.begin(), s.end(), '_', 'I');
        return s;
    };
    std::ostringstream out;
    out << "name " << c.name << "\n";
    out << "d " << c.d << "\n";
    for (const auto &p : c.x_stabilizers) {
        out << "S " << bare(p) << "\n";
    }
    for (const auto &p : c.z_stabilizers) {
        out << "S " << bare(p) << "\n";
    }
    for (const auto &p : c.logical_x) {
        out << "LX " << bare(p) << "\n";
    }
    for (const auto &p : c.logical_z) {
        out << "LZ " << bare(p) << "\n";
    }
    return out.str();
}

ClassicalCode parity_check_from_stabilizers(const CssCode &c) {
    std::vector<Word> rows;
    for (const auto &p : c.x_stabilizers) {
        rows.push_back(to_word(p.x_bits()));
    }
    return ClassicalCode(c.n, rows);
}

Word logical_x_support(const CssCode &c, std::size_t index) {
    if (index >= c.logical_x.size()) {
        throw std::out_of_range("no logical X with that index");
    }
    return to_word(c.logical_x[index].x_bits());
}

TransversalReport transversal_validity(const CssCode &c) {
    TransversalReport r;
    bool css = true;
    for (const auto &p : c.x_stabilizers) {
        css &= pure(p, 'X');
    }
    for (const auto &p : c.z_stabilizers) {
        css &= pure(p, 'Z');
    }
    std::vector<PauliOperator> all = c.x_stabilizers;
    all.insert(all.end(), c.z_stabilizers.begin(), c.z_stabilizers.end());
    for (std::size_t a = 0; a < all.size() && css; a++) {
        for (std::size_t b = a + 1; b < all.size(); b++) {
            css &= all[a].commutes(all[b]);
        }
    }
    r.cx_valid = css;
    if (!css) {
        return r;
    }
    StabilizerSet group(c.n, all);
    bool symmetric = true;
    for (const auto &p : all) {
        PauliOperator swapped(c.n);
        for (std::size_t q = 1; q <= c.n; q++) {
            swapped.set_x(q, p.z(q));
            swapped.set_z(q, p.x(q));
        }
        symmetric &= group.contains(swapped);
    }
    r.h_valid = symmetric;
    r.cz_valid = symmetric;
    return r;
}

std::size_t ErrorPattern::loss_count() const {
    return static_cast<std::size_t>(std::count_if(erasures.begin(), erasures.end(), [](uint8_t b) { return b != 0; }));
}

AbortPolicy AbortPolicy::max_losses(std::size_t n_max) {
    AbortPolicy p;
    p.kind = Kind::max_losses;
    p.n_max = n_max;
    return p;
}

AbortPolicy AbortPolicy::custom(std::function<bool(const ErrorPattern &)> fatal) {
    AbortPolicy p;
    p.kind = Kind::custom;
    p.fatal = std::move(fatal);
    return p;
}

bool AbortPolicy::is_fatal(const ErrorPattern &e) const {
    if (kind == Kind::max_losses) {
        return e.loss_count() > n_max;
    }
    return fatal(e);
}

void AbortPolicy::validate(std::size_t n) const {
    if (kind == Kind::max_losses && n_max > n) {
        throw std::invalid_argument("n_max = " + std::to_string(n_max) + " exceeds block size " + std::to_string(n));
    }
    if (kind == Kind::custom && !fatal) {
        throw std::invalid_argument("custom abort policy without a predicate");
    }
}

bool lex_less(Word a, Word b) {
    Word diff = a ^ b;
    if (!diff) {
        return false;
    }
    Word low = diff & (~diff + 1);
    return !(a & low);
}

std::vector<Word> ml_candidates(Word received, Word erased, const ClassicalCode &cc) {
    Word keep = ~erased;
    int best = 65;
    std::vector<Word> out;
    for (Word c : cc.codewords()) {
        int d = __builtin_popcountll((c ^ received) & keep);
        if (d < best) {
            best = d;
            out.clear();
        }
        if (d == best) {
            out.push_back(c);
        }
    }
    return out;
}

Word decode_word(Word received, Word erased, const ClassicalCode &cc) {
    Word keep = ~erased;
    int best = 65;
    Word choice = 0;
    for (Word c : cc.codewords()) {
        int d = __builtin_popcountll((c ^ received) & keep);
        if (d < best || (d == best && lex_less(c, choice))) {
            best = d;
            choice = c;
        }
    }
    return choice;
}

DecodeResult decode(const std::vector<uint8_t> &received, const std::vector<uint8_t> &erasures,
                    const ClassicalCode &cc) {
    if (received.size() != cc.n() || erasures.size() != cc.n()) {
        throw std::invalid_argument("decode: word length differs from code length");
    }
    DecodeResult r;
    r.codeword = from_word(decode_word(to_word(received), to_word(erasures), cc), cc.n());
    return r;
}

DecodeResult decode(const ErrorPattern &e, const std::vector<uint8_t> &transmitted, const ClassicalCode &cc) {
    if (e.flips.size() != cc.n() || e.erasures.size() != cc.n() || transmitted.size() != cc.n()) {
        throw std::invalid_argument("decode: pattern length differs from code length");
    }
    std::vector<uint8_t> received = transmitted;
    for (std::size_t k = 0; k < cc.n(); k++) {
        if (!e.erasures[k]) {
            received[k] ^= e.flips[k];
        }
    }
    return decode(received, e.erasures, cc);
}

double success_probability(const AbortPolicy &policy, double f_n, std::size_t n) {
    if (policy.kind != AbortPolicy::Kind::max_losses) {
        throw std::invalid_argument("closed-form success probability needs a max_losses policy");
    }
    policy.validate(n);
    if (!(f_n >= 0.0 && f_n <= 1.0)) {
        throw std::invalid_argument("f_n outside [0,1]");
    }
    double total = 0.0;
    double tail = 0.0;
    double binom = 1.0;
    for (std::size_t k = 0; k <= n; k++) {
        if (k > 0) {
            binom = binom * double(n - k + 1) / double(k);
        }
        double term = binom * std::pow(f_n, double(k)) * std::pow(1.0 - f_n, double(n - k));
        (k <= policy.n_max ? total : tail) += term;
    }
    // sum the shorter side
    return 2 * policy.n_max >= n ? 1.0 - tail : total;
}

}  // namespace qrep
