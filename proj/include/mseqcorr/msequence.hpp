/*
   Copyright 2026 The mseqcorr authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MSEQCORR_MSEQUENCE_HPP
#define MSEQCORR_MSEQUENCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gf2field.hpp"
#include "gf2poly.hpp"

namespace mseqcorr {

/// A periodic bit sequence stored as exactly one period.
class BinarySeq {
  public:
    explicit BinarySeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw std::invalid_argument("BinarySeq: period must be >= 1");
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("BinarySeq: bits must be 0 or 1");
    }

    /// Accepts "1001011" or the comma-separated form "1,0,0,1,0,1,1".
    static BinarySeq from_string(std::string_view text) {
        std::vector<std::uint8_t> bits;
        for (char c : text) {
            if (c == ',' || c == ' ' || c == '\n' || c == '\t') continue;
            if (c == '0')
                bits.push_back(0);
            else if (c == '1')
                bits.push_back(1);
            else
                throw std::invalid_argument("BinarySeq: bad character '" + std::string(1, c) + "'");
        }
        return BinarySeq(std::move(bits));
    }

    std::size_t period() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
    std::uint8_t at_cyclic(std::size_t i) const noexcept { return bits_[i % bits_.size()]; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s += static_cast<char>('0' + b);
        return s;
    }

    std::string to_csv() const {
        std::string s;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (i) s += ',';
            s += static_cast<char>('0' + bits_[i]);
        }
        return s;
    }

    friend bool operator==(const BinarySeq& a, const BinarySeq& b) = default;

    /// Bitwise XOR; periods must match (expand first if needed).
    friend BinarySeq operator+(const BinarySeq& a, const BinarySeq& b) {
        if (a.period() != b.period()) throw std::invalid_argument("BinarySeq: period mismatch in +");
        std::vector<std::uint8_t> out(a.period());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bits_[i] ^ b.bits_[i];
        return BinarySeq(std::move(out));
    }

  private:
    std::vector<std::uint8_t> bits_;
};

/// Canonical-phase m-sequence: bits[i] = T(alpha^i), period 2^n - 1.
/// For n = 1 this is the all-ones sequence of period 1.
inline BinarySeq mseq_trace(Poly2 g) {
    const FieldCtx ctx(g);  // rejects non-primitive moduli
    const std::size_t N = static_cast<std::size_t>(ctx.group_order());
    std::vector<std::uint8_t> bits(N);
    FieldElem e = ctx.one();
    const FieldElem a = ctx.alpha();
    for (std::size_t i = 0; i < N; ++i) {
        bits[i] = static_cast<std::uint8_t>(trace(e));
        e = e * a;
    }
    return BinarySeq(std::move(bits));
}

/// LFSR with characteristic polynomial g: s[i+n] = sum_{j<n} g_j * s[i+j].
/// Any nonzero seed yields a cyclic shift of mseq_trace(g); seeding with the
/// trace phase (seed[j] = T(alpha^j)) reproduces it exactly.
inline BinarySeq mseq_lfsr(Poly2 g, std::span<const std::uint8_t> seed) {
    if (g.is_zero() || g.degree() < 1 || !is_primitive(g))
        throw std::invalid_argument("mseq_lfsr: g must be a primitive polynomial");
    const unsigned n = static_cast<unsigned>(g.degree());
    if (seed.size() != n) throw std::invalid_argument("mseq_lfsr: seed length must equal deg g");
    bool nonzero = false;
    for (auto b : seed) {
        if (b > 1) throw std::invalid_argument("mseq_lfsr: seed bits must be 0 or 1");
        nonzero = nonzero || b == 1;
    }
    if (!nonzero) throw std::invalid_argument("mseq_lfsr: zero seed");

    const std::size_t N = (std::size_t{1} << n) - 1;
    std::vector<std::uint8_t> bits(N);
    if (n == 1) {
        bits[0] = seed[0];  // period 1, seed[0] == 1
        return BinarySeq(std::move(bits));
    }
    for (unsigned j = 0; j < n; ++j) bits[j] = seed[j];
    for (std::size_t i = n; i < N; ++i) {
        std::uint8_t next = 0;
        for (unsigned j = 0; j < n; ++j)
            if (g.coeff(j)) next ^= bits[i - n + j];
        bits[i] = next;
    }
    return BinarySeq(std::move(bits));
}

inline BinarySeq mseq_lfsr(Poly2 g, const std::vector<std::uint8_t>& seed) {
    return mseq_lfsr(g, std::span<const std::uint8_t>(seed));
}

/// Cyclic shift: result[i] = s[(i + tau) mod N]. tau may be negative.
inline BinarySeq shift(const BinarySeq& s, long long tau) {
    const std::size_t N = s.period();
    const std::size_t t = static_cast<std::size_t>(((tau % static_cast<long long>(N)) + static_cast<long long>(N)) %
                                                   static_cast<long long>(N));
    std::vector<std::uint8_t> out(N);
    for (std::size_t i = 0; i < N; ++i) out[i] = s[(i + t) % N];
    return BinarySeq(std::move(out));
}

/// One period of length N by cyclic repetition; N must be a multiple of the
/// current period.
inline BinarySeq expand(const BinarySeq& s, std::size_t N) {
    if (N == 0 || N % s.period() != 0)
        throw std::invalid_argument("expand: target length must be a positive multiple of the period");
    std::vector<std::uint8_t> out(N);
    for (std::size_t i = 0; i < N; ++i) out[i] = s[i % s.period()];
    return BinarySeq(std::move(out));
}

/// Counts of each length-t window over one full period, cyclic wrap-around.
/// Patterns are keyed as '0'/'1' strings; absent key means count 0.
inline std::map<std::string, std::size_t> pattern_census(const BinarySeq& s, std::size_t t) {
    if (t < 1 || t > s.period()) throw std::invalid_argument("pattern_census: need 1 <= t <= period");
    std::map<std::string, std::size_t> counts;
    const std::size_t N = s.period();
    std::string w(t, '0');
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < t; ++j) w[j] = static_cast<char>('0' + s[(i + j) % N]);
        ++counts[w];
    }
    return counts;
}

/// Longest run of zeros treating the period cyclically; returns the period
/// for the all-zero sequence.
inline std::size_t max_zero_run_cyclic(const BinarySeq& s) {
    const std::size_t N = s.period();
    bool any_one = false;
    for (std::size_t i = 0; i < N; ++i) any_one = any_one || s[i] == 1;
    if (!any_one) return N;
    std::size_t best = 0, run = 0;
    for (std::size_t i = 0; i < 2 * N; ++i) {
        if (s[i % N] == 0) {
            ++run;
            if (run > best) best = run;
        } else {
            run = 0;
        }
    }
    return best > N ? N : best;
}

/// Smallest tau with shift(a, tau) == b, if the sequences are cyclically
/// equivalent.
inline std::optional<std::size_t> find_cyclic_alignment(const BinarySeq& a, const BinarySeq& b) {
    if (a.period() != b.period()) return std::nullopt;
    const std::size_t N = a.period();
    for (std::size_t tau = 0; tau < N; ++tau) {
        bool ok = true;
        for (std::size_t i = 0; i < N && ok; ++i) ok = a[(i + tau) % N] == b[i];
        if (ok) return tau;
    }
    return std::nullopt;
}

}  // namespace mseqcorr

#endif  // MSEQCORR_MSEQUENCE_HPP
