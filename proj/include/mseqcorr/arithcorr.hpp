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

#ifndef MSEQCORR_ARITHCORR_HPP
#define MSEQCORR_ARITHCORR_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "msequence.hpp"

namespace mseqcorr {

class NatBits;
struct NatSubResult;
NatSubResult sub_abs(const NatBits& a, const NatBits& b);

/// An N-bit natural number (bit lambda weighs 2^lambda) with exact
/// subtraction. Values of width N are always < 2^N, so |a - b| of two
/// width-N values fits back in N bits.
class NatBits {
  public:
    explicit NatBits(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {
        if (width == 0) throw std::invalid_argument("NatBits: width must be >= 1");
    }

    /// I(S) = sum s[lambda] * 2^lambda; width = period.
    static NatBits from_seq(const BinarySeq& s) {
        NatBits v(s.period());
        for (std::size_t i = 0; i < s.period(); ++i)
            if (s[i]) v.words_[i / 64] |= std::uint64_t{1} << (i % 64);
        return v;
    }

    std::size_t width() const noexcept { return width_; }

    bool bit(std::size_t i) const noexcept {
        return i < width_ && ((words_[i / 64] >> (i % 64)) & 1u);
    }

    void set_bit(std::size_t i) {
        if (i >= width_) throw std::out_of_range("NatBits: bit index out of range");
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    /// Number of one bits among c_0 .. c_{N-1}.
    std::size_t popcount() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool is_zero() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    friend std::strong_ordering operator<=>(const NatBits& a, const NatBits& b) {
        if (a.width_ != b.width_) throw std::invalid_argument("NatBits: width mismatch in comparison");
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const NatBits& a, const NatBits& b) { return (a <=> b) == 0; }

  private:
    friend struct NatSubResult;
    friend NatSubResult sub_abs(const NatBits& a, const NatBits& b);

    std::size_t width_;
    std::vector<std::uint64_t> words_;
};

struct NatSubResult {
    NatBits diff;     // |a - b|, width preserved
    bool lhs_was_ge;  // which operand was larger (ties count as lhs >= rhs)
};

/// Exact |a - b| with an explicit order flag.
inline NatSubResult sub_abs(const NatBits& a, const NatBits& b) {
    const bool a_ge = (a <=> b) >= 0;
    const NatBits& hi = a_ge ? a : b;
    const NatBits& lo = a_ge ? b : a;
    NatBits out(a.width());
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
        const std::uint64_t h = hi.words_[i];
        const std::uint64_t l = lo.words_[i];
        const std::uint64_t d1 = h - l;
        const std::uint64_t d2 = d1 - borrow;
        borrow = (h < l) || (d1 < borrow) ? 1 : 0;
        out.words_[i] = d2;
    }
    return {std::move(out), a_ge};
}

inline NatBits int_of_seq(const BinarySeq& s) { return NatBits::from_seq(s); }

/// Result of an arithmetic correlation: the signed balance plus the raw
/// zero/one census of the difference expansion and the operand order.
struct CorrValue {
    long long value;
    std::size_t zeros;  // I0
    std::size_t ones;   // I1
    bool lhs_ge;        // I(A) >= I(B)
};

/// M(A, B): expand D = |I(A) - I(B)| over N bits and return I0 - I1 when
/// I(A) >= I(B), else I1 - I0.
inline CorrValue arith_cross(const BinarySeq& a, const BinarySeq& b) {
    if (a.period() != b.period())
        throw std::invalid_argument("arith_cross: periods must match (expand to a common period first)");
    const std::size_t N = a.period();
    const auto [diff, a_ge] = sub_abs(NatBits::from_seq(a), NatBits::from_seq(b));
    const std::size_t ones = diff.popcount();
    const std::size_t zeros = N - ones;
    const long long balance = static_cast<long long>(zeros) - static_cast<long long>(ones);
    return {a_ge ? balance : -balance, zeros, ones, a_ge};
}

inline CorrValue arith_cross_shift(const BinarySeq& a, const BinarySeq& b, long long tau) {
    return arith_cross(a, shift(b, tau));
}

inline CorrValue arith_auto(const BinarySeq& a, long long tau) { return arith_cross(a, shift(a, tau)); }

/// Classical crosscorrelation sum (-1)^(a_i + b_{i+tau}) over one period.
inline long long classical_cross(const BinarySeq& a, const BinarySeq& b, long long tau) {
    if (a.period() != b.period()) throw std::invalid_argument("classical_cross: periods must match");
    const std::size_t N = a.period();
    const std::size_t t = static_cast<std::size_t>(((tau % static_cast<long long>(N)) + static_cast<long long>(N)) %
                                                   static_cast<long long>(N));
    long long disagreements = 0;
    for (std::size_t i = 0; i < N; ++i)
        if (a[i] != b[(i + t) % N]) ++disagreements;
    return static_cast<long long>(N) - 2 * disagreements;
}

/// Run-structured disagreement tables. n01[t] counts cyclic positions i with
/// a_i=0, b_i=1, agreement for the next t positions, and disagreement at
/// i+t+1; n10[t] is the (1,0)-start mirror. Every disagreeing index lands in
/// exactly one bucket because the XOR sequence has no zero run of length
/// n1+n2.
struct RunTables {
    std::vector<long long> n01;
    std::vector<long long> n10;
};

inline RunTables count_runs(const BinarySeq& a, const BinarySeq& b, unsigned n1, unsigned n2) {
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("count_runs: degrees must be >= 1");
    if (std::gcd(n1, n2) != 1) throw std::invalid_argument("count_runs: degrees must be coprime");
    if (a.period() != b.period()) throw std::invalid_argument("count_runs: periods must match");
    const std::size_t N = a.period();
    const std::size_t tmax = n1 + n2;
    RunTables tables{std::vector<long long>(tmax, 0), std::vector<long long>(tmax, 0)};
    for (std::size_t i = 0; i < N; ++i) {
        if (a[i] == b[i]) continue;
        std::size_t t = tmax;  // stays tmax only if no disagreement found in range
        for (std::size_t r = 1; r <= tmax; ++r) {
            if (a[(i + r) % N] != b[(i + r) % N]) {
                t = r - 1;
                break;
            }
        }
        if (t >= tmax)
            throw std::domain_error("count_runs: agreement run of length >= n1+n2 (inputs are not a valid pair)");
        if (a[i] == 0)
            ++tables.n01[t];
        else
            ++tables.n10[t];
    }
    return tables;
}

/// M(A, B) = N1*N2 - 2 * sum_t (t*N(0,1;t) + N(1,0;t)).
inline long long m_via_lemma2(const RunTables& tables, long long N1, long long N2) {
    long long g = 0;
    for (std::size_t t = 0; t < tables.n01.size(); ++t)
        g += static_cast<long long>(t) * tables.n01[t] + tables.n10[t];
    return N1 * N2 - 2 * g;
}

}  // namespace mseqcorr

#endif  // MSEQCORR_ARITHCORR_HPP
