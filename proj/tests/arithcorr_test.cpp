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

#include "mseqcorr/arithcorr.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <random>

using namespace mseqcorr;
using boost::multiprecision::cpp_int;

namespace {

Poly2 P(std::uint64_t mask) { return Poly2::from_mask(mask); }

BinarySeq random_seq(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    return BinarySeq(std::move(bits));
}

cpp_int to_cpp_int(const NatBits& v) {
    cpp_int x = 0;
    for (std::size_t i = v.width(); i-- > 0;) {
        x <<= 1;
        if (v.bit(i)) x |= 1;
    }
    return x;
}

cpp_int seq_value(const BinarySeq& s) {
    cpp_int x = 0;
    for (std::size_t i = s.period(); i-- > 0;) {
        x <<= 1;
        if (s[i]) x |= 1;
    }
    return x;
}

}  // namespace

TEST(NatBits, IntOfSeqExamples) {
    EXPECT_EQ(to_cpp_int(int_of_seq(BinarySeq::from_string("1"))), 1);
    EXPECT_EQ(to_cpp_int(int_of_seq(BinarySeq::from_string("11111"))), 31);  // all-ones = 2^N - 1
    EXPECT_EQ(to_cpp_int(int_of_seq(BinarySeq::from_string("1001011"))), 105);
    EXPECT_EQ(int_of_seq(BinarySeq::from_string("1001011")).width(), 7u);
}

TEST(NatBits, SubtractionMatchesBigIntOracle) {
    std::mt19937_64 rng(2026);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t width = 1 + static_cast<std::size_t>(rng() % 300);
        const BinarySeq sa = random_seq(rng, width);
        const BinarySeq sb = random_seq(rng, width);
        const NatBits a = int_of_seq(sa);
        const NatBits b = int_of_seq(sb);
        const auto [diff, a_ge] = sub_abs(a, b);
        const cpp_int va = seq_value(sa), vb = seq_value(sb);
        EXPECT_EQ(a_ge, va >= vb);
        EXPECT_EQ(to_cpp_int(diff), va >= vb ? va - vb : vb - va);
        EXPECT_EQ(diff.width(), width);
    }
}

TEST(NatBits, ComparisonAndErrors) {
    const NatBits a = int_of_seq(BinarySeq::from_string("101"));  // 1 + 4 = 5
    const NatBits b = int_of_seq(BinarySeq::from_string("011"));  // 2 + 4 = 6
    EXPECT_EQ(to_cpp_int(a), 5);
    EXPECT_EQ(to_cpp_int(b), 6);
    EXPECT_TRUE(a < b);
    EXPECT_THROW((void)(a == int_of_seq(BinarySeq::from_string("1011"))), std::invalid_argument);
    EXPECT_THROW(NatBits(0), std::invalid_argument);
    NatBits c(3);
    c.set_bit(2);
    EXPECT_TRUE(c.bit(2));
    EXPECT_THROW(c.set_bit(3), std::out_of_range);
}

TEST(ArithCross, ReferencePairValue) {
    // (x^3+x+1, x^4+x+1) at joint period 105: the balance is -3 at every
    // shift, matching the closed form with F = x (l = 1, f0 = 0).
    const BinarySeq a = expand(mseq_trace(P(0b1011)), 105);
    const BinarySeq b = expand(mseq_trace(P(0b10011)), 105);
    const CorrValue v = arith_cross(a, b);
    EXPECT_EQ(v.value, -3);
    EXPECT_EQ(v.zeros + v.ones, 105u);
}

TEST(ArithCross, SelfCorrelationIsThePeriod) {
    const BinarySeq a = expand(mseq_trace(P(0b1011)), 105);
    const CorrValue v = arith_cross(a, a);
    EXPECT_EQ(v.value, 105);  // D = 0: I0 = N on the I(A) >= I(B) branch
    EXPECT_EQ(v.zeros, 105u);
    EXPECT_TRUE(v.lhs_ge);
}

TEST(ArithCross, AllOnesAgainstMSequenceIsPlusOne) {
    for (unsigned n2 = 2; n2 <= 6; ++n2)
        for (const Poly2 g2 : list_primitive(n2)) {
            const BinarySeq b = mseq_trace(g2);
            const BinarySeq ones(std::vector<std::uint8_t>(b.period(), 1));
            const CorrValue v = arith_cross(ones, b);
            EXPECT_EQ(v.value, 1) << format_poly(g2);  // 2^(n2-1) - (2^(n2-1) - 1)
            EXPECT_TRUE(v.lhs_ge);
        }
}

TEST(ArithCross, PeriodMismatchThrows) {
    EXPECT_THROW(arith_cross(mseq_trace(P(0b1011)), mseq_trace(P(0b10011))), std::invalid_argument);
}

TEST(ArithCross, AntisymmetryAndBound) {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t width = 2 + static_cast<std::size_t>(rng() % 120);
        const BinarySeq a = random_seq(rng, width);
        const BinarySeq b = random_seq(rng, width);
        const CorrValue ab = arith_cross(a, b);
        const CorrValue ba = arith_cross(b, a);
        EXPECT_LE(std::abs(ab.value), static_cast<long long>(width));
        EXPECT_EQ(ab.zeros + ab.ones, width);
        if (seq_value(a) != seq_value(b)) {
            EXPECT_EQ(ba.value, -ab.value);  // swapping operands flips the order flag only
            EXPECT_EQ(ab.zeros, ba.zeros);
            EXPECT_NE(ab.lhs_ge, ba.lhs_ge);
        } else {
            EXPECT_EQ(ab.value, ba.value);
        }
    }
}

TEST(ArithCrossShift, ConstantOverAllShiftsForCoprimePairs) {
    for (unsigned n1 = 1; n1 <= 5; ++n1)
        for (unsigned n2 = 1; n2 <= 5; ++n2) {
            if (std::gcd(n1, n2) != 1) continue;
            const std::size_t nn = ((std::size_t{1} << n1) - 1) * ((std::size_t{1} << n2) - 1);
            for (const Poly2 g1 : list_primitive(n1))
                for (const Poly2 g2 : list_primitive(n2)) {
                    const BinarySeq a = expand(mseq_trace(g1), nn);
                    const BinarySeq b = expand(mseq_trace(g2), nn);
                    const long long base = arith_cross(a, b).value;
                    for (std::size_t tau = 0; tau < nn; ++tau)
                        ASSERT_EQ(arith_cross_shift(a, b, static_cast<long long>(tau)).value, base)
                            << format_poly(g1) << "," << format_poly(g2) << " tau=" << tau;
                }
        }
}

TEST(ArithAuto, BasicShapes) {
    const BinarySeq a = mseq_trace(P(0b1011));
    EXPECT_EQ(arith_auto(a, 0).value, 7);
    for (long long tau = 1; tau <= 6; ++tau) EXPECT_LE(std::abs(arith_auto(a, tau).value), 7);
    const BinarySeq ones(std::vector<std::uint8_t>(9, 1));
    for (long long tau = 0; tau < 9; ++tau) EXPECT_EQ(arith_auto(ones, tau).value, 9);
}

TEST(ClassicalCross, IdealAutocorrelation) {
    for (unsigned n = 2; n <= 6; ++n)
        for (const Poly2 g : list_primitive(n)) {
            const BinarySeq a = mseq_trace(g);
            EXPECT_EQ(classical_cross(a, a, 0), static_cast<long long>(a.period()));
            for (std::size_t tau = 1; tau < a.period(); ++tau)
                EXPECT_EQ(classical_cross(a, a, static_cast<long long>(tau)), -1) << format_poly(g);
        }
}

TEST(ClassicalCross, ComplementAndErrors) {
    const BinarySeq a = mseq_trace(P(0b1011));
    std::vector<std::uint8_t> inv(a.period());
    for (std::size_t i = 0; i < a.period(); ++i) inv[i] = a[i] ^ 1u;
    EXPECT_EQ(classical_cross(a, BinarySeq(inv), 0), -7);
    EXPECT_THROW(classical_cross(a, mseq_trace(P(0b10011)), 0), std::invalid_argument);
}

TEST(CountRuns, ReferencePairTables) {
    const BinarySeq a = expand(mseq_trace(P(0b1011)), 105);
    const BinarySeq b = expand(mseq_trace(P(0b10011)), 105);
    const RunTables t = count_runs(a, b, 3, 4);
    EXPECT_EQ(t.n01, (std::vector<long long>{12, 6, 3, 1, 0, 1, 1}));
    EXPECT_EQ(t.n10, (std::vector<long long>{14, 7, 3, 2, 2, 0, 0}));
    EXPECT_EQ(std::accumulate(t.n10.begin(), t.n10.end(), 0LL), 28);  // (N2-1)(N1+1)/4 = 14*8/4
    EXPECT_EQ(std::accumulate(t.n01.begin(), t.n01.end(), 0LL), 24);  // (2^(n1-1)-1) * 2^(n2-1)
}

TEST(CountRuns, BucketTotality) {
    const BinarySeq a = expand(mseq_trace(P(0b1101)), 217);
    const BinarySeq b = expand(mseq_trace(P(0b101001)), 217);
    const RunTables t = count_runs(a, b, 3, 5);
    long long disagreements = 0;
    for (std::size_t i = 0; i < 217; ++i)
        if (a[i] != b[i]) ++disagreements;
    EXPECT_EQ(std::accumulate(t.n01.begin(), t.n01.end(), 0LL) + std::accumulate(t.n10.begin(), t.n10.end(), 0LL),
              disagreements);
}

TEST(CountRuns, RejectsBadDegrees) {
    const BinarySeq a = expand(mseq_trace(P(0b111)), 45);
    const BinarySeq b = expand(mseq_trace(P(0b10011)), 45);
    EXPECT_THROW(count_runs(a, b, 2, 4), std::invalid_argument);  // gcd(2,4) = 2
    EXPECT_THROW(count_runs(a, expand(b, 90), 3, 4), std::invalid_argument);
}

TEST(CountRuns, RejectsInputsViolatingTheRunPremise) {
    // a single disagreement in a long period: the next one is a full period
    // away, past the n1+n2 window the tables are sized for
    std::vector<std::uint8_t> bits(105, 0);
    bits[40] = 1;
    const BinarySeq a{bits};
    const BinarySeq b{std::vector<std::uint8_t>(105, 0)};
    EXPECT_THROW(count_runs(a, b, 3, 4), std::domain_error);
    // identical inputs have no disagreements at all: all-zero tables
    const RunTables t = count_runs(a, a, 3, 4);
    EXPECT_EQ(std::accumulate(t.n01.begin(), t.n01.end(), 0LL), 0);
    EXPECT_EQ(std::accumulate(t.n10.begin(), t.n10.end(), 0LL), 0);
}

TEST(ArithCross, EndToEndBigIntOracle) {
    // Recompute M entirely through arbitrary-precision integers: I(A), I(B),
    // |difference|, then the bit census over the common width. Must agree
    // with the word-level implementation on every coprime pair up to
    // degree 5 and on random sequence pairs.
    const auto oracle = [](const BinarySeq& a, const BinarySeq& b) -> long long {
        const cpp_int va = seq_value(a), vb = seq_value(b);
        const cpp_int d = va >= vb ? va - vb : vb - va;
        long long ones = 0;
        for (std::size_t i = 0; i < a.period(); ++i)
            if (bit_test(d, static_cast<unsigned>(i))) ++ones;
        const long long balance = static_cast<long long>(a.period()) - 2 * ones;
        return va >= vb ? balance : -balance;
    };

    for (unsigned n1 = 1; n1 <= 5; ++n1)
        for (unsigned n2 = 1; n2 <= 5; ++n2) {
            if (std::gcd(n1, n2) != 1) continue;
            const std::size_t nn = ((std::size_t{1} << n1) - 1) * ((std::size_t{1} << n2) - 1);
            for (const Poly2 g1 : list_primitive(n1))
                for (const Poly2 g2 : list_primitive(n2)) {
                    const BinarySeq a = expand(mseq_trace(g1), nn);
                    const BinarySeq b = expand(mseq_trace(g2), nn);
                    EXPECT_EQ(arith_cross(a, b).value, oracle(a, b)) << format_poly(g1) << "," << format_poly(g2);
                }
        }

    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t width = 1 + static_cast<std::size_t>(rng() % 200);
        const BinarySeq a = random_seq(rng, width);
        const BinarySeq b = random_seq(rng, width);
        EXPECT_EQ(arith_cross(a, b).value, oracle(a, b));
    }
}

TEST(Lemma2, ReconstructsTheDefinition) {
    {
        const BinarySeq a = expand(mseq_trace(P(0b1011)), 105);
        const BinarySeq b = expand(mseq_trace(P(0b10011)), 105);
        EXPECT_EQ(m_via_lemma2(count_runs(a, b, 3, 4), 7, 15), arith_cross(a, b).value);
        EXPECT_EQ(m_via_lemma2(count_runs(a, b, 3, 4), 7, 15), -3);
    }
    {
        const BinarySeq a = expand(mseq_trace(P(0b1101)), 217);
        const BinarySeq b = expand(mseq_trace(P(0b101001)), 217);
        EXPECT_EQ(m_via_lemma2(count_runs(a, b, 3, 5), 7, 31), 1);
    }
    // degenerate all-zero tables evaluate to N1*N2 (cannot occur for real pairs)
    EXPECT_EQ(m_via_lemma2(RunTables{std::vector<long long>(7, 0), std::vector<long long>(7, 0)}, 7, 15), 105);
}
