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

#include "mseqcorr/gf2field.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace mseqcorr;

namespace {

Poly2 P(std::uint64_t mask) { return Poly2::from_mask(mask); }

}  // namespace

TEST(FieldCtx, RejectsNonPrimitiveModuli) {
    EXPECT_THROW(FieldCtx(P(0b101)), std::invalid_argument);    // x^2+1 reducible
    EXPECT_THROW(FieldCtx(P(0b11111)), std::invalid_argument);  // irreducible, not primitive
    EXPECT_THROW(FieldCtx(Poly2::zero()), std::invalid_argument);
}

TEST(FieldCtx, BasicShape) {
    const FieldCtx gf8(P(0b1011));
    EXPECT_EQ(gf8.degree(), 3u);
    EXPECT_EQ(gf8.order(), 8u);
    EXPECT_EQ(gf8.group_order(), 7u);
}

TEST(FieldElem, MulExamples) {
    const FieldCtx gf8(P(0b1011));  // x^3 = x+1
    const FieldElem a = gf8.alpha();
    EXPECT_EQ(a.pow(2) * a, gf8.element(P(0b011)));  // alpha^3 = alpha+1
    EXPECT_EQ(a * a.pow(gf8.group_order() - 1), gf8.one());
    EXPECT_EQ(a * gf8.one(), a);
}

TEST(FieldElem, ContextMismatchThrows) {
    const FieldCtx gf8(P(0b1011));
    const FieldCtx gf16(P(0b10011));
    EXPECT_THROW(gf8.alpha() * gf16.alpha(), std::invalid_argument);
    EXPECT_THROW(gf8.alpha() + gf16.one(), std::invalid_argument);
    // same modulus in a different context object is fine
    const FieldCtx gf8_again(P(0b1011));
    EXPECT_EQ(gf8.alpha() * gf8_again.alpha(), gf8.alpha().pow(2));
}

TEST(FieldElem, PowExamples) {
    const FieldCtx gf8(P(0b1011));
    EXPECT_EQ(gf8.alpha().pow(7), gf8.one());
    EXPECT_EQ(gf8.alpha().pow(4), gf8.element(P(0b110)));  // alpha^4 = x^2+x
    EXPECT_EQ(gf8.zero().pow(0), gf8.one());               // a^0 = 1 by convention

    for (unsigned n = 1; n <= 8; ++n)
        for (const Poly2 g : list_primitive(n)) {
            const FieldCtx ctx(g);
            EXPECT_EQ(ctx.alpha().pow(ctx.group_order()), ctx.one());
        }
}

TEST(FieldElem, PowMatchesRepeatedMultiplication) {
    const FieldCtx ctx(P(0b100101));  // degree 5
    FieldElem acc = ctx.one();
    const FieldElem a = ctx.element(P(0b10110));
    for (unsigned e = 0; e < 40; ++e) {
        EXPECT_EQ(a.pow(e), acc);
        acc = acc * a;
    }
}

TEST(Trace, KnownValues) {
    const FieldCtx gf8(P(0b1011));
    const FieldCtx gf16(P(0b10011));
    EXPECT_EQ(trace(gf8.one()), 1);   // T(1) = n mod 2
    EXPECT_EQ(trace(gf16.one()), 0);
    EXPECT_EQ(trace(gf8.alpha()), 0);         // alpha + alpha^2 + (alpha^2+alpha) = 0
    EXPECT_EQ(trace(gf8.alpha().pow(3)), 1);
}

TEST(Trace, TwoRoutesAgreeExhaustively) {
    for (unsigned n = 1; n <= 8; ++n)
        for (const Poly2 g : list_primitive(n)) {
            const FieldCtx ctx(g);
            for (std::uint64_t m = 0; m < ctx.order(); ++m) {
                const FieldElem e = ctx.element(P(m));
                EXPECT_EQ(trace(e), trace_by_squaring(e));
            }
        }
}

TEST(Trace, LinearityAndFrobeniusInvariance) {
    for (unsigned n = 1; n <= 8; ++n) {
        const FieldCtx ctx(list_primitive(n).front());
        for (std::uint64_t i = 0; i < ctx.order(); ++i) {
            const FieldElem a = ctx.element(P(i));
            EXPECT_EQ(trace(a * a), trace(a));
            for (std::uint64_t j = 0; j < ctx.order(); ++j) {
                const FieldElem b = ctx.element(P(j));
                EXPECT_EQ(trace(a + b), trace(a) ^ trace(b));
            }
        }
    }
}

TEST(Trace, BalanceOverTheField) {
    // #{a : T(a) = 0} = 2^(n-1); among the q-1 nonzero elements the zero-trace
    // count is 2^(n-1) - 1.
    for (unsigned n = 1; n <= 8; ++n)
        for (const Poly2 g : list_primitive(n)) {
            const FieldCtx ctx(g);
            std::size_t zeros = 0;
            for (std::uint64_t m = 0; m < ctx.order(); ++m)
                if (trace(ctx.element(P(m))) == 0) ++zeros;
            EXPECT_EQ(zeros, std::size_t{1} << (n - 1)) << format_poly(g);
        }
}

TEST(FieldCtx, AlphaGeneratesTheWholeGroup) {
    for (unsigned n = 1; n <= 8; ++n)
        for (const Poly2 g : list_primitive(n)) {
            const FieldCtx ctx(g);
            std::set<std::uint64_t> seen;
            FieldElem e = ctx.one();
            for (std::uint64_t i = 0; i < ctx.group_order(); ++i) {
                EXPECT_EQ(e, ctx.alpha().pow(i));
                seen.insert(e.residue().mask());
                e = e * ctx.alpha();
            }
            EXPECT_EQ(seen.size(), ctx.group_order());
        }
}
