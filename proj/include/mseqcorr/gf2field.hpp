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

#ifndef MSEQCORR_GF2FIELD_HPP
#define MSEQCORR_GF2FIELD_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "gf2poly.hpp"

namespace mseqcorr {

class FieldElem;

/// GF(2^n) arithmetic context over a primitive modulus. Immutable after
/// construction (including the precomputed trace table), so it can be shared
/// freely across threads. Elements hold a pointer to their context; the
/// context must outlive them.
class FieldCtx {
  public:
    /// Throws std::invalid_argument unless the modulus is primitive.
    explicit FieldCtx(Poly2 modulus);

    unsigned degree() const noexcept { return n_; }
    std::uint64_t order() const noexcept { return std::uint64_t{1} << n_; }        // q
    std::uint64_t group_order() const noexcept { return order() - 1; }             // q - 1
    Poly2 modulus() const noexcept { return modulus_; }

    FieldElem zero() const noexcept;
    FieldElem one() const noexcept;
    /// The residue class of x; a generator of the multiplicative group.
    FieldElem alpha() const noexcept;
    /// Any polynomial, reduced mod the modulus.
    FieldElem element(Poly2 p) const noexcept;

    /// Contexts with equal modulus masks are interchangeable.
    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
        return a.modulus_ == b.modulus_;
    }

    std::uint32_t trace_table() const noexcept { return trace_mask_; }

  private:
    Poly2 modulus_;
    unsigned n_;
    std::uint32_t trace_mask_;  // bit i = T(x^i)
};

/// An element of a FieldCtx: a residue of degree < n plus context identity.
/// Elements of different contexts never combine.
class FieldElem {
  public:
    Poly2 residue() const noexcept { return residue_; }
    const FieldCtx& ctx() const noexcept { return *ctx_; }
    bool is_zero() const noexcept { return residue_.is_zero(); }
    bool is_one() const noexcept { return residue_.is_one(); }

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return *a.ctx_ == *b.ctx_ && a.residue_ == b.residue_;
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check_same_ctx(a, b);
        return FieldElem(a.residue_ + b.residue_, a.ctx_);
    }

    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check_same_ctx(a, b);
        return FieldElem((a.residue_ * b.residue_) % a.ctx_->modulus(), a.ctx_);
    }

    /// a^e by square-and-multiply; a^0 = 1.
    FieldElem pow(std::uint64_t e) const {
        FieldElem r(Poly2::one(), ctx_);
        FieldElem b = *this;
        while (e != 0) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

  private:
    friend class FieldCtx;
    friend int trace(const FieldElem&);
    friend int trace_by_squaring(const FieldElem&);

    FieldElem(Poly2 residue, const FieldCtx* ctx) noexcept : residue_(residue), ctx_(ctx) {}

    static void check_same_ctx(const FieldElem& a, const FieldElem& b) {
        if (!(*a.ctx_ == *b.ctx_))
            throw std::invalid_argument("FieldElem: elements belong to different field contexts");
    }

    Poly2 residue_;
    const FieldCtx* ctx_;
};

inline FieldElem FieldCtx::zero() const noexcept { return FieldElem(Poly2::zero(), this); }
inline FieldElem FieldCtx::one() const noexcept { return FieldElem(Poly2::one(), this); }
inline FieldElem FieldCtx::alpha() const noexcept { return FieldElem(Poly2::x() % modulus_, this); }
inline FieldElem FieldCtx::element(Poly2 p) const noexcept { return FieldElem(p % modulus_, this); }

/// T(a) = a + a^2 + ... + a^(2^(n-1)), evaluated by the squaring chain.
/// The accumulated element always lands in {0, 1}.
inline int trace_by_squaring(const FieldElem& a) {
    const unsigned n = a.ctx().degree();
    Poly2 acc = a.residue_;
    Poly2 s = a.residue_;
    const Poly2 g = a.ctx().modulus();
    for (unsigned k = 1; k < n; ++k) {
        s = (s * s) % g;
        acc += s;
    }
    assert(acc.is_zero() || acc.is_one());
    return acc.is_one() ? 1 : 0;
}

/// Table route: T is GF(2)-linear, so T(a) is the parity of the basis traces
/// selected by a's residue bits. Cross-checked against the squaring chain in
/// debug builds.
inline int trace(const FieldElem& a) {
    const int t = std::popcount(a.residue_.mask() & a.ctx().trace_table()) & 1;
    assert(t == trace_by_squaring(a));
    return t;
}

inline FieldCtx::FieldCtx(Poly2 modulus) : modulus_(modulus) {
    if (modulus.is_zero() || modulus.degree() < 1 || !is_primitive(modulus))
        throw std::invalid_argument("FieldCtx: modulus must be a primitive polynomial");
    n_ = static_cast<unsigned>(modulus.degree());
    trace_mask_ = 0;
    for (unsigned i = 0; i < n_; ++i) {
        const FieldElem basis(Poly2::x_pow(i) % modulus_, this);
        if (trace_by_squaring(basis)) trace_mask_ |= std::uint32_t{1} << i;
    }
}

}  // namespace mseqcorr

#endif  // MSEQCORR_GF2FIELD_HPP
