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

#ifndef MSEQCORR_GF2POLY_HPP
#define MSEQCORR_GF2POLY_HPP

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mseqcorr {

/// A polynomial over GF(2), bit-packed: bit i of the mask is the coefficient
/// of x^i (constant term at bit 0). The mask is the canonical form, so
/// equality is mask equality. Degrees are capped at 63; products that would
/// exceed the cap throw.
class Poly2 {
  public:
    /// Distinguished "-inf" degree marker for the zero polynomial. Never use
    /// it in arithmetic; check is_zero() first.
    static constexpr int neg_inf_degree = std::numeric_limits<int>::min();

    constexpr Poly2() noexcept = default;
    static constexpr Poly2 from_mask(std::uint64_t mask) noexcept { return Poly2(mask); }
    static constexpr Poly2 zero() noexcept { return Poly2(0); }
    static constexpr Poly2 one() noexcept { return Poly2(1); }
    static constexpr Poly2 x() noexcept { return Poly2(2); }
    static constexpr Poly2 x_pow(unsigned k) {
        if (k > 63) throw std::invalid_argument("Poly2: exponent exceeds 63");
        return Poly2(std::uint64_t{1} << k);
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr bool is_zero() const noexcept { return mask_ == 0; }
    constexpr bool is_one() const noexcept { return mask_ == 1; }
    constexpr bool coeff(unsigned i) const noexcept { return i < 64 && ((mask_ >> i) & 1u); }
    constexpr bool constant_term() const noexcept { return mask_ & 1u; }

    constexpr int degree() const noexcept {
        if (mask_ == 0) return neg_inf_degree;
        return 63 - std::countl_zero(mask_);
    }

    friend constexpr Poly2 operator+(Poly2 a, Poly2 b) noexcept { return Poly2(a.mask_ ^ b.mask_); }
    constexpr Poly2& operator+=(Poly2 b) noexcept {
        mask_ ^= b.mask_;
        return *this;
    }

    /// Carry-less product. Throws std::overflow_error if the product degree
    /// would not fit in 64 bits (operand degrees in this library stay < 50).
    friend Poly2 operator*(Poly2 a, Poly2 b) {
        if (a.is_zero() || b.is_zero()) return zero();
        if (a.degree() + b.degree() > 63) throw std::overflow_error("Poly2: product degree exceeds 63");
        std::uint64_t r = 0;
        std::uint64_t m = a.mask_;
        for (std::uint64_t bm = b.mask_; bm != 0; bm >>= 1, m <<= 1)
            if (bm & 1u) r ^= m;
        return Poly2(r);
    }

    friend constexpr bool operator==(Poly2 a, Poly2 b) noexcept = default;
    /// Orders by mask value (the listing order used throughout).
    friend constexpr auto operator<=>(Poly2 a, Poly2 b) noexcept { return a.mask_ <=> b.mask_; }

  private:
    constexpr explicit Poly2(std::uint64_t mask) noexcept : mask_(mask) {}
    std::uint64_t mask_ = 0;
};

struct DivModResult {
    Poly2 quotient;
    Poly2 remainder;
};

/// Euclidean division: a = q*m + r with deg r < deg m. m must be nonzero.
inline DivModResult poly_divmod(Poly2 a, Poly2 m) {
    if (m.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const int dm = m.degree();
    std::uint64_t rem = a.mask();
    std::uint64_t q = 0;
    while (!Poly2::from_mask(rem).is_zero()) {
        const int dr = Poly2::from_mask(rem).degree();
        if (dr < dm) break;
        const int s = dr - dm;
        q |= std::uint64_t{1} << s;
        rem ^= m.mask() << s;
    }
    return {Poly2::from_mask(q), Poly2::from_mask(rem)};
}

inline Poly2 operator%(Poly2 a, Poly2 m) { return poly_divmod(a, m).remainder; }

struct ExtGcdResult {
    Poly2 gcd;  // monic (automatic for nonzero polynomials over GF(2))
    Poly2 s;
    Poly2 t;  // a*s + b*t = gcd
};

/// Extended Euclid in GF(2)[x]. Requires not both inputs zero.
inline ExtGcdResult poly_ext_gcd(Poly2 a, Poly2 b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_ext_gcd: gcd(0, 0) undefined");
    Poly2 r0 = a, r1 = b;
    Poly2 s0 = Poly2::one(), s1 = Poly2::zero();
    Poly2 t0 = Poly2::zero(), t1 = Poly2::one();
    while (!r1.is_zero()) {
        const auto [q, r] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        const Poly2 s2 = s0 + q * s1;
        s0 = s1;
        s1 = s2;
        const Poly2 t2 = t0 + q * t1;
        t0 = t1;
        t1 = t2;
    }
    return {r0, s0, t0};
}

/// Thrown when a modular inverse does not exist; carries the offending gcd.
class NotInvertibleError : public std::domain_error {
  public:
    NotInvertibleError(const std::string& what, Poly2 gcd) : std::domain_error(what), gcd_(gcd) {}
    Poly2 gcd() const noexcept { return gcd_; }

  private:
    Poly2 gcd_;
};

std::string format_poly(Poly2 p);

/// Unique F with deg F < deg m and a*F = 1 (mod m). Requires deg m >= 1 and
/// gcd(a mod m, m) = 1.
inline Poly2 poly_mod_inverse(Poly2 a, Poly2 m) {
    if (m.is_zero() || m.degree() < 1) throw std::invalid_argument("poly_mod_inverse: modulus must have degree >= 1");
    a = a % m;
    if (a.is_zero()) throw NotInvertibleError("poly_mod_inverse: zero residue has no inverse", m);
    const ExtGcdResult e = poly_ext_gcd(a, m);
    if (!e.gcd.is_one())
        throw NotInvertibleError("poly_mod_inverse: not invertible, gcd = " + format_poly(e.gcd), e.gcd);
    return e.s % m;
}

namespace detail {

/// Distinct prime factors by trial division; fine for the 2^24-1 scale used
/// by the primitivity test.
inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

/// x^(2^k) mod g by k modular squarings.
inline Poly2 x_pow_pow2_mod(unsigned k, Poly2 g) {
    Poly2 h = Poly2::x() % g;
    for (unsigned i = 0; i < k; ++i) h = (h * h) % g;
    return h;
}

}  // namespace detail

/// Frobenius-based irreducibility criterion: x^(2^n) = x (mod g) and
/// gcd(x^(2^(n/p)) - x, g) = 1 for each prime p | n. Requires deg g >= 1.
inline bool is_irreducible(Poly2 g) {
    if (g.is_zero() || g.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    const unsigned n = static_cast<unsigned>(g.degree());
    if (detail::x_pow_pow2_mod(n, g) != Poly2::x() % g) return false;
    for (std::uint64_t p : detail::distinct_prime_factors(n)) {
        const Poly2 h = detail::x_pow_pow2_mod(n / static_cast<unsigned>(p), g) + Poly2::x() % g;
        const Poly2 d = h.is_zero() ? g : poly_ext_gcd(h, g).gcd;
        if (!d.is_one()) return false;
    }
    return true;
}

inline Poly2 poly_pow_mod(Poly2 a, std::uint64_t e, Poly2 m) {
    Poly2 r = Poly2::one() % m;
    Poly2 b = a % m;
    while (e != 0) {
        if (e & 1u) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

/// True iff g is irreducible and the residue class of x has multiplicative
/// order 2^n - 1. Degree capped at 24 so 2^n - 1 factors by trial division.
inline bool is_primitive(Poly2 g) {
    if (g.is_zero() || g.degree() < 1) throw std::invalid_argument("is_primitive: degree must be >= 1");
    const unsigned n = static_cast<unsigned>(g.degree());
    if (n > 24) throw std::out_of_range("is_primitive: degree cap is 24");
    if (!is_irreducible(g)) return false;
    const std::uint64_t group = (std::uint64_t{1} << n) - 1;
    if (poly_pow_mod(Poly2::x(), group, g) != Poly2::one()) return false;
    for (std::uint64_t p : detail::distinct_prime_factors(group))
        if (poly_pow_mod(Poly2::x(), group / p, g) == Poly2::one()) return false;
    return true;
}

/// All primitive polynomials of degree n, ascending by mask. The count is
/// phi(2^n - 1) / n.
inline std::vector<Poly2> list_primitive(unsigned n) {
    if (n < 1 || n > 16) throw std::out_of_range("list_primitive: degree must be in [1, 16]");
    std::vector<Poly2> out;
    const std::uint64_t lo = std::uint64_t{1} << n;
    for (std::uint64_t m = lo; m < 2 * lo; ++m) {
        const Poly2 g = Poly2::from_mask(m);
        if (is_primitive(g)) out.push_back(g);
    }
    return out;
}

/// Text form: sum of terms x^k / x / 1, descending exponents; zero prints as
/// "0". parse_poly accepts this grammar plus hex masks with an 0x prefix.
inline std::string format_poly(Poly2 p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!p.coeff(static_cast<unsigned>(i))) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

inline std::string format_poly_hex(Poly2 p) {
    static const char* digits = "0123456789ABCDEF";
    std::uint64_t m = p.mask();
    std::string out;
    do {
        out.insert(out.begin(), digits[m & 0xF]);
        m >>= 4;
    } while (m != 0);
    return "0x" + out;
}

inline Poly2 parse_poly(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw std::invalid_argument("parse_poly: empty input");

    if (s.size() > 2 && (s[0] == '0') && (s[1] == 'x' || s[1] == 'X')) {
        std::uint64_t m = 0;
        for (std::size_t i = 2; i < s.size(); ++i) {
            const char c = s[i];
            int d;
            if (c >= '0' && c <= '9')
                d = c - '0';
            else if (c >= 'a' && c <= 'f')
                d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                d = c - 'A' + 10;
            else
                throw std::invalid_argument("parse_poly: bad hex digit '" + std::string(1, c) + "'");
            if (m >> 60) throw std::invalid_argument("parse_poly: hex mask exceeds 64 bits");
            m = (m << 4) | static_cast<std::uint64_t>(d);
        }
        return Poly2::from_mask(m);
    }

    if (s == "0") return Poly2::zero();

    std::uint64_t mask = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        const std::string_view term(s.data() + pos, end - pos);
        unsigned exp;
        if (term == "1") {
            exp = 0;
        } else if (term == "x") {
            exp = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            exp = 0;
            for (std::size_t i = 2; i < term.size(); ++i) {
                if (term[i] < '0' || term[i] > '9')
                    throw std::invalid_argument("parse_poly: bad exponent in '" + std::string(term) + "'");
                exp = exp * 10 + static_cast<unsigned>(term[i] - '0');
                if (exp > 63) throw std::invalid_argument("parse_poly: exponent exceeds 63");
            }
        } else {
            throw std::invalid_argument("parse_poly: malformed term '" + std::string(term) + "'");
        }
        const std::uint64_t bit = std::uint64_t{1} << exp;
        if (mask & bit) throw std::invalid_argument("parse_poly: duplicate exponent " + std::to_string(exp));
        mask |= bit;
        pos = end + 1;
        if (end == s.size()) break;
        if (pos >= s.size()) throw std::invalid_argument("parse_poly: trailing '+'");
    }
    return Poly2::from_mask(mask);
}

}  // namespace mseqcorr

#endif  // MSEQCORR_GF2POLY_HPP
