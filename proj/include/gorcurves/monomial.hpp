/*
   Copyright 2026 The gorcurves Authors

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

#ifndef GORCURVES_MONOMIAL_HPP
#define GORCURVES_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace gorcurves {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr unsigned kMaxExponent = 127;
inline constexpr unsigned kMaxDegree = 255;

/**
 * @brief Exponent vector over at most eight variables, packed one byte per
 * variable (variable i in byte i).
 *
 * Exponents are capped at 127 and the total degree at 255 so that the
 * byte-parallel sum and divisibility tests below never carry.
 */
class Monomial {
   public:
    constexpr Monomial() = default;

    explicit Monomial(std::span<const unsigned> exponents) {
        if (exponents.size() > kMaxVariables) throw ContractError("too many variables for a monomial");
        unsigned total = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] > kMaxExponent) throw std::overflow_error("exponent overflow");
            total += exponents[i];
            packed_ |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
        }
        if (total > kMaxDegree) throw std::overflow_error("exponent overflow: total degree above 255");
    }

    static Monomial variable(std::size_t i, unsigned power = 1) {
        std::array<unsigned, kMaxVariables> e{};
        e.at(i) = power;
        return Monomial(e);
    }

    static constexpr Monomial from_packed(std::uint64_t packed) noexcept {
        Monomial m;
        m.packed_ = packed;
        return m;
    }

    constexpr std::uint64_t packed() const noexcept { return packed_; }
    constexpr unsigned operator[](std::size_t i) const noexcept { return (packed_ >> (8 * i)) & 0xffu; }
    constexpr unsigned degree() const noexcept { return byte_sum(packed_); }
    constexpr bool is_one() const noexcept { return packed_ == 0; }

    std::vector<unsigned> exponents(std::size_t n) const {
        std::vector<unsigned> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = (*this)[i];
        return e;
    }

    Monomial operator*(const Monomial& o) const {
        std::uint64_t s = packed_ + o.packed_;
        if ((s & kHigh) != 0 || byte_sum(packed_) + byte_sum(o.packed_) > kMaxDegree)
            throw std::overflow_error("exponent overflow in monomial product");
        return from_packed(s);
    }

    constexpr bool divides(const Monomial& o) const noexcept {
        return (((o.packed_ | kHigh) - packed_) & kHigh) == kHigh;
    }

    // Precondition: divides(o).
    constexpr Monomial quotient_into(const Monomial& o) const noexcept { return from_packed(o.packed_ - packed_); }

    Monomial lcm(const Monomial& o) const noexcept {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < kMaxVariables; ++i) {
            std::uint64_t a = (packed_ >> (8 * i)) & 0xff, b = (o.packed_ >> (8 * i)) & 0xff;
            r |= (a > b ? a : b) << (8 * i);
        }
        return from_packed(r);
    }
    Monomial gcd(const Monomial& o) const noexcept {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < kMaxVariables; ++i) {
            std::uint64_t a = (packed_ >> (8 * i)) & 0xff, b = (o.packed_ >> (8 * i)) & 0xff;
            r |= (a < b ? a : b) << (8 * i);
        }
        return from_packed(r);
    }
    constexpr bool coprime(const Monomial& o) const noexcept {
        for (unsigned i = 0; i < kMaxVariables; ++i)
            if (((packed_ >> (8 * i)) & 0xff) != 0 && ((o.packed_ >> (8 * i)) & 0xff) != 0) return false;
        return true;
    }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

    static constexpr unsigned byte_sum(std::uint64_t v) noexcept {
        return static_cast<unsigned>((v * 0x0101010101010101ull) >> 56);
    }

   private:
    static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    std::uint64_t packed_ = 0;
};

/**
 * @brief Graded reverse lexicographic order with x0 > x1 > ..., optionally
 * refined into a block elimination order.
 *
 * With `eliminated > 0` the first `eliminated` variables form a block that is
 * compared first (grevlex within the block); ties are broken by grevlex on the
 * remaining variables.
 */
class MonomialOrder {
   public:
    constexpr MonomialOrder() = default;
    static constexpr MonomialOrder grevlex() { return MonomialOrder(); }
    static constexpr MonomialOrder elimination(unsigned eliminated) {
        MonomialOrder o;
        o.eliminated_ = eliminated;
        return o;
    }

    constexpr unsigned eliminated() const noexcept { return eliminated_; }
    constexpr bool is_grevlex() const noexcept { return eliminated_ == 0; }

    // Returns >0 if a > b, 0 if equal, <0 if a < b.
    constexpr int compare(const Monomial& a, const Monomial& b) const noexcept {
        if (a == b) return 0;
        if (eliminated_ == 0) return grevlex_compare(a.packed(), b.packed());
        const std::uint64_t mask = eliminated_ >= 8 ? ~0ull : ((1ull << (8 * eliminated_)) - 1);
        int c = grevlex_compare(a.packed() & mask, b.packed() & mask);
        if (c != 0) return c;
        return grevlex_compare(a.packed() & ~mask, b.packed() & ~mask);
    }

    static constexpr int grevlex_compare(std::uint64_t a, std::uint64_t b) noexcept {
        unsigned da = Monomial::byte_sum(a), db = Monomial::byte_sum(b);
        if (da != db) return da > db ? 1 : -1;
        if (a == b) return 0;
        // Highest byte holds the last variable; a smaller exponent there wins.
        return a < b ? 1 : -1;
    }

    friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    unsigned eliminated_ = 0;
};

// Lexicographic comparison with x0 most significant.
inline int lex_compare(const Monomial& a, const Monomial& b) noexcept {
    for (unsigned i = 0; i < kMaxVariables; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

}  // namespace gorcurves

#endif  // GORCURVES_MONOMIAL_HPP
