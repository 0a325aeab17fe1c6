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

#ifndef GORCURVES_FIELD_HPP
#define GORCURVES_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace gorcurves {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/**
 * @brief The prime field GF(p).
 *
 * Residues are stored as 32-bit words; the modulus must be a prime with
 * 5 < p < 2^31 so that products fit in 64 bits and small binomial constants
 * stay invertible.
 */
class Field {
   public:
    explicit Field(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
        if (p <= 5 || p >= (1u << 31) || !is_prime(p))
            throw ContractError("characteristic must be a prime in (5, 2^31), got " + std::to_string(p));
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }

    // Extended Euclid.
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return reduce(t);
    }

    friend bool operator==(const Field&, const Field&) = default;

   private:
    static bool is_prime(std::uint32_t n) noexcept {
        if (n < 2) return false;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

/// Element of GF(p); carries its modulus so mixed-field arithmetic is caught.
class FieldElement {
   public:
    FieldElement(std::int64_t value, const Field& field) : value_(field.reduce(value)), p_(field.characteristic()) {}

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return p_; }
    Field field() const { return Field(p_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        std::uint32_t s = value_ + o.value_;
        return raw(s >= p_ ? s - p_ : s);
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return raw(value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_);
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * o.value_ % p_));
    }
    FieldElement operator-() const { return raw(value_ == 0 ? 0 : p_ - value_); }
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

    FieldElement inv() const { return raw(Field(p_).inv(value_)); }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

   private:
    FieldElement() = default;
    FieldElement raw(std::uint32_t v) const {
        FieldElement r;
        r.value_ = v;
        r.p_ = p_;
        return r;
    }
    void check(const FieldElement& o) const {
        if (o.p_ != p_)
            throw ContractError("field mismatch: GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }

    std::uint32_t value_ = 0;
    std::uint32_t p_ = kDefaultCharacteristic;
};

inline FieldElement inv(const FieldElement& a) { return a.inv(); }

}  // namespace gorcurves

#endif  // GORCURVES_FIELD_HPP
