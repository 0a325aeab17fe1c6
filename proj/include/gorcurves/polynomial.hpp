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

#ifndef GORCURVES_POLYNOMIAL_HPP
#define GORCURVES_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace gorcurves {

/**
 * @brief Variables, coefficient field and monomial order shared by every
 * polynomial of one computation.
 *
 * The standard ring is k[x0..x5] under grevlex. Auxiliary variables used for
 * elimination are prepended and form the eliminated block.
 */
class Ring {
   public:
    Ring(std::vector<std::string> names, Field field, MonomialOrder order)
        : names_(std::move(names)), field_(field), order_(order) {
        if (names_.empty() || names_.size() > kMaxVariables)
            throw ContractError("a ring needs between 1 and 8 variables");
        if (order_.eliminated() >= names_.size()) throw ContractError("elimination block must leave variables");
    }

    static std::shared_ptr<const Ring> make(std::vector<std::string> names, Field field = Field(),
                                            MonomialOrder order = MonomialOrder::grevlex()) {
        return std::make_shared<const Ring>(std::move(names), field, order);
    }

    // k[x0..x(n-1)], grevlex.
    static std::shared_ptr<const Ring> standard(Field field = Field(), std::size_t n = 6) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        return make(std::move(names), field);
    }

    // Same variables with `aux` prepended and eliminated first.
    std::shared_ptr<const Ring> with_auxiliary(const std::vector<std::string>& aux) const {
        std::vector<std::string> names = aux;
        names.insert(names.end(), names_.begin(), names_.end());
        return make(std::move(names), field_, MonomialOrder::elimination(static_cast<unsigned>(aux.size())));
    }

    // Same variables, elimination order on the first `k`.
    std::shared_ptr<const Ring> with_elimination(unsigned k) const {
        return make(names_, field_, k == 0 ? MonomialOrder::grevlex() : MonomialOrder::elimination(k));
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const Field& field() const noexcept { return field_; }
    const MonomialOrder& order() const noexcept { return order_; }

    std::ptrdiff_t index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : it - names_.begin();
    }

    bool same_as(const Ring& o) const { return names_ == o.names_ && field_ == o.field_ && order_ == o.order_; }

   private:
    std::vector<std::string> names_;
    Field field_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
    Monomial monomial;
    std::uint32_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/**
 * @brief Sparse polynomial over GF(p) with terms stored strictly descending in
 * the ring's monomial order and no zero coefficients.
 */
class Polynomial {
   public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    // Normalizes: sorts, merges equal monomials, drops zeros.
    Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    static Polynomial constant(RingPtr ring, std::int64_t c) {
        Polynomial p(ring);
        auto v = ring->field().reduce(c);
        if (v != 0) p.terms_.push_back({Monomial(), v});
        return p;
    }
    static Polynomial variable(RingPtr ring, std::size_t i) {
        if (i >= ring->size()) throw ContractError("variable index out of range");
        Polynomial p(ring);
        p.terms_.push_back({Monomial::variable(i), 1});
        return p;
    }
    static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t c = 1) {
        Polynomial p(ring);
        if (c % ring->field().characteristic() != 0) p.terms_.push_back({m, c % ring->field().characteristic()});
        return p;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

    const Term& leading_term() const {
        if (terms_.empty()) throw ContractError("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().monomial; }
    std::uint32_t leading_coefficient() const { return leading_term().coeff; }

    // Total degree; -1 for the zero polynomial.
    int degree() const noexcept {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
        return d;
    }

    bool is_homogeneous() const noexcept {
        for (const auto& t : terms_)
            if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
        return true;
    }

    // Coefficient of m (zero if absent).
    std::uint32_t coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.monomial == m) return t.coeff;
        return 0;
    }

    bool uses_variable(std::size_t i) const noexcept {
        for (const auto& t : terms_)
            if (t.monomial[i] != 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
    Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Polynomial(ring_);
        const Field& f = ring_->field();
        std::vector<Term> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) prod.push_back({a.monomial * b.monomial, f.mul(a.coeff, b.coeff)});
        return Polynomial(ring_, std::move(prod));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scale(std::uint32_t c) const {
        const Field& f = ring_->field();
        c %= f.characteristic();
        if (c == 0) return Polynomial(ring_);
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, c);
        return r;
    }
    Polynomial scale(const FieldElement& c) const {
        if (c.modulus() != ring_->field().characteristic()) throw ContractError("scalar from a different field");
        return scale(c.value());
    }

    // Multiplies by c * m; order is preserved since monomial orders are multiplicative.
    Polynomial mul_term(const Monomial& m, std::uint32_t c) const {
        const Field& f = ring_->field();
        c %= f.characteristic();
        Polynomial r(ring_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, f.mul(t.coeff, c)});
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(ring_->field().inv(leading_coefficient()));
    }

    // Drops every term containing one of `vars` (restriction to the coordinate subspace).
    Polynomial substitute_zero(const std::vector<std::size_t>& vars) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            bool keep = true;
            for (auto v : vars)
                if (t.monomial[v] != 0) keep = false;
            if (keep) r.terms_.push_back(t);
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        const Field& f = ring_->field();
        std::vector<Term> out;
        for (const auto& t : terms_) {
            unsigned e = t.monomial[var];
            if (e == 0) continue;
            out.push_back({Monomial::from_packed(t.monomial.packed() - (1ull << (8 * var))), f.mul(t.coeff, e)});
        }
        return Polynomial(ring_, std::move(out));
    }

    // Substitutes images[i] for variable i (images live in the target ring).
    Polynomial compose(const std::vector<Polynomial>& images) const {
        if (images.size() != ring_->size()) throw ContractError("compose needs one image per variable");
        const RingPtr& target = images.front().ring();
        Polynomial result(target);
        std::vector<std::vector<Polynomial>> powers(images.size());
        for (const auto& t : terms_) {
            Polynomial term = Polynomial::constant(target, t.coeff);
            for (std::size_t i = 0; i < images.size(); ++i) {
                unsigned e = t.monomial[i];
                if (e == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
                while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
                term = term * pw[e];
            }
            result += term;
        }
        return result;
    }

    // Moves the polynomial to `target`, sending variable i to variable index_map[i].
    Polynomial map_variables(RingPtr target, const std::vector<std::size_t>& index_map) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::array<unsigned, kMaxVariables> e{};
            for (std::size_t i = 0; i < ring_->size(); ++i) {
                if (t.monomial[i] == 0) continue;
                if (i >= index_map.size() || index_map[i] >= target->size())
                    throw ContractError("variable has no image in the target ring");
                e[index_map[i]] += t.monomial[i];
            }
            out.push_back({Monomial(e), t.coeff});
        }
        if (target->field() != ring_->field()) throw ContractError("rings over different fields");
        return Polynomial(std::move(target), std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
    }

    // Canonical text: terms in order, coefficients in the symmetric range.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        const std::uint32_t p = ring_->field().characteristic();
        bool first = true;
        for (const auto& t : terms_) {
            bool negative = t.coeff > p / 2;
            std::uint32_t mag = negative ? p - t.coeff : t.coeff;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            bool printed = false;
            if (mag != 1 || t.monomial.is_one()) {
                os << mag;
                printed = true;
            }
            for (std::size_t i = 0; i < ring_->size(); ++i) {
                unsigned e = t.monomial[i];
                if (e == 0) continue;
                if (printed) os << '*';
                os << ring_->name(i);
                if (e > 1) os << '^' << e;
                printed = true;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

   private:
    void check(const Polynomial& o) const {
        if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw ContractError("polynomials from different rings");
    }

    void normalize() {
        const auto& order = ring_->order();
        const Field& f = ring_->field();
        for (auto& t : terms_) t.coeff %= f.characteristic();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            Term acc = terms_[i++];
            while (i < terms_.size() && terms_[i].monomial == acc.monomial) acc.coeff = f.add(acc.coeff, terms_[i++].coeff);
            if (acc.coeff != 0) terms_[out++] = acc;
        }
        terms_.resize(out);
    }

    Polynomial combine(const Polynomial& o, bool subtract) const {
        check(o);
        const auto& order = ring_->order();
        const Field& f = ring_->field();
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int c;
            if (i == terms_.size())
                c = -1;
            else if (j == o.terms_.size())
                c = 1;
            else
                c = order.compare(terms_[i].monomial, o.terms_[j].monomial);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                auto v = o.terms_[j++];
                if (subtract) v.coeff = f.neg(v.coeff);
                r.terms_.push_back(v);
            } else {
                auto v = subtract ? f.sub(terms_[i].coeff, o.terms_[j].coeff) : f.add(terms_[i].coeff, o.terms_[j].coeff);
                if (v != 0) r.terms_.push_back({terms_[i].monomial, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

// All monomials of total degree d in the listed variables, in ascending variable-index recursion order.
inline std::vector<Monomial> monomials_of_degree(unsigned d, const std::vector<std::size_t>& vars) {
    std::vector<Monomial> out;
    std::array<unsigned, kMaxVariables> e{};
    auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
        if (k + 1 == vars.size()) {
            e[vars[k]] = left;
            out.push_back(Monomial(e));
            e[vars[k]] = 0;
            return;
        }
        for (unsigned a = left + 1; a-- > 0;) {
            e[vars[k]] = a;
            self(self, k + 1, left - a);
        }
        e[vars[k]] = 0;
    };
    if (vars.empty()) {
        if (d == 0) out.push_back(Monomial());
        return out;
    }
    rec(rec, 0, d);
    return out;
}

inline std::vector<std::size_t> all_variables(const Ring& ring) {
    std::vector<std::size_t> v(ring.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

// Deterministic, platform-independent draw from GF(p).
inline std::uint32_t random_coefficient(std::mt19937_64& rng, const Field& f) {
    return static_cast<std::uint32_t>(rng() % f.characteristic());
}

/**
 * @brief Random homogeneous form of the given degree in the allowed variables.
 *
 * Without a membership ideal every monomial gets a uniform coefficient. With
 * one, the form is a sum of random multiples of the generators (restricted to
 * the allowed variables), so membership holds by construction. Generators of
 * degree above `degree` are skipped; if none remain the form would be empty
 * and StructureError is thrown.
 */
inline Polynomial random_form(const RingPtr& ring, unsigned degree, const std::vector<std::size_t>& allowed,
                              const std::vector<Polynomial>& membership, std::mt19937_64& rng) {
    if (degree < 1) throw StructureError("random_form needs degree >= 1");
    const Field& f = ring->field();
    if (membership.empty()) {
        std::vector<Term> terms;
        for (const auto& m : monomials_of_degree(degree, allowed)) terms.push_back({m, random_coefficient(rng, f)});
        return Polynomial(ring, std::move(terms));
    }
    Polynomial acc(ring);
    bool any = false;
    for (const auto& g : membership) {
        int dg = g.degree();
        if (dg < 0 || dg > static_cast<int>(degree)) continue;
        any = true;
        unsigned rest = degree - static_cast<unsigned>(dg);
        std::vector<Term> terms;
        for (const auto& m : monomials_of_degree(rest, allowed)) terms.push_back({m, random_coefficient(rng, f)});
        acc += Polynomial(ring, std::move(terms)) * g;
    }
    if (!any) throw StructureError("no generator of the membership ideal fits in degree " + std::to_string(degree));
    return acc;
}

inline Polynomial random_form(const RingPtr& ring, unsigned degree, const std::vector<std::size_t>& allowed,
                              std::mt19937_64& rng) {
    return random_form(ring, degree, allowed, {}, rng);
}

// The variables x_i for i in `vars`, as polynomials.
inline std::vector<Polynomial> variables(const RingPtr& ring, const std::vector<std::size_t>& vars) {
    std::vector<Polynomial> out;
    for (auto v : vars) out.push_back(Polynomial::variable(ring, v));
    return out;
}

}  // namespace gorcurves

#endif  // GORCURVES_POLYNOMIAL_HPP
