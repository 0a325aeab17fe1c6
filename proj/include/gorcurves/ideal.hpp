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

#ifndef GORCURVES_IDEAL_HPP
#define GORCURVES_IDEAL_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "polynomial.hpp"

namespace gorcurves {

/**
 * @brief Ideal of a polynomial ring, given by generators, with a lazily
 * computed reduced Gröbner basis and Hilbert data.
 *
 * Copies share the cache. Each cache slot is filled at most once.
 */
class Ideal {
   public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

    Ideal(RingPtr ring, std::vector<Polynomial> gens) : Ideal(std::move(ring)) {
        for (auto& g : gens) {
            if (!g.ring()->same_as(*ring_)) throw ContractError("generator from a different ring");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

    // The ideal generated by the listed variables.
    static Ideal of_variables(const RingPtr& ring, const std::vector<std::size_t>& vars) {
        return Ideal(ring, variables(ring, vars));
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    bool is_homogeneous() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
    }

    /// Reduced, monic Gröbner basis, sorted ascending by leading monomial.
    const std::vector<Polynomial>& groebner() const {
        std::call_once(cache_->gb_once, [this] {
            detail::ModuleOrder ord(ring_->order(), 1);
            std::vector<detail::Vec> in;
            in.reserve(gens_.size());
            for (const auto& g : gens_) in.push_back(detail::to_vec(g));
            auto basis = detail::groebner_basis(std::move(in), ord, ring_->field());
            for (const auto& v : basis) cache_->gb.push_back(detail::to_polynomial(v, ring_));
        });
        return cache_->gb;
    }

    bool is_unit() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb.front().is_constant();
    }

    /// Remainder of f on division by the Gröbner basis; zero iff f is in the ideal.
    Polynomial normal_form(const Polynomial& f) const {
        if (!f.ring()->same_as(*ring_)) throw ContractError("normal form of a polynomial from a different ring");
        const auto& gb = groebner();
        detail::ModuleOrder ord(ring_->order(), 1);
        detail::DivisorTable table(1);
        std::vector<detail::Vec> elems;
        elems.reserve(gb.size());
        for (const auto& g : gb) {
            elems.push_back(detail::to_vec(g));
            table.add(static_cast<std::uint32_t>(elems.size() - 1), elems.back());
        }
        return detail::to_polynomial(detail::reduce(detail::to_vec(f), elems, table, ord, ring_->field(), false),
                                     ring_);
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool contains(const Ideal& other) const {
        return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
    }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& g : groebner()) out.push_back(g.leading_monomial());
        return out;
    }

    /// Hilbert series data of S/I, from the leading-term ideal.
    const HilbertData& hilbert() const {
        std::call_once(cache_->hilbert_once, [this] {
            if (!is_homogeneous()) throw StructureError("Hilbert series needs a homogeneous ideal");
            if (!ring_->order().is_grevlex()) throw ContractError("Hilbert data is computed in a grevlex ring");
            cache_->hilbert = hilbert_from_leading_terms(leading_monomials(), ring_->size());
        });
        return *cache_->hilbert;
    }

    // Krull dimension of S/I (valid for inhomogeneous ideals in a degree order too).
    int krull_dimension() const {
        return hilbert_from_leading_terms(leading_monomials(), ring_->size()).krull_dimension;
    }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring_->same_as(*b.ring_) && a.groebner() == b.groebner();
    }

    Ideal operator+(const Ideal& o) const {
        if (!ring_->same_as(*o.ring_)) throw ContractError("ideals in different rings");
        std::vector<Polynomial> g = gens_;
        g.insert(g.end(), o.gens_.begin(), o.gens_.end());
        return Ideal(ring_, std::move(g));
    }

    Ideal with_generators_added(const std::vector<Polynomial>& extra) const {
        std::vector<Polynomial> g = gens_;
        g.insert(g.end(), extra.begin(), extra.end());
        return Ideal(ring_, std::move(g));
    }

    // The reduced Gröbner basis as generators (fresh cache, same ideal).
    Ideal canonical() const { return Ideal(ring_, groebner()); }

   private:
    struct Cache {
        std::once_flag gb_once;
        std::vector<Polynomial> gb;
        std::once_flag hilbert_once;
        std::optional<HilbertData> hilbert;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Exact quotient h / g. Throws StructureError when g does not divide h.
inline Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
    if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
    const RingPtr& ring = h.ring();
    const Field& f = ring->field();
    std::vector<Term> quotient;
    Polynomial rest = h;
    const std::uint32_t inv_lc = f.inv(g.leading_coefficient());
    while (!rest.is_zero()) {
        const Term& t = rest.leading_term();
        if (!g.leading_monomial().divides(t.monomial)) throw StructureError("exact_divide: not divisible");
        Monomial q = g.leading_monomial().quotient_into(t.monomial);
        std::uint32_t c = f.mul(t.coeff, inv_lc);
        quotient.push_back({q, c});
        rest -= g.mul_term(q, c);
    }
    return Polynomial(ring, std::move(quotient));
}

/**
 * @brief I ∩ (subring without `vars`).
 *
 * The listed variables are moved to the front, a block elimination order is
 * imposed on them, and the basis elements free of them are kept. The result
 * lives in the ring of I.
 */
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars) {
    const RingPtr& ring = ideal.ring();
    if (vars.empty()) return ideal;
    const std::size_t n = ring->size();
    std::vector<std::size_t> to(n), from(n);
    std::vector<bool> elim(n, false);
    for (auto v : vars) elim.at(v) = true;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (elim[i]) to[i] = next++;
    const unsigned block = static_cast<unsigned>(next);
    for (std::size_t i = 0; i < n; ++i)
        if (!elim[i]) to[i] = next++;
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[to[i]] = ring->name(i);
        from[to[i]] = i;
    }
    auto elim_ring = Ring::make(names, ring->field(), MonomialOrder::elimination(block));
    std::vector<Polynomial> mapped;
    for (const auto& g : ideal.generators()) mapped.push_back(g.map_variables(elim_ring, to));
    Ideal lifted(elim_ring, mapped);
    std::vector<Polynomial> kept;
    for (const auto& g : lifted.groebner()) {
        bool free = true;
        for (std::size_t i = 0; i < block; ++i)
            if (g.uses_variable(i)) free = false;
        if (free) kept.push_back(g.map_variables(ring, from));
    }
    return Ideal(ring, std::move(kept));
}

/**
 * @brief I ∩ J via w·I + (1 − w)·J with an auxiliary variable w eliminated.
 */
inline Ideal intersect(const Ideal& a, const Ideal& b) {
    const RingPtr& ring = a.ring();
    if (!ring->same_as(*b.ring())) throw ContractError("intersect: ideals in different rings");
    if (a.is_zero() || b.is_zero()) return Ideal(ring);
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    auto aux = ring->with_auxiliary({"w_"});
    std::vector<std::size_t> shift(ring->size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
    const Polynomial w = Polynomial::variable(aux, 0);
    const Polynomial one_minus_w = Polynomial::constant(aux, 1) - w;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(w * g.map_variables(aux, shift));
    for (const auto& g : b.generators()) gens.push_back(one_minus_w * g.map_variables(aux, shift));
    Ideal big(aux, std::move(gens));
    std::vector<std::size_t> back(aux->size());
    for (std::size_t i = 1; i < back.size(); ++i) back[i] = i - 1;
    std::vector<Polynomial> kept;
    for (const auto& g : big.groebner())
        if (!g.uses_variable(0)) kept.push_back(g.map_variables(ring, back));
    return Ideal(ring, std::move(kept));
}

/// (I : g) = (I ∩ (g)) / g.
inline Ideal colon(const Ideal& ideal, const Polynomial& g) {
    const RingPtr& ring = ideal.ring();
    if (g.is_zero()) return Ideal::unit(ring);
    if (g.is_constant()) return ideal;
    Ideal meet = intersect(ideal, Ideal(ring, {g}));
    std::vector<Polynomial> out;
    for (const auto& h : meet.generators()) out.push_back(exact_divide(h, g));
    return Ideal(ring, std::move(out));
}

/// (I : J) = ∩ over generators g of J of (I : g).
inline Ideal colon(const Ideal& ideal, const Ideal& other) {
    if (!ideal.ring()->same_as(*other.ring())) throw ContractError("colon: ideals in different rings");
    std::optional<Ideal> acc;
    for (const auto& g : other.generators()) {
        Ideal part = colon(ideal, g);
        if (part.is_unit()) continue;
        acc = acc ? intersect(*acc, part) : part;
    }
    return acc ? *acc : Ideal::unit(ideal.ring());
}

struct Saturation {
    Ideal ideal;
    int index;  ///< number of colon steps that enlarged the ideal
};

/// (I : J^∞) by iterated colon until the ideal stops growing.
inline Saturation saturate(const Ideal& ideal, const Ideal& other) {
    Ideal current = ideal;
    int index = 0;
    for (;;) {
        Ideal next = colon(current, other);
        if (current.contains(next)) return {current, index};
        current = next;
        ++index;
    }
}

inline Ideal irrelevant_ideal(const RingPtr& ring) { return Ideal::of_variables(ring, all_variables(*ring)); }

}  // namespace gorcurves

#endif  // GORCURVES_IDEAL_HPP
