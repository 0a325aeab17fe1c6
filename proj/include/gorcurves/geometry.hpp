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

#ifndef GORCURVES_GEOMETRY_HPP
#define GORCURVES_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace gorcurves {

namespace detail {

// Dense univariate polynomials over GF(p), coefficient of x^k at index k.
using UPoly = std::vector<std::uint32_t>;

inline void utrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly umod(UPoly a, const UPoly& b, const Field& f) {
    utrim(a);
    const std::uint32_t inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        const std::uint32_t c = f.mul(a.back(), inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = f.sub(a[shift + k], f.mul(c, b[k]));
        utrim(a);
    }
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b, const Field& f) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline UPoly uderivative(const UPoly& a, const Field& f) {
    UPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(f.mul(static_cast<std::uint32_t>(k % f.characteristic()), a[k]));
    utrim(d);
    return d;
}

// Linear generators of the reduced basis that are single variables.
inline std::vector<std::size_t> coordinate_linear_part(const Ideal& ideal, bool& only_coordinates) {
    std::vector<std::size_t> vars;
    only_coordinates = true;
    for (const auto& g : ideal.groebner()) {
        if (g.degree() != 1) continue;
        if (g.size() != 1) {
            only_coordinates = false;
            continue;
        }
        const Monomial m = g.leading_monomial();
        for (std::size_t i = 0; i < ideal.ring()->size(); ++i)
            if (m[i] == 1) vars.push_back(i);
    }
    return vars;
}

}  // namespace detail

/// Outcome of the Jacobian test on a projective curve.
struct SmoothnessResult {
    bool smooth = false;
    int codimension = 0;           ///< codimension in the linear span
    std::size_t span_dimension = 0;  ///< number of span coordinates
    std::string detail;
};

/**
 * @brief Jacobian criterion for a curve lying in a coordinate subspace.
 *
 * The equations are restricted to the span; c + 1 random elements of I in a
 * common degree D (D = top degree of the reduced basis) give a Jacobian whose
 * c × c minors lie in the Jacobian ideal of I modulo I. If I plus these minors
 * defines the empty projective set the curve is smooth. A failing random test
 * is retried with more elements and then with all minors of the basis
 * Jacobian, so a negative answer is exact.
 */
inline SmoothnessResult check_smoothness(const Ideal& curve, std::mt19937_64& rng) {
    SmoothnessResult out;
    const RingPtr& ring = curve.ring();
    const std::size_t n = ring->size();
    if (!curve.is_homogeneous()) throw StructureError("smoothness test needs a homogeneous ideal");
    if (curve.is_unit() || curve.hilbert().krull_dimension != 2) {
        out.detail = "not a curve";
        return out;
    }
    bool coordinates = true;
    std::vector<std::size_t> linear = detail::coordinate_linear_part(curve, coordinates);
    if (!coordinates) linear.clear();
    std::vector<std::size_t> span;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(linear.begin(), linear.end(), i) == linear.end()) span.push_back(i);
    out.span_dimension = span.size();
    const int c = static_cast<int>(span.size()) - 2;
    out.codimension = c;

    std::vector<Polynomial> eqs;
    int top = 0;
    for (const auto& g : curve.groebner()) {
        Polynomial r = g.substitute_zero(linear);
        if (r.is_zero()) continue;
        eqs.push_back(r);
        top = std::max(top, r.degree());
    }
    std::vector<Polynomial> base = variables(ring, linear);
    base.insert(base.end(), eqs.begin(), eqs.end());

    if (c <= 0) {
        out.smooth = true;
        out.detail = "linear span is the curve";
        return out;
    }

    auto minors_of = [&](const std::vector<std::vector<Polynomial>>& jac) {
        // All c × c minors by cofactor expansion over row and column subsets.
        std::vector<Polynomial> minors;
        const std::size_t rows = jac.size(), cols = span.size();
        std::vector<std::size_t> rsel, csel;
        auto det = [&](auto&& self, std::vector<std::size_t> rs, std::vector<std::size_t> cs) -> Polynomial {
            if (rs.empty()) return Polynomial::constant(ring, 1);
            Polynomial acc(ring);
            for (std::size_t k = 0; k < cs.size(); ++k) {
                const Polynomial& e = jac[rs[0]][cs[k]];
                if (e.is_zero()) continue;
                std::vector<std::size_t> r2(rs.begin() + 1, rs.end()), c2 = cs;
                c2.erase(c2.begin() + static_cast<std::ptrdiff_t>(k));
                Polynomial t = e * self(self, r2, c2);
                if (k % 2 == 0)
                    acc += t;
                else
                    acc -= t;
            }
            return acc;
        };
        auto choose = [](std::size_t total, std::size_t k) {
            std::vector<std::vector<std::size_t>> out;
            std::vector<std::size_t> cur;
            auto rec = [&](auto&& self, std::size_t start) -> void {
                if (cur.size() == k) {
                    out.push_back(cur);
                    return;
                }
                for (std::size_t i = start; i < total; ++i) {
                    cur.push_back(i);
                    self(self, i + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
            return out;
        };
        for (const auto& rs : choose(rows, static_cast<std::size_t>(c)))
            for (const auto& cs : choose(cols, static_cast<std::size_t>(c))) {
                Polynomial m = det(det, rs, cs);
                if (!m.is_zero()) minors.push_back(std::move(m));
            }
        return minors;
    };
    auto jacobian = [&](const std::vector<Polynomial>& fs) {
        std::vector<std::vector<Polynomial>> jac;
        for (const auto& f : fs) {
            std::vector<Polynomial> row;
            for (auto v : span) row.push_back(f.derivative(v));
            jac.push_back(std::move(row));
        }
        return jac;
    };
    auto empty_locus = [&](const std::vector<Polynomial>& minors) {
        std::vector<Polynomial> gens = base;
        gens.insert(gens.end(), minors.begin(), minors.end());
        Ideal sing(ring, std::move(gens));
        return sing.is_unit() || sing.krull_dimension() <= 0;
    };

    for (int extra = 1; extra <= 2; ++extra) {
        std::vector<Polynomial> combos;
        for (int k = 0; k < c + extra; ++k) {
            Polynomial h(ring);
            for (const auto& e : eqs) {
                const int rest = top - e.degree();
                h += rest == 0 ? e.scale(random_coefficient(rng, ring->field()))
                               : random_form(ring, static_cast<unsigned>(rest), span, rng) * e;
            }
            combos.push_back(std::move(h));
        }
        if (empty_locus(minors_of(jacobian(combos)))) {
            out.smooth = true;
            out.detail = "Jacobian test with " + std::to_string(c + extra) + " random elements";
            return out;
        }
    }
    out.smooth = empty_locus(minors_of(jacobian(eqs)));
    out.detail = out.smooth ? "Jacobian test with all basis minors" : "singular locus is nonempty";
    return out;
}

/// Outcome of the reduced-intersection test.
struct IntersectionResult {
    bool zero_dimensional = false;
    std::int64_t degree = 0;
    bool reduced = false;
    std::uint64_t aux_seed = 0;
    std::string detail;
};

/**
 * @brief Z = saturation of I1 + I2; checks dim Z = 0 and reducedness.
 *
 * After a random linear change of coordinates all but the last two variables
 * are eliminated. Z is reduced of length δ exactly when the resulting binary
 * form has degree δ and, on the chart x_{n-1} = 1, no repeated root.
 */
inline IntersectionResult check_intersection(const Ideal& a, const Ideal& b, std::uint64_t aux_seed) {
    IntersectionResult out;
    out.aux_seed = aux_seed;
    const RingPtr& ring = a.ring();
    const std::size_t n = ring->size();
    const Field& f = ring->field();
    Ideal z = saturate(a + b, irrelevant_ideal(ring)).ideal;
    if (z.is_unit()) {
        out.zero_dimensional = true;
        out.reduced = true;
        out.detail = "empty intersection";
        return out;
    }
    const HilbertData& h = z.hilbert();
    if (h.krull_dimension != 1) {
        out.detail = "intersection has projective dimension " + std::to_string(h.projective_dimension());
        return out;
    }
    out.zero_dimensional = true;
    out.degree = h.degree;

    std::mt19937_64 rng(aux_seed);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(random_form(ring, 1, all_variables(*ring), rng));
    std::vector<Polynomial> moved;
    for (const auto& g : z.generators()) moved.push_back(g.compose(images));
    std::vector<std::size_t> elim;
    for (std::size_t i = 0; i + 2 < n; ++i) elim.push_back(i);
    Ideal line = eliminate(Ideal(ring, std::move(moved)), elim);

    // gcd of the binary forms, dehomogenized at the last variable.
    detail::UPoly g;
    for (const auto& p : line.generators()) {
        detail::UPoly u;
        for (const auto& t : p.terms()) {
            const unsigned k = t.monomial[n - 2];
            if (u.size() <= k) u.resize(k + 1, 0);
            u[k] = f.add(u[k], t.coeff);
        }
        g = g.empty() ? u : detail::ugcd(g, u, f);
    }
    detail::utrim(g);
    const std::int64_t deg = g.empty() ? -1 : static_cast<std::int64_t>(g.size()) - 1;
    if (deg != out.degree) {
        out.detail = "projection has degree " + std::to_string(deg) + ", expected " + std::to_string(out.degree);
        return out;
    }
    detail::UPoly common = detail::ugcd(g, detail::uderivative(g, f), f);
    out.reduced = common.size() == 1;
    out.detail = out.reduced ? "reduced" : "repeated point in projection";
    return out;
}

}  // namespace gorcurves

#endif  // GORCURVES_GEOMETRY_HPP
