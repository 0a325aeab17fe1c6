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

#ifndef GORCURVES_HILBERT_HPP
#define GORCURVES_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace gorcurves {

// Integer polynomial in one formal variable s, coefficient i at index i.
using SeriesPolynomial = std::vector<std::int64_t>;

namespace detail {

inline void trim(SeriesPolynomial& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline SeriesPolynomial add(const SeriesPolynomial& a, const SeriesPolynomial& b, unsigned shift_b = 0) {
    SeriesPolynomial r(std::max(a.size(), b.size() + shift_b), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] += b[i];
    trim(r);
    return r;
}

inline SeriesPolynomial one_minus_power(unsigned d) {
    SeriesPolynomial r(d + 1, 0);
    r[0] = 1;
    r[d] -= 1;
    return r;
}

inline SeriesPolynomial multiply(const SeriesPolynomial& a, const SeriesPolynomial& b) {
    SeriesPolynomial r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.packed() < b.packed();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

inline bool pure_power(const Monomial& m, std::size_t n) {
    int support = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (m[i] != 0) ++support;
    return support <= 1;
}

// Numerator K(s) with HS(S/M) = K(s) / (1 - s)^n, by pivot splitting
// K(M) = K(M + x^e) + s^e K(M : x^e).
inline SeriesPolynomial hilbert_numerator_rec(std::vector<Monomial> gens, std::size_t n) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    bool independent = true;
    for (std::size_t a = 0; a < gens.size() && independent; ++a)
        for (std::size_t b = a + 1; b < gens.size() && independent; ++b)
            if (!gens[a].coprime(gens[b])) independent = false;
    if (independent) {
        SeriesPolynomial r{1};
        for (const auto& g : gens) r = multiply(r, one_minus_power(g.degree()));
        return r;
    }
    // Pivot variable: most frequent among generators sharing support.
    std::vector<int> count(n, 0);
    for (const auto& g : gens)
        if (!pure_power(g, n))
            for (std::size_t i = 0; i < n; ++i)
                if (g[i] != 0) ++count[i];
    std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    unsigned e = kMaxExponent;
    for (const auto& g : gens)
        if (!pure_power(g, n) && g[x] != 0) e = std::min(e, g[x]);
    Monomial pivot = Monomial::variable(x, e);

    std::vector<Monomial> plus = gens;
    plus.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        std::uint64_t packed = g.packed();
        unsigned gx = g[x];
        unsigned drop = std::min(gx, e);
        packed -= static_cast<std::uint64_t>(drop) << (8 * x);
        colon.push_back(Monomial::from_packed(packed));
    }
    return add(hilbert_numerator_rec(std::move(plus), n), hilbert_numerator_rec(std::move(colon), n), e);
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/**
 * @brief Hilbert data of S/I for a homogeneous ideal I of S = k[x_0..x_{n-1}].
 */
struct HilbertData {
    std::size_t variables = 0;
    SeriesPolynomial numerator;   ///< K(s), HS = K(s)/(1-s)^n
    SeriesPolynomial h_vector;    ///< K(s)/(1-s)^(n-krull_dimension)
    int krull_dimension = 0;
    std::int64_t degree = 0;

    int projective_dimension() const noexcept { return krull_dimension - 1; }
    bool is_curve() const noexcept { return krull_dimension == 2; }

    // dim_k (S/I)_m.
    std::int64_t hilbert_function(std::int64_t m) const {
        std::int64_t v = 0;
        const auto n = static_cast<std::int64_t>(variables);
        for (std::size_t k = 0; k < numerator.size(); ++k)
            v += numerator[k] * detail::binomial(m - static_cast<std::int64_t>(k) + n - 1, n - 1);
        return v;
    }

    // Hilbert polynomial evaluated at m (agrees with hilbert_function for m >> 0).
    std::int64_t hilbert_polynomial(std::int64_t m) const {
        if (krull_dimension == 0) return 0;
        std::int64_t v = 0;
        const std::int64_t d = krull_dimension;
        for (std::size_t k = 0; k < h_vector.size(); ++k) {
            // C(m - k + d - 1, d - 1) as a polynomial in m, valid for all m.
            std::int64_t num = 1, den = 1;
            for (std::int64_t i = 1; i <= d - 1; ++i) {
                num *= m - static_cast<std::int64_t>(k) + i;
                den *= i;
            }
            v += h_vector[k] * (num / den);
        }
        return v;
    }

    /// Hilbert polynomial as power-basis numerators over the common
    /// denominator (krull_dimension - 1)!; entry i multiplies m^i.
    std::pair<std::vector<std::int64_t>, std::int64_t> hilbert_polynomial_coefficients() const {
        if (krull_dimension == 0) return {{0}, 1};
        const std::int64_t d = krull_dimension;
        std::vector<std::int64_t> total(static_cast<std::size_t>(d), 0);
        std::int64_t den = 1;
        for (std::int64_t i = 1; i <= d - 1; ++i) den *= i;
        for (std::size_t k = 0; k < h_vector.size(); ++k) {
            std::vector<std::int64_t> poly{1};
            for (std::int64_t i = 1; i <= d - 1; ++i) {
                // multiply by (m + (i - k))
                const std::int64_t c = i - static_cast<std::int64_t>(k);
                std::vector<std::int64_t> next(poly.size() + 1, 0);
                for (std::size_t j = 0; j < poly.size(); ++j) {
                    next[j] += poly[j] * c;
                    next[j + 1] += poly[j];
                }
                poly = next;
            }
            for (std::size_t j = 0; j < poly.size(); ++j) total[j] += h_vector[k] * poly[j];
        }
        return {total, den};
    }

    // Arithmetic genus 1 - HP(0) of a projective curve.
    std::int64_t genus() const {
        if (!is_curve()) throw DimensionError("arithmetic genus requested for a scheme of projective dimension " +
                                              std::to_string(projective_dimension()));
        return 1 - hilbert_polynomial(0);
    }
};

inline HilbertData hilbert_from_leading_terms(const std::vector<Monomial>& leads, std::size_t n) {
    HilbertData h;
    h.variables = n;
    h.numerator = detail::hilbert_numerator_rec(leads, n);
    SeriesPolynomial q = h.numerator;
    int dim = static_cast<int>(n);
    auto at_one = [](const SeriesPolynomial& p) {
        std::int64_t s = 0;
        for (auto c : p) s += c;
        return s;
    };
    while (dim > 0 && at_one(q) == 0) {
        // Synthetic division by (1 - s).
        SeriesPolynomial r(q.size() > 1 ? q.size() - 1 : 1, 0);
        std::int64_t acc = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            acc += q[i];
            r[i] = acc;
        }
        detail::trim(r);
        q = r;
        --dim;
    }
    h.h_vector = q;
    h.krull_dimension = dim;
    h.degree = at_one(q);
    return h;
}

}  // namespace gorcurves

#endif  // GORCURVES_HILBERT_HPP
