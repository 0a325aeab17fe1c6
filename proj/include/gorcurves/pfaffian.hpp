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

#ifndef GORCURVES_PFAFFIAN_HPP
#define GORCURVES_PFAFFIAN_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace gorcurves {

/**
 * @brief Skew-symmetric matrix of homogeneous forms, stored by its strict
 * upper triangle. Indices are 1-based in the accessors, matching a_{ij}.
 */
class SkewMatrix {
   public:
    /// Zero matrix with the given degree pattern (d[i][j] for i < j, 0-based storage, full n × n).
    SkewMatrix(RingPtr ring, std::vector<std::vector<int>> pattern) : ring_(std::move(ring)), pattern_(std::move(pattern)) {
        const std::size_t n = pattern_.size();
        for (const auto& row : pattern_)
            if (row.size() != n) throw StructureError("degree pattern must be square");
        check_pattern();
        entries_.assign(n, std::vector<Polynomial>(n, Polynomial(ring_)));
    }

    /// Uniform pattern: every entry of degree d.
    static SkewMatrix uniform(RingPtr ring, std::size_t n, int d) {
        return SkewMatrix(std::move(ring), std::vector<std::vector<int>>(n, std::vector<int>(n, d)));
    }

    /// Pattern d_ij = w_i + w_j from doubled weights (so half-integral weights are allowed).
    static SkewMatrix from_weights(RingPtr ring, const std::vector<int>& twice_weights) {
        const std::size_t n = twice_weights.size();
        std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if ((twice_weights[i] + twice_weights[j]) % 2 != 0) throw StructureError("weights give a non-integral degree");
                p[i][j] = (twice_weights[i] + twice_weights[j]) / 2;
            }
        return SkewMatrix(std::move(ring), std::move(p));
    }

    std::size_t size() const noexcept { return entries_.size(); }
    const RingPtr& ring() const noexcept { return ring_; }
    int degree(std::size_t i, std::size_t j) const { return pattern_.at(i - 1).at(j - 1); }

    /// a_{ij} with a_{ji} = −a_{ij} and a_{ii} = 0.
    Polynomial at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        if (i == j) return Polynomial(ring_);
        return i < j ? entries_[i - 1][j - 1] : -entries_[j - 1][i - 1];
    }

    void set(std::size_t i, std::size_t j, const Polynomial& f) {
        check_index(i, j);
        if (i == j) throw StructureError("diagonal of a skew matrix is zero");
        if (i > j) return set(j, i, -f);
        if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != degree(i, j)))
            throw StructureError("entry a_" + std::to_string(i) + std::to_string(j) + " does not match the degree pattern");
        entries_[i - 1][j - 1] = f;
    }

    /// The matrix with rows and columns `drop` (1-based) removed.
    SkewMatrix without(const std::vector<std::size_t>& drop) const {
        std::vector<std::size_t> keep;
        for (std::size_t i = 1; i <= size(); ++i)
            if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
        std::vector<std::vector<int>> p(keep.size(), std::vector<int>(keep.size()));
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) p[a][b] = pattern_[keep[a] - 1][keep[b] - 1];
        SkewMatrix m(ring_, std::move(p));
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = a + 1; b < keep.size(); ++b) m.entries_[a][b] = entries_[keep[a] - 1][keep[b] - 1];
        return m;
    }

   private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i < 1 || j < 1 || i > size() || j > size()) throw StructureError("skew matrix index out of range");
    }

    // d_ij = w_i + w_j is solvable iff d_ij + d_kl = d_ik + d_jl for distinct indices.
    void check_pattern() const {
        const std::size_t n = pattern_.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && pattern_[i][j] != pattern_[j][i]) throw StructureError("degree pattern is not symmetric");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = k + 1; l < n; ++l) {
                        if (k == i || k == j || l == i || l == j) continue;
                        // Use the triangle relation via a shared third index.
                        if (pattern_[i][j] + pattern_[k][l] != pattern_[i][k] + pattern_[j][l])
                            throw StructureError("degree pattern is not of the form w_i + w_j");
                    }
    }

    RingPtr ring_;
    std::vector<std::vector<int>> pattern_;
    std::vector<std::vector<Polynomial>> entries_;
};

namespace detail {

// Pfaffian of the principal submatrix on the index set `mask` (bit k = index k+1).
inline Polynomial pfaffian_of_subset(const SkewMatrix& m, unsigned mask, std::map<unsigned, Polynomial>& memo) {
    if (mask == 0) return Polynomial::constant(m.ring(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    unsigned first = static_cast<unsigned>(__builtin_ctz(mask));
    unsigned rest = mask & ~(1u << first);
    Polynomial acc(m.ring());
    int sign = 1;
    for (unsigned j = first + 1; j < m.size(); ++j) {
        if (!(rest & (1u << j))) continue;
        const Polynomial a = m.at(first + 1, j + 1);
        if (!a.is_zero()) {
            Polynomial term = a * pfaffian_of_subset(m, rest & ~(1u << j), memo);
            if (sign > 0)
                acc += term;
            else
                acc -= term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

/// Pfaffian by expansion along the first row; Pf of the empty matrix is 1.
inline Polynomial pfaffian(const SkewMatrix& m) {
    if (m.size() % 2 != 0) throw StructureError("Pfaffian of an odd-sized matrix");
    if (m.size() > 31) throw StructureError("matrix too large");
    std::map<unsigned, Polynomial> memo;
    return detail::pfaffian_of_subset(m, (m.size() == 0 ? 0u : (1u << m.size()) - 1), memo);
}

/**
 * @brief The n Pfaffians of an odd skew matrix obtained by deleting row and
 * column i, for i = 1..n (unsigned).
 */
inline std::vector<Polynomial> submaximal_pfaffians(const SkewMatrix& m) {
    if (m.size() % 2 == 0) throw StructureError("sub-maximal Pfaffians need an odd-sized matrix");
    std::map<unsigned, Polynomial> memo;
    const unsigned full = (1u << m.size()) - 1;
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < m.size(); ++i) out.push_back(detail::pfaffian_of_subset(m, full & ~(1u << i), memo));
    return out;
}

/// Signed Pfaffians (−1)^{i+1} Pf_i, a vector v with M · v = 0.
inline std::vector<Polynomial> pfaffian_syzygy_vector(const SkewMatrix& m) {
    auto p = submaximal_pfaffians(m);
    for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
    return p;
}

/// Dense product M · v.
inline std::vector<Polynomial> multiply(const SkewMatrix& m, const std::vector<Polynomial>& v) {
    if (v.size() != m.size()) throw StructureError("size mismatch");
    std::vector<Polynomial> out(m.size(), Polynomial(m.ring()));
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j)
            if (i != j) out[i - 1] += m.at(i, j) * v[j - 1];
    return out;
}

/**
 * @brief Membership pattern for a skew matrix.
 *
 * Tom_K: a_kl ∈ J whenever k, l ∉ K. Jer_K: a_kl ∈ J whenever k ∈ K or l ∈ K.
 * Per-entry overrides replace the membership ideal of a single entry (an empty
 * list means unconstrained).
 */
struct TomJerryFormat {
    enum class Kind { Tom, Jer };
    Kind kind = Kind::Tom;
    std::vector<std::size_t> indices;  // 1-based
    std::vector<Polynomial> membership;
    std::vector<std::vector<int>> pattern;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> overrides;
    std::vector<std::size_t> allowed_variables;  // variables the entries may use

    static TomJerryFormat tom(std::vector<std::size_t> k, std::vector<Polynomial> j, std::vector<std::vector<int>> p,
                              std::vector<std::size_t> vars) {
        return {Kind::Tom, std::move(k), std::move(j), std::move(p), {}, std::move(vars)};
    }
    static TomJerryFormat jer(std::vector<std::size_t> k, std::vector<Polynomial> j, std::vector<std::vector<int>> p,
                              std::vector<std::size_t> vars) {
        return {Kind::Jer, std::move(k), std::move(j), std::move(p), {}, std::move(vars)};
    }

    /// Membership ideal of a_{ij}, empty for unconstrained entries.
    const std::vector<Polynomial>& constraint(std::size_t i, std::size_t j) const {
        static const std::vector<Polynomial> none;
        if (i > j) std::swap(i, j);
        if (auto it = overrides.find({i, j}); it != overrides.end()) return it->second;
        auto in = [&](std::size_t x) { return std::find(indices.begin(), indices.end(), x) != indices.end(); };
        bool constrained = kind == Kind::Tom ? (!in(i) && !in(j)) : (in(i) || in(j));
        return constrained ? membership : none;
    }
};

/// Random skew matrix in the given format; zero-degree-pattern entries are zero.
inline SkewMatrix make_tom_jerry(const RingPtr& ring, const TomJerryFormat& format, std::mt19937_64& rng) {
    SkewMatrix m(ring, format.pattern);
    const auto vars = format.allowed_variables.empty() ? all_variables(*ring) : format.allowed_variables;
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = i + 1; j <= m.size(); ++j) {
            int d = m.degree(i, j);
            if (d < 0) continue;
            if (d == 0) throw StructureError("constant entries are not supported in a graded format");
            m.set(i, j, random_form(ring, static_cast<unsigned>(d), vars, format.constraint(i, j), rng));
        }
    return m;
}

}  // namespace gorcurves

#endif  // GORCURVES_PFAFFIAN_HPP
