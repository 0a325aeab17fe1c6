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

#ifndef GORCURVES_RESOLUTION_HPP
#define GORCURVES_RESOLUTION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "ideal.hpp"

namespace gorcurves {

/**
 * @brief Homogeneous map F → G between graded free modules, stored by sparse
 * columns. Column k is the image of the k-th basis element of F.
 */
struct GradedMatrix {
    std::vector<int> row_degrees;  ///< degrees of the basis of G
    std::vector<int> col_degrees;  ///< degrees of the basis of F
    std::vector<std::map<std::size_t, Polynomial>> columns;

    std::size_t rows() const noexcept { return row_degrees.size(); }
    std::size_t cols() const noexcept { return col_degrees.size(); }

    const Polynomial* entry(std::size_t r, std::size_t c) const {
        auto it = columns[c].find(r);
        return it == columns[c].end() ? nullptr : &it->second;
    }
};

/// Product A·B as maps (B first). Null entries are zero.
inline GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b, const RingPtr& ring) {
    if (a.cols() != b.rows()) throw ContractError("compose: size mismatch");
    GradedMatrix r{a.row_degrees, b.col_degrees, std::vector<std::map<std::size_t, Polynomial>>(b.cols())};
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (const auto& [k, bk] : b.columns[c])
            for (const auto& [row, ak] : a.columns[k]) {
                auto it = r.columns[c].find(row);
                if (it == r.columns[c].end())
                    it = r.columns[c].emplace(row, Polynomial(ring)).first;
                it->second += ak * bk;
                if (it->second.is_zero()) r.columns[c].erase(it);
            }
    return r;
}

/**
 * @brief Graded free resolution 0 ← S/I ← F_0 ← F_1 ← ... of a cyclic module.
 *
 * maps[i] is the differential F_{i+1} → F_i; F_0 = S.
 */
struct FreeResolution {
    RingPtr ring;
    std::vector<GradedMatrix> maps;
    bool minimal = false;
    // Set when the projective dimension equals the number of variables, i.e.
    // depth(S/I) = 0: the ideal is not saturated and the Betti numbers do not
    // describe the projective scheme.
    bool saturation_warning = false;

    std::size_t length() const noexcept { return maps.size(); }

    std::size_t rank(std::size_t i) const {
        if (i == 0) return maps.empty() ? 1 : maps[0].rows();
        return i <= maps.size() ? maps[i - 1].cols() : 0;
    }
    std::vector<int> degrees(std::size_t i) const {
        if (i == 0) return maps.empty() ? std::vector<int>{0} : maps[0].row_degrees;
        return i <= maps.size() ? maps[i - 1].col_degrees : std::vector<int>{};
    }

    bool has_unit_entries() const {
        for (const auto& m : maps)
            for (const auto& col : m.columns)
                for (const auto& [r, e] : col)
                    if (e.is_constant() && !e.is_zero()) return true;
        return false;
    }
};

/**
 * @brief Graded Betti numbers b[row][col] with row = degree − homological
 * index and col = homological index.
 */
class BettiTable {
   public:
    BettiTable() = default;
    explicit BettiTable(std::vector<std::vector<std::int64_t>> grid) : grid_(std::move(grid)) { pad(); }

    static BettiTable from_resolution(const FreeResolution& res) {
        std::vector<std::vector<std::int64_t>> grid;
        for (std::size_t i = 0; i <= res.length(); ++i)
            for (int d : res.degrees(i)) {
                int row = d - static_cast<int>(i);
                if (row < 0) throw ContractError("resolution is not minimal: negative Betti row");
                if (grid.size() <= static_cast<std::size_t>(row)) grid.resize(static_cast<std::size_t>(row) + 1);
                auto& r = grid[static_cast<std::size_t>(row)];
                if (r.size() <= i) r.resize(i + 1, 0);
                ++r[i];
            }
        return BettiTable(std::move(grid));
    }

    std::size_t rows() const noexcept { return grid_.size(); }
    std::size_t columns() const noexcept { return grid_.empty() ? 0 : grid_.front().size(); }
    std::int64_t at(std::size_t row, std::size_t col) const {
        return row < grid_.size() && col < grid_[row].size() ? grid_[row][col] : 0;
    }
    const std::vector<std::vector<std::int64_t>>& grid() const noexcept { return grid_; }

    // Total rank of the col-th free module.
    std::int64_t column_total(std::size_t col) const {
        std::int64_t s = 0;
        for (std::size_t r = 0; r < rows(); ++r) s += at(r, col);
        return s;
    }

    /// Σ_i (−1)^i Σ_j b_{i,j} s^j, which equals the Hilbert series numerator of S/I.
    SeriesPolynomial alternating_numerator() const {
        SeriesPolynomial k(1, 0);
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < columns(); ++c) {
                std::size_t deg = r + c;
                if (k.size() <= deg) k.resize(deg + 1, 0);
                k[deg] += (c % 2 == 0 ? 1 : -1) * at(r, c);
            }
        detail::trim(k);
        return k;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

   private:
    void pad() {
        std::size_t cols = 0;
        for (const auto& r : grid_) cols = std::max(cols, r.size());
        for (auto& r : grid_) r.resize(cols, 0);
        while (!grid_.empty() && std::all_of(grid_.back().begin(), grid_.back().end(), [](auto v) { return v == 0; }))
            grid_.pop_back();
        // Drop trailing zero columns.
        while (cols > 0) {
            bool empty = true;
            for (auto& r : grid_)
                if (r[cols - 1] != 0) empty = false;
            if (!empty) break;
            --cols;
            for (auto& r : grid_) r.resize(cols);
        }
    }

    std::vector<std::vector<std::int64_t>> grid_;
};

/// Largest nonempty row index.
inline int regularity(const BettiTable& b) { return static_cast<int>(b.rows()) - 1; }

/// Invariance of the table under 180° rotation: b[r][j] = b[R − r][c − j].
inline bool gorenstein_symmetric(const BettiTable& b) {
    if (b.rows() == 0) return false;
    const std::size_t R = b.rows() - 1, c = b.columns() - 1;
    for (std::size_t r = 0; r <= R; ++r)
        for (std::size_t j = 0; j <= c; ++j)
            if (b.at(r, j) != b.at(R - r, c - j)) return false;
    return true;
}

namespace detail {

// One step of the Schreyer frame: the basis of F_L and a Gröbner basis of the
// kernel of F_L → F_{L−1} (for L = 0, of the ideal) in the induced order.
struct FrameLevel {
    std::vector<Monomial> total;  // lead monomial of the image of each basis element, pushed down to S
    std::vector<int> degree;
    std::vector<Vec> kernel;  // sorted by lead component, then lex-descending lead monomial
};

inline ModuleOrder schreyer_order(const FrameLevel& level, const MonomialOrder& mono) {
    ModuleOrder ord(mono, level.total.size());
    for (std::size_t c = 0; c < level.total.size(); ++c) {
        ord.weight[c] = level.total[c];
        ord.shift[c] = level.degree[c];
    }
    return ord;
}

inline void sort_frame(std::vector<Vec>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Vec& a, const Vec& b) {
        if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
        return lex_compare(a.front().m, b.front().m) > 0;
    });
}

/**
 * Schreyer's construction: from a Gröbner basis of the kernel at level L,
 * build the next level's basis and a Gröbner basis of its kernel. Only pairs
 * whose lead quotient is a minimal generator of the lead-term colon ideal are
 * formed.
 */
inline FrameLevel next_frame_level(const FrameLevel& level, const MonomialOrder& mono, const Field& field) {
    const ModuleOrder ord = schreyer_order(level, mono);
    const auto& elems = level.kernel;

    FrameLevel next;
    for (const auto& v : elems) {
        next.total.push_back(v.front().m * level.total[v.front().comp]);
        next.degree.push_back(static_cast<int>(v.front().m.degree()) + level.degree[v.front().comp]);
    }
    const ModuleOrder next_ord = schreyer_order(next, mono);

    DivisorTable table(level.total.size());
    for (std::uint32_t i = 0; i < elems.size(); ++i) table.add(i, elems[i]);

    std::vector<QuotientTerm> quotients;
    for (std::uint32_t a = 0; a < elems.size(); ++a) {
        const Monomial la = elems[a].front().m;
        const std::uint32_t comp = elems[a].front().comp;
        std::vector<std::pair<Monomial, std::uint32_t>> cand;
        for (std::uint32_t b = a + 1; b < elems.size() && elems[b].front().comp == comp; ++b) {
            const Monomial lb = elems[b].front().m;
            cand.push_back({la.gcd(lb).quotient_into(lb), b});
        }
        for (std::size_t x = 0; x < cand.size(); ++x) {
            bool minimal = true;
            for (std::size_t y = 0; y < cand.size() && minimal; ++y) {
                if (x == y) continue;
                if (cand[y].first.divides(cand[x].first) && (!(cand[y].first == cand[x].first) || y < x))
                    minimal = false;
            }
            if (!minimal) continue;
            const std::uint32_t b = cand[x].second;
            const Monomial ua = cand[x].first;
            const Monomial lcm = la * ua;
            const Monomial ub = elems[b].front().m.quotient_into(lcm);
            Vec s = sub_mul(Vec{}, 0, field.neg(1), ua, elems[a], ord, field);
            s = sub_mul(s, 0, 1, ub, elems[b], ord, field);
            quotients.clear();
            Vec rest = reduce(std::move(s), elems, table, ord, field, true, &quotients);
            if (!rest.empty()) throw std::logic_error("Schreyer pair did not reduce to zero");
            Vec syz;
            syz.reserve(quotients.size() + 2);
            syz.push_back({ua, a, 1});
            syz.push_back({ub, b, field.neg(1)});
            for (const auto& q : quotients) syz.push_back({q.m, q.index, field.neg(q.coeff)});
            normalize(syz, next_ord, field);
            next.kernel.push_back(std::move(syz));
        }
    }
    sort_frame(next.kernel);
    return next;
}

inline GradedMatrix frame_to_matrix(const FrameLevel& level, const std::vector<int>& col_degrees, const RingPtr& ring) {
    GradedMatrix m{level.degree, col_degrees, std::vector<std::map<std::size_t, Polynomial>>(level.kernel.size())};
    for (std::size_t k = 0; k < level.kernel.size(); ++k) {
        std::map<std::size_t, std::vector<Term>> by_row;
        for (const auto& t : level.kernel[k]) by_row[t.comp].push_back({t.m, t.coeff});
        for (auto& [r, terms] : by_row) m.columns[k].emplace(r, Polynomial(ring, std::move(terms)));
    }
    return m;
}

}  // namespace detail

/**
 * @brief Schreyer resolution of S/I, generally not minimal.
 *
 * F_1 is indexed by the reduced Gröbner basis of I. The length is bounded by
 * the number of variables; a longer frame is a logic error.
 */
inline FreeResolution schreyer_resolution(const Ideal& ideal) {
    const RingPtr& ring = ideal.ring();
    if (!ring->order().is_grevlex()) throw ContractError("resolutions are computed in a grevlex ring");
    if (!ideal.is_homogeneous()) throw StructureError("resolution of an inhomogeneous ideal");
    const MonomialOrder mono = ring->order();
    const Field& field = ring->field();

    detail::FrameLevel level;
    level.total = {Monomial()};
    level.degree = {0};
    for (const auto& g : ideal.groebner()) level.kernel.push_back(detail::to_vec(g));
    detail::sort_frame(level.kernel);

    FreeResolution res;
    res.ring = ring;
    while (!level.kernel.empty()) {
        if (res.maps.size() >= ring->size())
            throw std::logic_error("resolution longer than the number of variables");
        detail::FrameLevel next = detail::next_frame_level(level, mono, field);
        res.maps.push_back(detail::frame_to_matrix(level, next.degree, ring));
        level = std::move(next);
    }
    return res;
}

/**
 * @brief Removes unit entries by pivoting until no constant entry remains.
 *
 * For a unit u at (r, c) of d_i the complex splits off S·e_c → S·f_r: d_i is
 * replaced by its Schur complement, row c of d_{i+1} and column r of d_{i−1}
 * are dropped. Pivots are taken in scan order (map, column, row).
 */
inline FreeResolution minimalize(FreeResolution res) {
    const RingPtr& ring = res.ring;
    const Field& field = ring->field();
    const std::size_t L = res.maps.size();
    // alive[i] flags the basis of F_i.
    std::vector<std::vector<bool>> alive(L + 1);
    for (std::size_t i = 0; i <= L; ++i) alive[i].assign(res.rank(i), true);

    for (std::size_t i = 0; i < L; ++i) {
        auto& d = res.maps[i];  // F_{i+1} -> F_i
        for (std::size_t c = 0; c < d.cols(); ++c) {
            if (!alive[i + 1][c]) continue;
            std::size_t pivot_row = 0;
            std::uint32_t u = 0;
            for (const auto& [r, e] : d.columns[c])
                if (alive[i][r] && e.is_constant() && !e.is_zero()) {
                    pivot_row = r;
                    u = e.leading_coefficient();
                    break;
                }
            if (u == 0) continue;
            const std::uint32_t inv_u = field.inv(u);
            const auto pivot_col = d.columns[c];
            for (std::size_t c2 = 0; c2 < d.cols(); ++c2) {
                if (c2 == c || !alive[i + 1][c2]) continue;
                auto it = d.columns[c2].find(pivot_row);
                if (it == d.columns[c2].end()) continue;
                const Polynomial factor = it->second.scale(inv_u);
                for (const auto& [r, e] : pivot_col) {
                    auto jt = d.columns[c2].find(r);
                    Polynomial v = (jt == d.columns[c2].end() ? Polynomial(ring) : jt->second) - factor * e;
                    if (v.is_zero()) {
                        if (jt != d.columns[c2].end()) d.columns[c2].erase(jt);
                    } else if (jt == d.columns[c2].end()) {
                        d.columns[c2].emplace(r, std::move(v));
                    } else {
                        jt->second = std::move(v);
                    }
                }
            }
            alive[i][pivot_row] = false;
            alive[i + 1][c] = false;
            // Restart the scan of this column set: earlier columns may have gained units.
            c = static_cast<std::size_t>(-1);
        }
    }

    // Compact.
    std::vector<std::vector<std::size_t>> index(L + 1);
    for (std::size_t i = 0; i <= L; ++i) {
        index[i].assign(alive[i].size(), SIZE_MAX);
        std::size_t k = 0;
        for (std::size_t j = 0; j < alive[i].size(); ++j)
            if (alive[i][j]) index[i][j] = k++;
    }
    FreeResolution out;
    out.ring = ring;
    out.saturation_warning = res.saturation_warning;
    for (std::size_t i = 0; i < L; ++i) {
        const auto& d = res.maps[i];
        GradedMatrix m;
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (alive[i][r]) m.row_degrees.push_back(d.row_degrees[r]);
        for (std::size_t c = 0; c < d.cols(); ++c) {
            if (!alive[i + 1][c]) continue;
            m.col_degrees.push_back(d.col_degrees[c]);
            std::map<std::size_t, Polynomial> col;
            for (const auto& [r, e] : d.columns[c])
                if (alive[i][r]) col.emplace(index[i][r], e);
            m.columns.push_back(std::move(col));
        }
        if (m.cols() == 0) break;
        out.maps.push_back(std::move(m));
    }
    out.minimal = !out.has_unit_entries();
    return out;
}

/**
 * @brief Minimal graded free resolution of S/I.
 *
 * The saturation warning is set when the projective dimension reaches the
 * number of variables (depth 0, so I is not saturated).
 */
inline FreeResolution minimal_resolution(const Ideal& ideal) {
    FreeResolution res = minimalize(schreyer_resolution(ideal));
    if (!ideal.is_zero() && !ideal.is_unit() && res.length() >= ideal.ring()->size()) res.saturation_warning = true;
    if (!res.minimal) throw std::logic_error("minimalization left a unit entry");
    return res;
}

/// Minimal homogeneous generators, the entries of the first minimal differential.
inline std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
    const FreeResolution res = minimal_resolution(ideal);
    std::vector<Polynomial> out;
    if (res.maps.empty()) return out;
    for (const auto& col : res.maps[0].columns)
        if (auto it = col.find(0); it != col.end()) out.push_back(it->second.monic());
    return out;
}

inline BettiTable betti_table(const Ideal& ideal) { return BettiTable::from_resolution(minimal_resolution(ideal)); }

/**
 * @brief Graded Betti numbers read off a non-minimal resolution:
 * b_{i,j} = f_{i,j} − rank(d_i)_j − rank(d_{i+1})_j, where (d_i)_j is the
 * scalar block of d_i between basis elements of degree j.
 */
inline BettiTable betti_from_scalar_ranks(const FreeResolution& res) {
    const Field& field = res.ring->field();
    auto scalar_rank = [&](const GradedMatrix& d, int deg) -> std::int64_t {
        std::vector<std::size_t> rows, cols;
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (d.row_degrees[r] == deg) rows.push_back(r);
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (d.col_degrees[c] == deg) cols.push_back(c);
        if (rows.empty() || cols.empty()) return 0;
        std::vector<std::vector<std::uint32_t>> a(rows.size(), std::vector<std::uint32_t>(cols.size(), 0));
        for (std::size_t y = 0; y < cols.size(); ++y)
            for (std::size_t x = 0; x < rows.size(); ++x)
                if (const Polynomial* e = d.entry(rows[x], cols[y]); e && e->is_constant() && !e->is_zero())
                    a[x][y] = e->leading_coefficient();
        std::int64_t rank = 0;
        std::size_t pr = 0;
        for (std::size_t col = 0; col < cols.size() && pr < rows.size(); ++col) {
            std::size_t sel = pr;
            while (sel < rows.size() && a[sel][col] == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(a[sel], a[pr]);
            std::uint32_t inv = field.inv(a[pr][col]);
            for (std::size_t x = pr + 1; x < rows.size(); ++x) {
                if (a[x][col] == 0) continue;
                std::uint32_t f = field.mul(a[x][col], inv);
                for (std::size_t y = col; y < cols.size(); ++y) a[x][y] = field.sub(a[x][y], field.mul(f, a[pr][y]));
            }
            ++pr;
            ++rank;
        }
        return rank;
    };
    std::vector<std::vector<std::int64_t>> grid;
    for (std::size_t i = 0; i <= res.length(); ++i) {
        auto degs = res.degrees(i);
        std::map<int, std::int64_t> count;
        for (int d : degs) ++count[d];
        for (auto [deg, f] : count) {
            std::int64_t b = f;
            if (i >= 1) b -= scalar_rank(res.maps[i - 1], deg);
            if (i < res.length()) b -= scalar_rank(res.maps[i], deg);
            if (b == 0) continue;
            std::size_t row = static_cast<std::size_t>(deg - static_cast<int>(i));
            if (grid.size() <= row) grid.resize(row + 1);
            if (grid[row].size() <= i) grid[row].resize(i + 1, 0);
            grid[row][i] += b;
        }
    }
    return BettiTable(std::move(grid));
}

/**
 * @brief Generators of the kernel of a homogeneous matrix, as columns.
 *
 * Columns f_k of `m` are paired with unit vectors e_k and a Gröbner basis of
 * the module they span is computed in an order that eliminates the target
 * components; basis elements without target part are the syzygies.
 */
inline GradedMatrix syzygies(const GradedMatrix& m, const RingPtr& ring) {
    const std::size_t rows = m.rows(), cols = m.cols();
    detail::ModuleOrder ord(ring->order(), rows + cols);
    for (std::size_t r = 0; r < rows; ++r) ord.shift[r] = m.row_degrees[r];
    for (std::size_t c = 0; c < cols; ++c) {
        ord.shift[rows + c] = m.col_degrees[c];
        ord.block[rows + c] = 1;
    }
    std::vector<detail::Vec> gens;
    for (std::size_t c = 0; c < cols; ++c) {
        detail::Vec v;
        for (const auto& [r, e] : m.columns[c]) {
            if (!e.is_homogeneous() || (!e.is_zero() && e.degree() != m.col_degrees[c] - m.row_degrees[r]))
                throw StructureError("syzygies: matrix entries are not homogeneous of the stated degrees");
            for (const auto& t : e.terms()) v.push_back({t.monomial, static_cast<std::uint32_t>(r), t.coeff});
        }
        v.push_back({Monomial(), static_cast<std::uint32_t>(rows + c), 1});
        gens.push_back(std::move(v));
    }
    auto basis = detail::groebner_basis(std::move(gens), ord, ring->field());
    GradedMatrix out{m.col_degrees, {}, {}};
    for (const auto& v : basis) {
        if (v.front().comp < rows) continue;
        std::map<std::size_t, std::vector<Term>> by_row;
        for (const auto& t : v) by_row[t.comp - rows].push_back({t.m, t.coeff});
        std::map<std::size_t, Polynomial> col;
        for (auto& [r, terms] : by_row) col.emplace(r, Polynomial(ring, std::move(terms)));
        out.col_degrees.push_back(ord.degree(v.front()));
        out.columns.push_back(std::move(col));
    }
    return out;
}

/// The 1 × n matrix (f_1 … f_n) with F_0 = S in degree 0.
inline GradedMatrix row_matrix(const std::vector<Polynomial>& f) {
    GradedMatrix m{{0}, {}, {}};
    for (const auto& p : f) {
        m.col_degrees.push_back(p.degree());
        std::map<std::size_t, Polynomial> col;
        if (!p.is_zero()) col.emplace(0, p);
        m.columns.push_back(std::move(col));
    }
    return m;
}

struct LinearSyzygyCounts {
    std::int64_t first;   ///< b_{2,3}: linear first syzygies
    std::int64_t second;  ///< b_{3,4}: linear second syzygies
    friend bool operator==(const LinearSyzygyCounts&, const LinearSyzygyCounts&) = default;
};

/// Linear first and second syzygies of an ideal generated by quadrics.
inline LinearSyzygyCounts linear_syzygy_counts(const std::vector<Polynomial>& quadrics) {
    if (quadrics.empty()) throw StructureError("linear_syzygy_counts: no quadrics");
    for (const auto& q : quadrics)
        if (q.degree() != 2 || !q.is_homogeneous()) throw StructureError("linear_syzygy_counts: non-quadric input");
    BettiTable b = betti_table(Ideal(quadrics.front().ring(), quadrics));
    return {b.at(1, 2), b.at(1, 3)};
}

}  // namespace gorcurves

#endif  // GORCURVES_RESOLUTION_HPP
