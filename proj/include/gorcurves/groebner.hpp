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

#ifndef GORCURVES_GROEBNER_HPP
#define GORCURVES_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace gorcurves {

// Module-level Buchberger machinery. Ideals are modules of rank one.
namespace detail {

struct VTerm {
    Monomial m;
    std::uint32_t comp;
    std::uint32_t coeff;
    friend bool operator==(const VTerm&, const VTerm&) = default;
};

// Sparse vector in a free module, terms strictly descending in a ModuleOrder.
using Vec = std::vector<VTerm>;

/**
 * Term order on a graded free module with basis e_c.
 *
 * Terms compare by block[c] (smaller block is larger), then by the monomial
 * order applied to m * weight[c] with total degree deg(m) + shift[c], then by
 * component (smaller index is larger). weight = 1 and shift = 0 give
 * term-over-position; Schreyer orders put the lead monomial of the image of
 * e_c into weight[c].
 */
class ModuleOrder {
   public:
    ModuleOrder(MonomialOrder order, std::size_t rank)
        : order_(order), weight(rank), shift(rank, 0), block(rank, 0) {}

    std::size_t rank() const noexcept { return weight.size(); }
    const MonomialOrder& monomial_order() const noexcept { return order_; }

    int degree(const VTerm& t) const noexcept { return static_cast<int>(t.m.degree()) + shift[t.comp]; }

    int compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const noexcept {
        if (block[ac] != block[bc]) return block[ac] < block[bc] ? 1 : -1;
        if (order_.is_grevlex()) {
            int da = static_cast<int>(am.degree()) + shift[ac], db = static_cast<int>(bm.degree()) + shift[bc];
            if (da != db) return da > db ? 1 : -1;
            std::uint64_t pa = am.packed() + weight[ac].packed(), pb = bm.packed() + weight[bc].packed();
            if (pa != pb) return pa < pb ? 1 : -1;
        } else {
            int c = order_.compare(am, bm);
            if (c != 0) return c;
        }
        if (ac != bc) return ac < bc ? 1 : -1;
        return 0;
    }
    int compare(const VTerm& a, const VTerm& b) const noexcept { return compare(a.m, a.comp, b.m, b.comp); }

   private:
    MonomialOrder order_;

   public:
    std::vector<Monomial> weight;
    std::vector<int> shift;
    std::vector<int> block;
};

inline void normalize(Vec& v, const ModuleOrder& ord, const Field& f) {
    std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return ord.compare(a, b) > 0; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        VTerm acc = v[i++];
        while (i < v.size() && v[i].m == acc.m && v[i].comp == acc.comp) acc.coeff = f.add(acc.coeff, v[i++].coeff);
        if (acc.coeff != 0) v[out++] = acc;
    }
    v.resize(out);
}

// a[from:] - c * q * b, merged; a[0:from] is kept as is.
inline Vec sub_mul(const Vec& a, std::size_t from, std::uint32_t c, const Monomial& q, const Vec& b,
                   const ModuleOrder& ord, const Field& f) {
    Vec r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(from));
    std::size_t i = from, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            r.push_back(a[i++]);
            continue;
        }
        Monomial bm = b[j].m * q;
        int cmp = i == a.size() ? -1 : ord.compare(a[i].m, a[i].comp, bm, b[j].comp);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({bm, b[j].comp, f.neg(f.mul(c, b[j].coeff))});
            ++j;
        } else {
            std::uint32_t v = f.sub(a[i].coeff, f.mul(c, b[j].coeff));
            if (v != 0) r.push_back({a[i].m, a[i].comp, v});
            ++i;
            ++j;
        }
    }
    return r;
}

inline Vec scale(Vec v, std::uint32_t c, const Field& f) {
    for (auto& t : v) t.coeff = f.mul(t.coeff, c);
    return v;
}

inline Vec make_monic(Vec v, const Field& f) {
    if (v.empty() || v.front().coeff == 1) return v;
    return scale(std::move(v), f.inv(v.front().coeff), f);
}

// One step of a division: q * (basis element `index`) with coefficient `coeff`.
struct QuotientTerm {
    Monomial m;
    std::uint32_t index;
    std::uint32_t coeff;
};

/**
 * Elements indexed by lead component for divisor lookup. All stored elements
 * are monic.
 */
class DivisorTable {
   public:
    explicit DivisorTable(std::size_t rank) : by_comp_(rank) {}

    void add(std::uint32_t index, const Vec& v) { by_comp_[v.front().comp].push_back({v.front().m, index}); }
    void remove(std::uint32_t index, const Vec& v) {
        auto& list = by_comp_[v.front().comp];
        list.erase(std::remove_if(list.begin(), list.end(), [&](const Entry& e) { return e.index == index; }),
                   list.end());
    }

    // First registered element whose lead term divides (m, comp), or -1.
    long find(const Monomial& m, std::uint32_t comp) const {
        for (const auto& e : by_comp_[comp])
            if (e.lead.divides(m)) return e.index;
        return -1;
    }

   private:
    struct Entry {
        Monomial lead;
        std::uint32_t index;
    };
    std::vector<std::vector<Entry>> by_comp_;
};

/**
 * Divides f by the registered elements. With `top_only` the division stops at
 * the first irreducible lead term; otherwise every term is reduced. Quotient
 * terms are appended to `quotients` when given.
 */
inline Vec reduce(Vec f, const std::vector<Vec>& elems, const DivisorTable& table, const ModuleOrder& ord,
                  const Field& field, bool top_only, std::vector<QuotientTerm>* quotients = nullptr) {
    std::size_t pos = 0;
    while (pos < f.size()) {
        const VTerm t = f[pos];
        long idx = table.find(t.m, t.comp);
        if (idx < 0) {
            if (top_only) break;
            ++pos;
            continue;
        }
        const Vec& g = elems[static_cast<std::size_t>(idx)];
        Monomial q = g.front().m.quotient_into(t.m);
        if (quotients) quotients->push_back({q, static_cast<std::uint32_t>(idx), t.coeff});
        f = sub_mul(f, pos, t.coeff, q, g, ord, field);
    }
    return f;
}

inline int sugar_of(const Vec& v, const ModuleOrder& ord) {
    int s = 0;
    for (const auto& t : v) s = std::max(s, ord.degree(t));
    return s;
}

/**
 * Reduced Gröbner basis of the submodule generated by `gens`.
 *
 * Buchberger's algorithm with the Gebauer–Möller installation of new pairs.
 * Pairs are selected by smallest sugar, ties broken by smallest lcm in the
 * module order. The coprime-lead-term criterion is only used in rank one,
 * where it is valid.
 */
inline std::vector<Vec> groebner_basis(std::vector<Vec> gens, const ModuleOrder& ord, const Field& field) {
    const bool rank_one = ord.rank() == 1;

    struct Pair {
        std::uint32_t i, j;
        Monomial lcm;
        std::uint32_t comp;
        int sugar;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord.compare(a.lcm, a.comp, b.lcm, b.comp);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> pairs(pair_less);

    std::vector<Vec> elems;
    std::vector<int> sugar;
    std::vector<std::uint32_t> active;  // current basis, as indices into elems
    DivisorTable table(ord.rank());

    auto install = [&](Vec h) {
        const std::uint32_t hi = static_cast<std::uint32_t>(elems.size());
        const Monomial hm = h.front().m;
        const std::uint32_t hc = h.front().comp;
        int hs = sugar_of(h, ord);
        elems.push_back(std::move(h));
        sugar.push_back(hs);

        auto make_pair = [&](std::uint32_t g) {
            const Monomial gm = elems[g].front().m;
            Monomial l = hm.lcm(gm);
            int s = std::max(hs + static_cast<int>(l.degree() - hm.degree()),
                             sugar[g] + static_cast<int>(l.degree() - gm.degree()));
            return Pair{g, hi, l, hc, s};
        };
        auto disjoint = [&](std::uint32_t g) { return rank_one && hm.coprime(elems[g].front().m); };

        std::vector<Pair> candidates;
        for (auto g : active)
            if (elems[g].front().comp == hc) candidates.push_back(make_pair(g));

        // Chain criterion among the new pairs.
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            bool keep = disjoint(p.i);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
                    if (candidates[b].lcm.divides(p.lcm)) keep = false;
                for (const auto& d : kept)
                    if (keep && d.lcm.divides(p.lcm)) keep = false;
            }
            if (keep) kept.push_back(p);
        }

        // Old pairs made redundant by h.
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (it->comp == hc && hm.divides(it->lcm)) {
                Monomial li = elems[it->i].front().m.lcm(hm);
                Monomial lj = elems[it->j].front().m.lcm(hm);
                if (!(li == it->lcm) && !(lj == it->lcm)) {
                    it = pairs.erase(it);
                    continue;
                }
            }
            ++it;
        }
        for (const auto& p : kept)
            if (!disjoint(p.i)) pairs.insert(p);

        std::vector<std::uint32_t> next;
        for (auto g : active) {
            if (elems[g].front().comp == hc && hm.divides(elems[g].front().m))
                table.remove(g, elems[g]);
            else
                next.push_back(g);
        }
        next.push_back(hi);
        active = std::move(next);
        table.add(hi, elems[hi]);
    };

    // Install generators one at a time, lowest first, each reduced by the previous ones.
    for (auto& g : gens) normalize(g, ord, field);
    std::sort(gens.begin(), gens.end(), [&](const Vec& a, const Vec& b) {
        if (a.empty() || b.empty()) return !a.empty() && b.empty();
        int sa = sugar_of(a, ord), sb = sugar_of(b, ord);
        if (sa != sb) return sa < sb;
        return ord.compare(a.front(), b.front()) < 0;
    });
    for (auto& g : gens) {
        if (g.empty()) continue;
        Vec r = reduce(std::move(g), elems, table, ord, field, false);
        if (!r.empty()) install(make_monic(std::move(r), field));
    }

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const Vec& a = elems[p.i];
        const Vec& b = elems[p.j];
        Vec s = sub_mul(Vec{}, 0, field.neg(1), a.front().m.quotient_into(p.lcm), a, ord, field);
        s = sub_mul(s, 0, 1, b.front().m.quotient_into(p.lcm), b, ord, field);
        Vec r = reduce(std::move(s), elems, table, ord, field, false);
        if (!r.empty()) install(make_monic(std::move(r), field));
    }

    // Interreduce the (already minimal) active set.
    std::vector<Vec> result;
    std::sort(active.begin(), active.end(),
              [&](std::uint32_t x, std::uint32_t y) { return ord.compare(elems[x].front(), elems[y].front()) < 0; });
    for (auto g : active) {
        table.remove(g, elems[g]);
        Vec tail(elems[g].begin() + 1, elems[g].end());
        Vec r = reduce(std::move(tail), elems, table, ord, field, false);
        Vec full;
        full.reserve(r.size() + 1);
        full.push_back(elems[g].front());
        full.insert(full.end(), r.begin(), r.end());
        table.add(g, elems[g]);
        result.push_back(std::move(full));
    }
    return result;
}

inline Vec to_vec(const Polynomial& p, std::uint32_t comp = 0) {
    Vec v;
    v.reserve(p.size());
    for (const auto& t : p.terms()) v.push_back({t.monomial, comp, t.coeff});
    return v;
}

inline Polynomial to_polynomial(const Vec& v, const RingPtr& ring) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) terms.push_back({t.m, t.coeff});
    return Polynomial(ring, std::move(terms));
}

}  // namespace detail

}  // namespace gorcurves

#endif  // GORCURVES_GROEBNER_HPP
