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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gorcurves/gorcurves.hpp>

#include "test_support.hpp"

using namespace gorcurves;

namespace {

const std::vector<std::uint64_t> kSeeds{1, 2, 3};

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
    void fail(const std::string& what) {
        if (passed) detail << what;
        passed = false;
    }
};

struct Bundles {
    std::map<std::pair<CurveType, std::uint64_t>, CurveBundle> data;
    std::map<std::pair<CurveType, std::uint64_t>, double> seconds;
    const CurveBundle& get(CurveType t, std::uint64_t seed) {
        auto key = std::make_pair(t, seed);
        auto it = data.find(key);
        if (it == data.end()) {
            const auto start = std::chrono::steady_clock::now();
            it = data.emplace(key, construct(t, seed)).first;
            seconds[key] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        return it->second;
    }
};

std::string label(CurveType t, std::uint64_t seed) { return to_string(t) + "/seed " + std::to_string(seed); }

std::vector<Polynomial> quadrics_of(const Ideal& I) {
    std::vector<Polynomial> q;
    for (const auto& g : minimal_generators(I))
        if (g.degree() == 2) q.push_back(g);
    return q;
}

void c1_betti(Bundles& B, Outcome& o) {
    double worst = 0;
    for (auto t : all_curve_types())
        for (auto s : kSeeds) {
            const auto start = std::chrono::steady_clock::now();
            const auto& b = B.get(t, s);
            const BettiTable got = betti_table(b.union_ideal);
            const double secs = B.seconds[{t, s}] + std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            worst = std::max(worst, secs);
            if (!(got == oracle_betti(t))) o.fail(label(t, s) + ": " + betti_brief(got));
            if (secs > 120) o.fail(label(t, s) + " took " + std::to_string(secs) + " s");
        }
    o.detail << (o.passed ? "24 bundles, slowest " : "; slowest ") << std::fixed << std::setprecision(2) << worst << " s";
}

void c2_degree_genus(Bundles& B, Outcome& o) {
    const std::map<CurveType, std::pair<int, int>> table2{
        {CurveType::T2_7, {15, 16}},  {CurveType::T2_8, {15, 16}},  {CurveType::T2_3, {16, 17}},
        {CurveType::T2_6a, {16, 17}}, {CurveType::T2_6b, {16, 17}}, {CurveType::T2_2, {17, 18}},
        {CurveType::T2_5, {17, 18}},  {CurveType::T2_1, {18, 19}}};
    for (auto t : all_curve_types())
        for (auto s : kSeeds) {
            const auto& h = B.get(t, s).union_ideal.hilbert();
            if (!h.is_curve()) {
                o.fail(label(t, s) + " is not a curve");
                continue;
            }
            const std::pair<int, int> got{static_cast<int>(h.degree), static_cast<int>(h.genus())};
            if (got != table2.at(t) || got.second != got.first + 1)
                o.fail(label(t, s) + ": (" + std::to_string(got.first) + ", " + std::to_string(got.second) + ")");
        }
}

void c3_components(Bundles& B, Outcome& o) {
    struct Row {
        std::vector<std::pair<int, int>> dg;
        std::vector<int> points;  // per incident pair
    };
    const std::map<CurveType, Row> table1{
        {CurveType::T2_1, {{{12, 10}, {6, 4}}, {6}}},     {CurveType::T2_2, {{{11, 9}, {6, 4}}, {6}}},
        {CurveType::T2_3, {{{9, 7}, {7, 5}}, {6}}},       {CurveType::T2_5, {{{13, 12}, {4, 3}}, {4}}},
        {CurveType::T2_6a, {{{12, 11}, {4, 3}}, {4}}},    {CurveType::T2_6b, {{{8, 7}, {8, 7}}, {4}}},
        {CurveType::T2_7, {{{11, 10}, {4, 3}}, {4}}},     {CurveType::T2_8, {{{7, 4}, {4, 3}, {4, 3}}, {4, 4}}}};
    for (auto t : all_curve_types())
        for (auto s : kSeeds) {
            const auto& b = B.get(t, s);
            const Row& want = table1.at(t);
            if (b.components.size() != want.dg.size()) {
                o.fail(label(t, s) + ": wrong component count");
                continue;
            }
            for (std::size_t i = 0; i < want.dg.size(); ++i) {
                const auto& h = b.components[i].hilbert();
                if (!h.is_curve() || h.degree != want.dg[i].first || h.genus() != want.dg[i].second)
                    o.fail(label(t, s) + ": component " + b.component_names[i]);
            }
            const auto rep = full_report(b);
            if (b.expected.incident.size() != want.points.size()) o.fail(label(t, s) + ": incidence");
            for (std::size_t k = 0; k < b.expected.incident.size() && k < want.points.size(); ++k) {
                const auto [i, j] = b.expected.incident[k];
                const auto r = check_intersection(b.components[i], b.components[j], 1000 * s + k);
                if (!r.zero_dimensional || !r.reduced || r.degree != want.points[k])
                    o.fail(label(t, s) + ": " + b.component_names[i] + " meets " + b.component_names[j] + " in " +
                           std::to_string(r.degree));
            }
            for (const auto& c : rep.checks)
                if (c.mandatory && !c.passed && (c.name.find("smooth") != std::string::npos || c.name == "double points"))
                    o.fail(label(t, s) + ": " + c.name);
        }
}

void c4_gorenstein(Bundles& B, Outcome& o) {
    for (auto t : all_curve_types())
        for (auto s : kSeeds) {
            const BettiTable b = betti_table(B.get(t, s).union_ideal);
            if (!gorenstein_symmetric(b) || regularity(b) != 4 || b.columns() != 5) o.fail(label(t, s));
        }
}

void c5_liaison(Bundles& B, Outcome& o) {
    int count = 0;
    for (auto t : {CurveType::T2_1, CurveType::T2_2, CurveType::T2_3, CurveType::T2_5, CurveType::T2_6a, CurveType::T2_7,
                   CurveType::T2_8})
        for (auto s : kSeeds) {
            const auto& b = B.get(t, s);
            if (b.liaisons.empty()) o.fail(label(t, s) + ": no liaison data");
            for (const auto& L : b.liaisons) {
                const Ideal res = colon(L.gamma, L.linker), link = colon(L.gamma, L.residual);
                const Ideal m = irrelevant_ideal(b.ring);
                const bool saturated = L.residual.contains(colon(L.residual, m)) && L.linker.contains(colon(L.linker, m));
                if (!(res == L.residual) || !(link == L.linker) || !saturated) o.fail(label(t, s) + ": " + L.name);
                ++count;
            }
        }
    o.detail << (o.passed ? "" : "; ") << count << " round trips";
}

void c6_deformation(Bundles& B, Outcome& o) {
    for (auto s : kSeeds) {
        const auto& special = B.get(CurveType::T2_7, s);
        const auto fam = deformation_family(s);
        std::mt19937_64 rng(s * 7919);
        const std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % (kDefaultCharacteristic - 1));
        for (std::uint32_t u : {0u, 1u}) {
            const auto g = fam.generators(u);
            const Polynomial lhs = fam.q().scale(u) + fam.c[0] * g[0] + fam.c[1] * g[1] + fam.c[2] * g[2] -
                                   Polynomial::variable(fam.ring, 5) * g[5];
            if (!lhs.is_zero()) o.fail("seed " + std::to_string(s) + ": identity fails at t = " + std::to_string(u));
        }
        const Ideal i0(fam.ring, fam.generators(0));
        if (!(betti_table(i0) == oracle_betti(CurveType::T2_7))) o.fail("seed " + std::to_string(s) + ": betti(I_0)");
        if (!(i0 == special.union_ideal)) o.fail("seed " + std::to_string(s) + ": I_0 differs from the union");
        const auto gens = fam.generators(t);
        if (!(betti_table(Ideal(fam.ring, gens)) == cgkk2_betti()))
            o.fail("seed " + std::to_string(s) + ": betti(I_t), t = " + std::to_string(t));
        const Ideal jt(fam.ring, std::vector<Polynomial>(gens.begin(), gens.begin() + 6));
        if (!jt.contains(Ideal(fam.ring, {gens[6]}))) o.fail("seed " + std::to_string(s) + ": q not in J_t");
    }
}

void c7_linear_syzygies(Bundles& B, Outcome& o) {
    const RingPtr r = Ring::standard();
    auto x = [&](std::size_t i) { return Polynomial::variable(r, i); };
    auto expect = [&](const std::string& what, const std::vector<Polynomial>& q, LinearSyzygyCounts want) {
        const auto got = linear_syzygy_counts(q);
        if (!(got == want))
            o.fail(what + ": (" + std::to_string(got.first) + ", " + std::to_string(got.second) + ")");
    };
    expect("(x0x5, x1x5)", {x(0) * x(5), x(1) * x(5)}, {1, 0});
    expect("(x0x5, x1x5, x2x5)", {x(0) * x(5), x(1) * x(5), x(2) * x(5)}, {3, 1});
    for (auto s : kSeeds) {
        expect("2.6a quadrics", quadrics_of(B.get(CurveType::T2_6a, s).union_ideal), {4, 1});
        expect("2.6b quadrics", quadrics_of(B.get(CurveType::T2_6b, s).union_ideal), {4, 1});
        expect("2.7 quadrics", quadrics_of(B.get(CurveType::T2_7, s).union_ideal), {5, 1});
        expect("2.8 quadrics", quadrics_of(B.get(CurveType::T2_8, s).union_ideal), {6, 2});
    }
}

void c8_pfaffians(Bundles&, Outcome& o) {
    const std::uint64_t p = kDefaultCharacteristic;
    const RingPtr r = Ring::standard();
    std::mt19937_64 rng(88);
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 * (1 + static_cast<std::size_t>(rng() % 4));
        SkewMatrix m = SkewMatrix::uniform(r, n, 0);
        testsupport::Matrix a(n, std::vector<std::uint64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::uint64_t v = rng() % p;
                m.set(i + 1, j + 1, Polynomial::constant(r, static_cast<std::int64_t>(v)));
                a[i][j] = v;
                a[j][i] = (p - v) % p;
            }
        const Polynomial pf = pfaffian(m);
        const std::uint64_t v = pf.is_zero() ? 0 : pf.leading_coefficient();
        if (v * v % p != testsupport::det_mod(a, p)) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " of 200 scalar matrices have Pf^2 != det");

    // Generic 5x5: entries x0^g x1^(55-g) with g on a Golomb ruler, so products do not collide.
    const RingPtr r2 = Ring::standard(Field(), 2);
    const std::vector<unsigned> ruler{0, 1, 6, 10, 23, 26, 34, 41, 53, 55};
    SkewMatrix g = SkewMatrix::uniform(r2, 5, 55);
    std::map<int, Polynomial> a;
    std::size_t k = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            std::vector<unsigned> e{ruler[k], 55 - ruler[k]};
            ++k;
            const Polynomial entry = Polynomial::monomial(r2, Monomial(e));
            g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), entry);
            a.emplace(10 * i + j, entry);
        }
    auto A = [&](int ij) { return a.at(ij); };
    const std::vector<Polynomial> displayed{
        A(12) * A(34) - A(13) * A(24) + A(14) * A(23), A(12) * A(35) - A(13) * A(25) + A(15) * A(23),
        A(12) * A(45) - A(14) * A(25) + A(15) * A(24), A(13) * A(45) - A(14) * A(35) + A(15) * A(34),
        A(23) * A(45) - A(24) * A(35) + A(25) * A(34)};
    const auto pf = submaximal_pfaffians(g);
    for (std::size_t i = 0; i < 5; ++i)
        if (!(pf[4 - i] == displayed[i]) || pf[4 - i].size() != 3)
            o.fail("generic 5x5 expression " + std::to_string(i + 1) + " differs");

    for (std::size_t n : {5u, 7u})
        for (int trial = 0; trial < 3; ++trial) {
            SkewMatrix m = SkewMatrix::uniform(r, n, 1);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j) m.set(i, j, random_form(r, 1, all_variables(*r), rng));
            for (const auto& e : multiply(m, pfaffian_syzygy_vector(m)))
                if (!e.is_zero()) o.fail(std::to_string(n) + "x" + std::to_string(n) + ": M v != 0");
        }
}

void c9_cross_oracle(Bundles& B, Outcome& o) {
    int count = 0;
    auto check = [&](const Ideal& I, const std::string& what) {
        const auto res = minimal_resolution(I);
        const BettiTable b = BettiTable::from_resolution(res);
        if (!(b.alternating_numerator() == I.hilbert().numerator)) o.fail(what);
        if (!(betti_from_scalar_ranks(res) == b)) o.fail(what + " (scalar ranks)");
        ++count;
    };
    for (auto t : all_curve_types())
        for (auto s : kSeeds) {
            const auto& b = B.get(t, s);
            check(b.union_ideal, label(t, s));
            for (std::size_t i = 0; i < b.components.size(); ++i)
                check(b.components[i], label(t, s) + " " + b.component_names[i]);
        }
    o.detail << (o.passed ? "" : "; ") << count << " ideals";
}

void c10_negative_controls(Bundles& B, Outcome& o) {
    for (auto t : {CurveType::T2_7, CurveType::T2_2, CurveType::T2_8}) {
        const auto& b = B.get(t, 1);
        if (!union_report(b.union_ideal, t).passed()) o.fail(to_string(t) + ": baseline report fails");
        auto gens = minimal_generators(b.union_ideal);
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(gens.size() / 2));
        const auto dropped = union_report(Ideal(b.ring, gens), t);
        if (dropped.passed() || dropped.find("betti")->passed) o.fail(to_string(t) + ": dropped generator not caught");

        // Without saturation: the intersection of the components meets a power of m.
        std::vector<Polynomial> mono;
        for (const auto& m : monomials_of_degree(5, all_variables(*b.ring))) mono.push_back(Polynomial::monomial(b.ring, m));
        const auto unsat = union_report(intersect(b.union_ideal, Ideal(b.ring, mono)), t);
        if (unsat.passed() || unsat.find("saturated")->passed) o.fail(to_string(t) + ": unsaturated ideal not caught");
    }
}

}  // namespace

int main() {
    Bundles bundles;
    const std::vector<std::pair<std::string, std::function<void(Bundles&, Outcome&)>>> criteria{
        {"Betti tables match the oracle for every type and seed", c1_betti},
        {"union degree and genus, genus = degree + 1", c2_degree_genus},
        {"component degrees, genera and double points", c3_components},
        {"Gorenstein symmetry, regularity 4, codimension 4", c4_gorenstein},
        {"liaison round trips", c5_liaison},
        {"deformation to the CGKK 2 table", c6_deformation},
        {"linear syzygy counts of quadric sets", c7_linear_syzygies},
        {"Pfaffian engine", c8_pfaffians},
        {"Betti numbers reproduce the Hilbert numerator", c9_cross_oracle},
        {"negative controls flip report checks", c10_negative_controls},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(bundles, o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.passed) ++failures;
        std::printf("criterion %2zu: %s  %s [%.1f s]%s%s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    secs, o.detail.str().empty() ? "" : "  ", o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
