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

#ifndef GORCURVES_CATALOGUE_HPP
#define GORCURVES_CATALOGUE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "ideal.hpp"
#include "pfaffian.hpp"
#include "polynomial.hpp"

namespace gorcurves {

enum class CurveType { T2_1, T2_2, T2_3, T2_5, T2_6a, T2_6b, T2_7, T2_8 };

inline const std::vector<CurveType>& all_curve_types() {
    static const std::vector<CurveType> all{CurveType::T2_1,  CurveType::T2_2,  CurveType::T2_3, CurveType::T2_5,
                                            CurveType::T2_6a, CurveType::T2_6b, CurveType::T2_7, CurveType::T2_8};
    return all;
}

inline std::string to_string(CurveType t) {
    switch (t) {
        case CurveType::T2_1: return "2.1";
        case CurveType::T2_2: return "2.2";
        case CurveType::T2_3: return "2.3";
        case CurveType::T2_5: return "2.5";
        case CurveType::T2_6a: return "2.6a";
        case CurveType::T2_6b: return "2.6b";
        case CurveType::T2_7: return "2.7";
        case CurveType::T2_8: return "2.8";
    }
    return "?";
}

inline CurveType parse_curve_type(const std::string& s) {
    for (auto t : all_curve_types())
        if (to_string(t) == s) return t;
    throw StructureError("unknown curve type '" + s + "'");
}

/// Component (degree, genus) lists, double points and the (degree, genus) of the union.
struct ExpectedData {
    std::vector<int> degrees;
    std::vector<int> genera;
    int double_points = 0;
    std::vector<std::pair<std::size_t, std::size_t>> incident;  ///< component pairs that meet
    std::vector<int> points_per_pair;
    int total_degree = 0;
    int total_genus = 0;
};

/// d = 2(d_i − g_i + 1) for a component meeting the rest of a half-canonical curve.
inline int expected_double_points(int component_degree, int component_genus) {
    const int d = 2 * (component_degree - component_genus + 1);
    if (d <= 0) throw StructureError("inconsistent component data: non-positive double point count");
    return d;
}

/// Arithmetic genus of a nodal union: Σ g_i + δ − (n − 1).
inline int total_genus(const std::vector<std::pair<int, int>>& components, int double_points, int n_components) {
    int g = 0;
    for (const auto& c : components) g += c.second;
    return g + double_points - (n_components - 1);
}

inline ExpectedData expected_data(CurveType t) {
    ExpectedData e;
    switch (t) {
        case CurveType::T2_1: e.degrees = {12, 6}; e.genera = {10, 4}; e.double_points = 6; break;
        case CurveType::T2_2: e.degrees = {11, 6}; e.genera = {9, 4}; e.double_points = 6; break;
        case CurveType::T2_3: e.degrees = {9, 7}; e.genera = {7, 5}; e.double_points = 6; break;
        case CurveType::T2_5: e.degrees = {13, 4}; e.genera = {12, 3}; e.double_points = 4; break;
        case CurveType::T2_6a: e.degrees = {12, 4}; e.genera = {11, 3}; e.double_points = 4; break;
        case CurveType::T2_6b: e.degrees = {8, 8}; e.genera = {7, 7}; e.double_points = 4; break;
        case CurveType::T2_7: e.degrees = {11, 4}; e.genera = {10, 3}; e.double_points = 4; break;
        case CurveType::T2_8: e.degrees = {7, 4, 4}; e.genera = {4, 3, 3}; e.double_points = 8; break;
    }
    if (t == CurveType::T2_8) {
        e.incident = {{0, 1}, {0, 2}};
        e.points_per_pair = {4, 4};
    } else {
        e.incident = {{0, 1}};
        e.points_per_pair = {e.double_points};
    }
    std::vector<std::pair<int, int>> dg;
    for (std::size_t i = 0; i < e.degrees.size(); ++i) {
        e.total_degree += e.degrees[i];
        dg.push_back({e.degrees[i], e.genera[i]});
    }
    e.total_genus = total_genus(dg, e.double_points, static_cast<int>(dg.size()));
    return e;
}

/// A residuation Γ = linker ∪ residual: residual = (Γ : linker) and linker = (Γ : residual).
struct LiaisonData {
    std::string name;
    Ideal gamma;
    Ideal linker;
    Ideal residual;
};

struct CurveBundle {
    CurveType type = CurveType::T2_7;
    std::uint64_t seed = 0;
    int attempt = 0;  ///< sub-seed index that passed the genericity checks
    RingPtr ring;
    std::vector<std::string> component_names;
    std::vector<Ideal> components;
    Ideal union_ideal;
    std::vector<Ideal> intersections;  ///< schemes for expected.incident, in order
    std::vector<LiaisonData> liaisons;
    ExpectedData expected;

    CurveBundle() : union_ideal(Ring::standard()) {}
};

/**
 * @brief f plus a random form of the same degree in the span variables that
 * lies in the ideal of `extra` (so restricting to V(extra) returns f).
 */
inline Polynomial embed_adding_terms(const Polynomial& f, const std::vector<std::size_t>& span,
                                     const std::vector<std::size_t>& extra, std::mt19937_64& rng) {
    if (!f.is_homogeneous() || f.degree() < 1) throw StructureError("embed_adding_terms needs a homogeneous form");
    const RingPtr& ring = f.ring();
    return f + random_form(ring, static_cast<unsigned>(f.degree()), span, variables(ring, extra), rng);
}

/**
 * @brief Type 2.7 data: the forms a_i, b_i (linear), c_i (quadric) in
 * x0..x4 and g (cubic) in x0..x5.
 */
struct DeformationFamily {
    std::uint64_t seed = 0;
    RingPtr ring;
    std::array<Polynomial, 3> a, b, c;
    Polynomial g;

    static DeformationFamily random(const RingPtr& ring, std::mt19937_64& rng, std::uint64_t seed = 0) {
        const std::vector<std::size_t> p4{0, 1, 2, 3, 4};
        auto lin = [&] { return random_form(ring, 1, p4, rng); };
        auto quad = [&] { return random_form(ring, 2, p4, rng); };
        DeformationFamily fam{seed, ring, {lin(), lin(), lin()}, {lin(), lin(), lin()}, {quad(), quad(), quad()},
                              random_form(ring, 3, all_variables(*ring), rng)};
        return fam;
    }

    Polynomial x(std::size_t i) const { return Polynomial::variable(ring, i); }
    Polynomial Q4() const { return a[0] * x(0) + a[1] * x(1) + a[2] * x(2); }
    Polynomial Q5() const { return b[0] * x(0) + b[1] * x(1) + b[2] * x(2); }
    Polynomial F() const { return c[0] * x(0) + c[1] * x(1) + c[2] * x(2); }
    // 2×2 minors of the (a; b) block, the cofactors of the c-row of N.
    Polynomial m1() const { return a[1] * b[2] - a[2] * b[1]; }
    Polynomial m2() const { return a[0] * b[2] - a[2] * b[0]; }
    Polynomial m3() const { return a[0] * b[1] - a[1] * b[0]; }
    Polynomial det_n() const { return c[0] * m1() - c[1] * m2() + c[2] * m3(); }
    Polynomial q() const { return det_n() + g * x(5); }

    /// Q1, Q2, Q3, Q4, Q5, F_t, q.
    std::vector<Polynomial> generators(std::uint32_t t) const {
        const Polynomial Q1 = x(0) * x(5) - m1().scale(t);
        const Polynomial Q2 = x(1) * x(5) + m2().scale(t);
        const Polynomial Q3 = x(2) * x(5) - m3().scale(t);
        return {Q1, Q2, Q3, Q4(), Q5(), F() + g.scale(t), q()};
    }

    /// t·q + c1·Q1 + c2·Q2 + c3·Q3 − x5·F_t, identically zero.
    Polynomial identity_residual(std::uint32_t t) const {
        auto gen = generators(t);
        return q().scale(t) + c[0] * gen[0] + c[1] * gen[1] + c[2] * gen[2] - x(5) * gen[5];
    }
};

inline Ideal deformation_ideal(const DeformationFamily& fam, const FieldElement& t) {
    if (t.modulus() != fam.ring->field().characteristic()) throw ContractError("t from a different field");
    return Ideal(fam.ring, fam.generators(static_cast<std::uint32_t>(t.value())));
}

struct ConstructionOptions {
    int max_attempts = 5;
    bool check_smoothness = true;
    bool check_intersections = true;
};

namespace detail {

class Builder {
   public:
    Builder(RingPtr ring, std::mt19937_64& rng) : ring_(std::move(ring)), rng_(rng) {}

    Polynomial x(std::size_t i) const { return Polynomial::variable(ring_, i); }
    Polynomial form(unsigned d, const std::vector<std::size_t>& vars, const std::vector<std::size_t>& in = {}) {
        return random_form(ring_, d, vars, variables(ring_, in), rng_);
    }
    Ideal vars(const std::vector<std::size_t>& v) const { return Ideal::of_variables(ring_, v); }
    Ideal ideal(const std::vector<std::size_t>& lin, std::vector<Polynomial> eqs) const {
        std::vector<Polynomial> g = variables(ring_, lin);
        g.insert(g.end(), eqs.begin(), eqs.end());
        return Ideal(ring_, std::move(g));
    }
    std::mt19937_64& rng() { return rng_; }
    const RingPtr& ring() const { return ring_; }

   private:
    RingPtr ring_;
    std::mt19937_64& rng_;
};

// The basis element of degree `deg` of a point scheme that is not one of the
// given linear coordinates (after saturation).
inline Polynomial point_equation(const Ideal& points, int deg, const std::vector<Polynomial>& exclude = {}) {
    const Ideal z = saturate(points, irrelevant_ideal(points.ring())).ideal;
    for (const auto& g : z.groebner()) {
        if (g.degree() != deg) continue;
        bool skip = false;
        for (const auto& e : exclude)
            if (Ideal(points.ring(), {e}).contains(g)) skip = true;
        if (!skip) return g;
    }
    throw GenericityError("point scheme has no equation of degree " + std::to_string(deg));
}

inline void build_2_7(CurveBundle& B, Builder& b) {
    const auto fam = DeformationFamily::random(b.ring(), b.rng());
    const Ideal gamma(b.ring(), {b.x(5), fam.Q4(), fam.Q5(), fam.F()});
    const Ideal l1 = b.vars({0, 1, 2, 5});
    const Ideal c1 = colon(gamma, l1);
    B.components = {c1, b.ideal({0, 1, 2}, {fam.q()})};
    B.component_names = {"C1", "C2"};
    B.liaisons.push_back({"C1 residual to l1 in (x5, Q4, Q5, F)", gamma, l1, c1});
}

inline void build_2_6a(CurveBundle& B, Builder& b) {
    const std::vector<std::size_t> p4{0, 1, 2, 3, 4};
    const auto J = variables(b.ring(), {0, 1, 2});
    SkewMatrix shape = SkewMatrix::from_weights(b.ring(), {1, 1, 1, 1, 3});
    std::vector<std::vector<int>> pattern(5, std::vector<int>(5));
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = 1; j <= 5; ++j) pattern[i - 1][j - 1] = shape.degree(i, j);
    const SkewMatrix N = make_tom_jerry(b.ring(), TomJerryFormat::jer({4, 5}, J, pattern, p4), b.rng());
    std::vector<Polynomial> gens{b.x(5)};
    for (auto& p : submaximal_pfaffians(N)) gens.push_back(p);
    const Ideal gamma(b.ring(), gens);
    const Ideal l1 = b.vars({0, 1, 2, 5});
    const Ideal c1 = colon(gamma, l1);
    const Polynomial q4 = point_equation(c1 + l1, 4);
    const Polynomial quartic = embed_adding_terms(q4, {3, 4, 5}, {5}, b.rng());
    B.components = {c1, b.ideal({0, 1, 2}, {quartic})};
    B.component_names = {"C1", "C2"};
    B.liaisons.push_back({"C1 residual to l1 in the Pfaffian curve", gamma, l1, c1});
}

inline void build_2_6b(CurveBundle& B, Builder& b) {
    const std::vector<std::size_t> left{2, 3, 4, 5}, right{0, 1, 4, 5}, line{4, 5};
    // Shared restrictions to the line x0 = x1 = x2 = x3 = 0.
    std::array<Polynomial, 4> r{b.form(2, line), b.form(2, line), b.form(2, line), b.form(2, line)};
    auto lift = [&](const Polynomial& base, const std::vector<std::size_t>& span, std::vector<std::size_t> in) {
        return base + b.form(2, span, in);
    };
    const Polynomial P3 = lift(r[0], left, {2, 3}), P4 = lift(r[1], left, {2, 3});
    const Polynomial Q3 = lift(r[2], left, {2, 3}), Q4 = lift(r[3], left, {2, 3});
    const Polynomial P1 = lift(r[0], right, {0, 1}), P2 = lift(r[1], right, {0, 1});
    const Polynomial Q1 = lift(r[2], right, {0, 1}), Q2 = lift(r[3], right, {0, 1});
    const Polynomial F1 = b.x(2) * P3 + b.x(3) * P4, F2 = b.x(2) * Q3 + b.x(3) * Q4;
    const Polynomial F3 = b.x(0) * P1 + b.x(1) * P2, F4 = b.x(0) * Q1 + b.x(1) * Q2;
    const Ideal line_ideal = b.vars({0, 1, 2, 3});
    const Ideal x1 = b.ideal({0, 1}, {F1, F2});
    const Ideal x2 = b.ideal({2, 3}, {F3, F4});
    const Ideal c1 = colon(x1, line_ideal);
    const Ideal c2 = colon(x2, line_ideal);
    B.components = {c1, c2};
    B.component_names = {"C1", "C2"};
    B.liaisons.push_back({"C1 residual to the line in (F1, F2)", x1, line_ideal, c1});
    B.liaisons.push_back({"C2 residual to the line in (F3, F4)", x2, line_ideal, c2});
}

inline void build_2_3(CurveBundle& B, Builder& b) {
    const std::vector<std::size_t> p3{0, 1, 2, 5}, p4{0, 1, 2, 3, 4};
    const Polynomial conic = b.x(0) * b.x(2) - b.x(1) * b.x(1);
    const std::vector<Polynomial> minors{conic, b.x(0) * b.x(4) - b.x(1) * b.x(3), b.x(1) * b.x(4) - b.x(2) * b.x(3)};
    const Polynomial P1 = b.form(1, p3), P2 = b.form(1, p3), Q1 = b.form(2, p3), Q2 = b.form(2, p3);
    const Polynomial G1 = P1 * conic + Q1 * b.x(5), G2 = P2 * conic + Q2 * b.x(5);
    const Ideal gamma = b.ideal({3, 4}, {G1, G2});
    const Ideal linker = b.ideal({3, 4, 5}, {conic});
    const Ideal c1 = colon(gamma, linker);
    const Polynomial H = P1 * Q2 - P2 * Q1;
    const Polynomial X = embed_adding_terms(H.substitute_zero({5}), p4, {3, 4}, b.rng());
    std::vector<Polynomial> c2_eqs = minors;
    c2_eqs.push_back(X);
    B.components = {b.ideal({5}, c2_eqs), c1};
    B.component_names = {"C2 (scroll section)", "C1"};
    B.liaisons.push_back({"C1 residual to the conic in (G1, G2)", gamma, linker, c1});
}

inline void build_2_5(CurveBundle& B, Builder& b) {
    const std::vector<std::size_t> p4{0, 1, 2, 3, 4};
    const auto J = variables(b.ring(), {0, 1, 2});
    std::vector<std::vector<int>> pattern(7, std::vector<int>(7, 1));
    // Alternate between the two formats by sub-seed parity of the first draw.
    const bool jer = (b.rng()() & 1u) != 0;
    const auto format = jer ? TomJerryFormat::jer({6, 7}, J, pattern, p4) : TomJerryFormat::tom({6, 7}, J, pattern, p4);
    const SkewMatrix M = make_tom_jerry(b.ring(), format, b.rng());
    std::vector<Polynomial> gens{b.x(5)};
    for (auto& p : submaximal_pfaffians(M)) gens.push_back(p);
    const Ideal gamma(b.ring(), gens);
    const Ideal l1 = b.vars({0, 1, 2, 5});
    const Ideal c1 = colon(gamma, l1);
    const Polynomial q4 = point_equation(c1 + l1, 4);
    B.components = {c1, b.ideal({0, 1, 2}, {embed_adding_terms(q4, {3, 4, 5}, {5}, b.rng())})};
    B.component_names = {"C1", "C2"};
    B.liaisons.push_back({std::string("C1 residual to l1 in the Pfaffian curve (") + (jer ? "Jer_67" : "Tom_67") + ")",
                          gamma, l1, c1});
}

inline void build_2_2(CurveBundle& B, Builder& b) {
    const std::vector<std::size_t> p4{0, 1, 2, 3, 4}, p3{2, 3, 4, 5};
    std::vector<std::vector<int>> pattern(5, std::vector<int>(5, 1));
    for (std::size_t j = 1; j < 5; ++j) pattern[0][j] = pattern[j][0] = 2;
    // Row 1 in (x0, x1): Jer_1 with J = (x0, x1).
    const SkewMatrix M =
        make_tom_jerry(b.ring(), TomJerryFormat::jer({1}, variables(b.ring(), {0, 1}), pattern, p4), b.rng());
    const auto pf = submaximal_pfaffians(M);
    const Polynomial Q3 = pf[0];  // the quadric Pfaffian (delete row 1)
    std::vector<Polynomial> gens{b.x(5)};
    gens.insert(gens.end(), pf.begin(), pf.end());
    const Ideal gamma(b.ring(), gens);
    const Ideal conic = b.ideal({0, 1, 5}, {Q3});
    const Ideal c1 = colon(gamma, conic);
    const Polynomial q = Q3.substitute_zero({0, 1});
    const Polynomial F1 = point_equation(c1 + conic, 3, {q});
    const Polynomial Q3e = embed_adding_terms(q, p3, {5}, b.rng());
    const Polynomial F1e = embed_adding_terms(F1.substitute_zero({0, 1}), p3, {5}, b.rng());
    B.components = {c1, b.ideal({0, 1}, {Q3e, F1e})};
    B.component_names = {"C1", "C2"};
    B.liaisons.push_back({"C1 residual to the conic in the Pfaffian curve", gamma, conic, c1});
}

inline void build_2_1(CurveBundle& B, Builder& b) {
    const std::vector<std::size_t> p4{0, 1, 2, 3, 4}, p3{2, 3, 4, 5};
    std::vector<std::vector<int>> pattern(7, std::vector<int>(7, 1));
    auto format = TomJerryFormat::tom({5, 6, 7}, variables(b.ring(), {0, 1}), pattern, p4);
    for (std::size_t i = 1; i <= 4; ++i) {
        format.overrides[{i, 5}] = variables(b.ring(), {0, 1, 2});
        format.overrides[{i, 6}] = variables(b.ring(), {0, 1, 3});
    }
    const SkewMatrix M = make_tom_jerry(b.ring(), format, b.rng());
    std::vector<Polynomial> gens{b.x(5)};
    for (auto& p : submaximal_pfaffians(M)) gens.push_back(p);
    const Ideal gamma(b.ring(), gens);
    const Polynomial x2x3 = b.x(2) * b.x(3);
    const Ideal conic = b.ideal({0, 1, 5}, {x2x3});
    const Ideal c1 = colon(gamma, conic);
    const Polynomial H = point_equation(c1 + conic, 3, {x2x3});
    const Polynomial Q3 = embed_adding_terms(x2x3, p3, {5}, b.rng());
    const Polynomial He = embed_adding_terms(H.substitute_zero({0, 1}), p3, {5}, b.rng());
    B.components = {c1, b.ideal({0, 1}, {Q3, He})};
    B.component_names = {"C1", "C2"};
    B.liaisons.push_back({"C1 residual to the conic in the Pfaffian curve", gamma, conic, c1});
}

inline void build_2_8(CurveBundle& B, Builder& b) {
    const std::vector<std::size_t> p3{0, 1, 2, 3};
    // 1-based indices of the source formulas: x1..x4 are x0..x3 here.
    auto cubic = [&](std::array<Polynomial, 4>& l) {
        return l[0] * b.x(0) * b.x(2) + l[1] * b.x(1) * b.x(2) + l[2] * b.x(0) * b.x(3) + l[3] * b.x(1) * b.x(3);
    };
    std::array<Polynomial, 4> l{b.form(1, p3), b.form(1, p3), b.form(1, p3), b.form(1, p3)};
    std::array<Polynomial, 4> m{b.form(1, p3), b.form(1, p3), b.form(1, p3), b.form(1, p3)};
    const Polynomial F1 = cubic(l), F2 = cubic(m);
    const Ideal gamma = b.ideal({4, 5}, {F1, F2});
    const Ideal lines = b.ideal({4, 5}, {b.x(0) * b.x(2), b.x(1) * b.x(2), b.x(0) * b.x(3), b.x(1) * b.x(3)});
    const Ideal c0 = colon(gamma, lines);
    const Ideal l1 = b.vars({0, 1, 4, 5}), l2 = b.vars({2, 3, 4, 5});
    const Polynomial h1 = point_equation(c0 + l2, 4);  // binary quartic in x0, x1
    const Polynomial h2 = point_equation(c0 + l1, 4);  // binary quartic in x2, x3
    const Ideal ear1 = b.ideal({2, 3, 4}, {embed_adding_terms(h1, {0, 1, 5}, {5}, b.rng())});
    const Ideal ear2 = b.ideal({0, 1, 5}, {embed_adding_terms(h2, {2, 3, 4}, {4}, b.rng())});
    B.components = {c0, ear1, ear2};
    B.component_names = {"C0", "C1", "C2"};
    B.liaisons.push_back({"C0 residual to the two lines in (F1, F2)", gamma, lines, c0});
}

inline std::mt19937_64 sub_rng(CurveType t, std::uint64_t seed, int attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(t)};
    return std::mt19937_64(seq);
}

}  // namespace detail

/// Human-readable reasons why a candidate bundle is not generic (empty when it is).
inline std::vector<std::string> genericity_failures(const CurveBundle& B, const ConstructionOptions& opt,
                                                    std::mt19937_64& rng) {
    std::vector<std::string> why;
    for (std::size_t i = 0; i < B.components.size(); ++i) {
        const auto& h = B.components[i].hilbert();
        if (!h.is_curve()) {
            why.push_back(B.component_names[i] + " is not a curve");
            continue;
        }
        if (h.degree != B.expected.degrees[i] || h.genus() != B.expected.genera[i])
            why.push_back(B.component_names[i] + " has (degree, genus) (" + std::to_string(h.degree) + ", " +
                          std::to_string(h.genus()) + ")");
        else if (opt.check_smoothness && !check_smoothness(B.components[i], rng).smooth)
            why.push_back(B.component_names[i] + " is singular");
    }
    if (!why.empty()) return why;
    for (std::size_t k = 0; k < B.expected.incident.size(); ++k) {
        const auto [i, j] = B.expected.incident[k];
        if (opt.check_intersections) {
            auto r = check_intersection(B.components[i], B.components[j], rng());
            if (!r.zero_dimensional || r.degree != B.expected.points_per_pair[k] || !r.reduced)
                why.push_back(B.component_names[i] + " ∩ " + B.component_names[j] + ": " + r.detail + ", length " +
                              std::to_string(r.degree));
        }
    }
    return why;
}

/**
 * @brief Seeded construction of the curve of the given type.
 *
 * Each attempt draws from its own sub-seed; an attempt is accepted when the
 * components have the expected degrees and genera, are smooth, and meet in
 * reduced schemes of the expected length.
 */
inline CurveBundle construct(CurveType type, std::uint64_t seed, Field field = Field(),
                             const ConstructionOptions& opt = {}) {
    const RingPtr ring = Ring::standard(field);
    std::ostringstream diag;
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        std::mt19937_64 rng = detail::sub_rng(type, seed, attempt);
        CurveBundle B;
        B.type = type;
        B.seed = seed;
        B.attempt = attempt;
        B.ring = ring;
        B.expected = expected_data(type);
        detail::Builder b(ring, rng);
        try {
            switch (type) {
                case CurveType::T2_1: detail::build_2_1(B, b); break;
                case CurveType::T2_2: detail::build_2_2(B, b); break;
                case CurveType::T2_3: detail::build_2_3(B, b); break;
                case CurveType::T2_5: detail::build_2_5(B, b); break;
                case CurveType::T2_6a: detail::build_2_6a(B, b); break;
                case CurveType::T2_6b: detail::build_2_6b(B, b); break;
                case CurveType::T2_7: detail::build_2_7(B, b); break;
                case CurveType::T2_8: detail::build_2_8(B, b); break;
            }
        } catch (const GenericityError& e) {
            diag << "attempt " << attempt << ": " << e.what() << "\n";
            continue;
        }
        auto why = genericity_failures(B, opt, rng);
        if (!why.empty()) {
            diag << "attempt " << attempt << ":";
            for (const auto& w : why) diag << " " << w << ";";
            diag << "\n";
            continue;
        }
        Ideal u = B.components.front();
        for (std::size_t i = 1; i < B.components.size(); ++i) u = intersect(u, B.components[i]);
        B.union_ideal = saturate(u, irrelevant_ideal(ring)).ideal;
        for (const auto& [i, j] : B.expected.incident)
            B.intersections.push_back(saturate(B.components[i] + B.components[j], irrelevant_ideal(ring)).ideal);
        return B;
    }
    throw GenericityError("construction of type " + to_string(type) + " with seed " + std::to_string(seed) +
                          " failed after " + std::to_string(opt.max_attempts) + " attempts:\n" + diag.str());
}

/// The type 2.7 family for a seed; at t = 0 its ideal is the union ideal of construct(2.7, seed).
inline DeformationFamily deformation_family(std::uint64_t seed, Field field = Field(), const ConstructionOptions& opt = {}) {
    const CurveBundle B = construct(CurveType::T2_7, seed, field, opt);
    std::mt19937_64 rng = detail::sub_rng(CurveType::T2_7, seed, B.attempt);
    return DeformationFamily::random(B.ring, rng, seed);
}

}  // namespace gorcurves

#endif  // GORCURVES_CATALOGUE_HPP
