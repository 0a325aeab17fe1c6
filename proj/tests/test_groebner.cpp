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

#include <gtest/gtest.h>

#include <random>

#include <gorcurves/ideal.hpp>

using namespace gorcurves;

namespace {

Monomial quotient(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> e(kMaxVariables);
    for (unsigned i = 0; i < kMaxVariables; ++i) e[i] = a[i] - b[i];
    return Monomial(e);
}

// Buchberger's criterion checked directly: every S-polynomial reduces to zero.
void expect_groebner(const Ideal& I) {
    const auto& gb = I.groebner();
    const auto& ring = I.ring();
    const Field& f = ring->field();
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            const auto& a = gb[i];
            const auto& b = gb[j];
            Monomial l = a.leading_monomial().lcm(b.leading_monomial());
            Polynomial s = a.mul_term(quotient(l, a.leading_monomial()), f.inv(a.leading_coefficient())) -
                           b.mul_term(quotient(l, b.leading_monomial()), f.inv(b.leading_coefficient()));
            ASSERT_TRUE(I.normal_form(s).is_zero()) << "S(" << a << ", " << b << ")";
        }
    for (const auto& g : I.generators()) ASSERT_TRUE(I.normal_form(g).is_zero());
}

Ideal monomial_ideal(const RingPtr& r, const std::vector<std::vector<unsigned>>& exps) {
    std::vector<Polynomial> g;
    for (const auto& e : exps) g.push_back(Polynomial::monomial(r, Monomial(e)));
    return Ideal(r, g);
}

std::vector<unsigned> random_exps(std::mt19937_64& rng, std::size_t n) {
    std::vector<unsigned> e(n);
    for (auto& x : e) x = static_cast<unsigned>(rng() % 3);
    return e;
}

}  // namespace

class GroebnerFixture : public ::testing::Test {
   protected:
    RingPtr r = Ring::standard();
    Polynomial x(std::size_t i) const { return Polynomial::variable(r, i); }
};

TEST_F(GroebnerFixture, TwistedCubicBasis) {
    Ideal I(r, {x(0) * x(2) - x(1) * x(1), x(0) * x(3) - x(1) * x(2), x(1) * x(3) - x(2) * x(2)});
    expect_groebner(I);
    EXPECT_TRUE(I.normal_form(x(0) * x(3) * x(3) - x(2) * x(2) * x(2)).is_zero());
    EXPECT_FALSE(I.normal_form(x(0) * x(3)).is_zero());
}

TEST_F(GroebnerFixture, RandomIdealsSatisfyBuchbergerCriterion) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 6; ++k) {
        std::vector<Polynomial> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(random_form(r, 2 + (j % 2), {0, 1, 2, 3}, rng));
        expect_groebner(Ideal(r, gens));
    }
}

TEST_F(GroebnerFixture, MembershipOfCombinations) {
    std::mt19937_64 rng(12);
    std::vector<Polynomial> gens{random_form(r, 2, all_variables(*r), rng), random_form(r, 2, all_variables(*r), rng),
                                 random_form(r, 3, all_variables(*r), rng)};
    Ideal I(r, gens);
    for (int k = 0; k < 10; ++k) {
        Polynomial comb(r);
        for (const auto& g : gens) comb += g * random_form(r, 4 - static_cast<unsigned>(g.degree()) + 1, all_variables(*r), rng);
        ASSERT_TRUE(I.normal_form(comb).is_zero());
    }
}

TEST_F(GroebnerFixture, UnitAndZero) {
    EXPECT_TRUE(Ideal(r, {x(0) - Polynomial::constant(r, 1), x(0)}).is_unit());
    EXPECT_TRUE(Ideal(r).is_zero());
    EXPECT_FALSE(Ideal(r, {x(0)}).is_unit());
}

TEST_F(GroebnerFixture, IntersectionOfMonomialIdealsUsesLcms) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 10; ++k) {
        std::vector<std::vector<unsigned>> a, b, l;
        for (int j = 0; j < 3; ++j) a.push_back(random_exps(rng, 4)), b.push_back(random_exps(rng, 4));
        for (const auto& u : a)
            for (const auto& v : b) {
                std::vector<unsigned> w(4);
                for (int i = 0; i < 4; ++i) w[i] = std::max(u[i], v[i]);
                l.push_back(w);
            }
        auto R4 = Ring::standard(Field(), 4);
        Ideal A = monomial_ideal(R4, a), B = monomial_ideal(R4, b);
        Ideal meet = intersect(A, B);
        EXPECT_EQ(meet, monomial_ideal(R4, l));
        EXPECT_TRUE(A.contains(meet));
        EXPECT_TRUE(B.contains(meet));
    }
}

TEST_F(GroebnerFixture, IntersectionDoubleInclusion) {
    std::mt19937_64 rng(14);
    Ideal A(r, {random_form(r, 2, all_variables(*r), rng), random_form(r, 2, all_variables(*r), rng)});
    Ideal B = Ideal::of_variables(r, {0, 1, 2});
    Ideal meet = intersect(A, B);
    EXPECT_TRUE(A.contains(meet));
    EXPECT_TRUE(B.contains(meet));
    // Every product lies in the intersection.
    for (const auto& f : A.generators())
        for (const auto& g : B.generators()) EXPECT_TRUE(meet.normal_form(f * g).is_zero());
}

TEST_F(GroebnerFixture, ColonOfMonomialIdeal) {
    Ideal I = monomial_ideal(r, {{2, 1, 0, 0, 0, 0}, {0, 2, 1, 0, 0, 0}, {0, 0, 0, 3, 0, 0}});
    Ideal J = colon(I, x(1));
    EXPECT_EQ(J, monomial_ideal(r, {{2, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 0, 3, 0, 0}}));
    EXPECT_TRUE(colon(I, Ideal(r)).is_unit());
    EXPECT_TRUE(colon(I, Polynomial(r)).is_unit());
}

TEST_F(GroebnerFixture, SaturationRemovesEmbeddedComponent) {
    // (x0) ∩ (x0, x1, x2)^2 saturated by the maximal ideal of x0..x2 gives back (x0).
    Ideal m3 = Ideal::of_variables(r, {0, 1, 2});
    Ideal sq(r, {x(0) * x(0), x(0) * x(1), x(0) * x(2), x(1) * x(1), x(1) * x(2), x(2) * x(2)});
    Ideal I = intersect(Ideal(r, {x(0)}), sq);
    EXPECT_NE(I, Ideal(r, {x(0)}));
    auto sat = saturate(I, m3);
    EXPECT_EQ(sat.ideal, Ideal(r, {x(0)}));
    EXPECT_GE(sat.index, 1);
    EXPECT_EQ(saturate(Ideal(r, {x(0)}), m3).index, 0);
}

TEST_F(GroebnerFixture, EliminationGivesImplicitEquations) {
    auto R = Ring::make({"t", "x", "y", "z"});
    auto t = Polynomial::variable(R, 0), X = Polynomial::variable(R, 1), Y = Polynomial::variable(R, 2),
         Z = Polynomial::variable(R, 3);
    Ideal I(R, {X - t, Y - t * t, Z - t * t * t});
    Ideal E = eliminate(I, {0});
    EXPECT_EQ(E, Ideal(R, {Y - X * X, Z - X * Y}));
    for (const auto& g : E.generators()) EXPECT_FALSE(g.uses_variable(0));
}

TEST_F(GroebnerFixture, ExactDivision) {
    auto f = x(0) * x(1) + x(2) * x(2), g = x(3) - x(4);
    EXPECT_EQ(exact_divide(f * g, g), f);
    EXPECT_THROW(exact_divide(f, g), StructureError);
    EXPECT_THROW(exact_divide(f, Polynomial(r)), DivisionByZero);
}
