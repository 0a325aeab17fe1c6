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
#include <set>

#include <gorcurves/ideal.hpp>
#include <gorcurves/pfaffian.hpp>

#include "test_support.hpp"

using namespace gorcurves;

namespace {

SkewMatrix random_linear(const RingPtr& r, std::size_t n, std::mt19937_64& rng) {
    SkewMatrix m = SkewMatrix::uniform(r, n, 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) m.set(i, j, random_form(r, 1, all_variables(*r), rng));
    return m;
}

}  // namespace

TEST(Pfaffian, SquareEqualsDeterminantOnScalarMatrices) {
    const std::uint64_t p = kDefaultCharacteristic;
    auto r = Ring::standard();
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 * (1 + static_cast<std::size_t>(trial % 4));
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
        const std::uint64_t value = pf.is_zero() ? 0 : pf.leading_coefficient();
        ASSERT_EQ(value * value % p, testsupport::det_mod(a, p)) << "n = " << n;
    }
}

TEST(Pfaffian, SmallCasesByHand) {
    auto r = Ring::standard();
    auto x = [&](std::size_t i) { return Polynomial::variable(r, i); };
    SkewMatrix m = SkewMatrix::uniform(r, 4, 1);
    m.set(1, 2, x(0));
    m.set(1, 3, x(1));
    m.set(1, 4, x(2));
    m.set(2, 3, x(3));
    m.set(2, 4, x(4));
    m.set(3, 4, x(5));
    EXPECT_EQ(pfaffian(m), x(0) * x(5) - x(1) * x(4) + x(2) * x(3));
    EXPECT_EQ(pfaffian(SkewMatrix::uniform(r, 0, 1)), Polynomial::constant(r, 1));
    EXPECT_EQ(m.at(3, 1), -x(1));
    EXPECT_TRUE(m.at(2, 2).is_zero());
}

// Entries x0^g * x1^(55-g) with g from a Golomb ruler: all pairwise products are
// distinct monomials, so the expansion can be compared term by term.
TEST(Pfaffian, GenericFiveByFiveSubmaximalPfaffians) {
    auto r = Ring::standard(Field(), 2);
    const std::vector<unsigned> ruler{0, 1, 6, 10, 23, 26, 34, 41, 53, 55};
    std::set<unsigned> sums;
    for (std::size_t i = 0; i < ruler.size(); ++i)
        for (std::size_t j = i + 1; j < ruler.size(); ++j) sums.insert(ruler[i] + ruler[j]);
    ASSERT_EQ(sums.size(), ruler.size() * (ruler.size() - 1) / 2);

    SkewMatrix m = SkewMatrix::uniform(r, 5, 55);
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> a;
    std::size_t k = 0;
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = i + 1; j <= 5; ++j) {
            std::vector<unsigned> e{ruler[k], 55 - ruler[k]};
            ++k;
            Polynomial entry = Polynomial::monomial(r, Monomial(e));
            m.set(i, j, entry);
            a.emplace(std::make_pair(i, j), entry);
        }
    auto A = [&](std::size_t i, std::size_t j) { return a.at({i, j}); };
    const auto pf = submaximal_pfaffians(m);
    ASSERT_EQ(pf.size(), 5u);
    for (std::size_t drop = 1; drop <= 5; ++drop) {
        std::vector<std::size_t> s;
        for (std::size_t i = 1; i <= 5; ++i)
            if (i != drop) s.push_back(i);
        const Polynomial expect = A(s[0], s[1]) * A(s[2], s[3]) - A(s[0], s[2]) * A(s[1], s[3]) +
                                  A(s[0], s[3]) * A(s[1], s[2]);
        EXPECT_EQ(pf[drop - 1], expect) << "deleting index " << drop;
        EXPECT_EQ(pf[drop - 1].size(), 3u);
    }
}

TEST(Pfaffian, SyzygyVectorIsInTheKernel) {
    auto r = Ring::standard();
    std::mt19937_64 rng(42);
    for (std::size_t n : {5u, 7u}) {
        for (int t = 0; t < 3; ++t) {
            SkewMatrix m = random_linear(r, n, rng);
            for (const auto& e : multiply(m, pfaffian_syzygy_vector(m))) ASSERT_TRUE(e.is_zero());
        }
    }
}

TEST(Pfaffian, WeightedPatternGivesHomogeneousPfaffians) {
    auto r = Ring::standard();
    std::mt19937_64 rng(43);
    SkewMatrix m = SkewMatrix::from_weights(r, {1, 1, 1, 1, 3});
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = i + 1; j <= 5; ++j)
            m.set(i, j, random_form(r, static_cast<unsigned>(m.degree(i, j)), all_variables(*r), rng));
    const auto pf = submaximal_pfaffians(m);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_TRUE(pf[i].is_homogeneous());
        EXPECT_EQ(pf[i].degree(), 3);
    }
    EXPECT_EQ(pf[4].degree(), 2);
}

TEST(Pfaffian, TomAndJerryMembership) {
    auto r = Ring::standard();
    const std::vector<Polynomial> J{Polynomial::variable(r, 0), Polynomial::variable(r, 1), Polynomial::variable(r, 2)};
    const Ideal ideal(r, J);
    const auto pattern = std::vector<std::vector<int>>(7, std::vector<int>(7, 1));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        auto tom = make_tom_jerry(r, TomJerryFormat::tom({6, 7}, J, pattern, {}), rng);
        auto jer = make_tom_jerry(r, TomJerryFormat::jer({6, 7}, J, pattern, {}), rng);
        for (std::size_t i = 1; i <= 7; ++i)
            for (std::size_t j = i + 1; j <= 7; ++j) {
                const bool marked = i >= 6 || j >= 6;
                if (marked) {
                    ASSERT_TRUE(ideal.normal_form(jer.at(i, j)).is_zero());
                } else {
                    ASSERT_TRUE(ideal.normal_form(tom.at(i, j)).is_zero());
                }
            }
        // Unconstrained entries are genuinely outside the ideal for a random choice.
        EXPECT_FALSE(ideal.normal_form(tom.at(6, 7)).is_zero());
        EXPECT_FALSE(ideal.normal_form(jer.at(1, 2)).is_zero());
    }
}

TEST(Pfaffian, StructuralErrors) {
    auto r = Ring::standard();
    EXPECT_THROW(pfaffian(SkewMatrix::uniform(r, 5, 1)), StructureError);
    EXPECT_THROW(submaximal_pfaffians(SkewMatrix::uniform(r, 4, 1)), StructureError);
    EXPECT_THROW(SkewMatrix(r, {{0, 1, 1, 1}, {1, 0, 1, 2}, {1, 1, 0, 1}, {1, 2, 1, 0}}), StructureError);
    EXPECT_THROW(SkewMatrix(r, {{0, 1}, {2, 0}}), StructureError);
    auto m = SkewMatrix::uniform(r, 3, 1);
    EXPECT_THROW(m.set(1, 2, Polynomial::variable(r, 0) * Polynomial::variable(r, 1)), StructureError);
    EXPECT_THROW(m.set(1, 1, Polynomial::variable(r, 0)), StructureError);
    EXPECT_THROW(m.at(0, 1), StructureError);
    EXPECT_THROW(SkewMatrix::from_weights(r, {1, 2}), StructureError);
}
