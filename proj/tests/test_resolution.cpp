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

#include <gorcurves/resolution.hpp>

using namespace gorcurves;

namespace {

using Grid = std::vector<std::vector<std::int64_t>>;

void expect_complex(const FreeResolution& res) {
    for (std::size_t i = 0; i + 1 < res.length(); ++i) {
        auto dd = compose(res.maps[i], res.maps[i + 1], res.ring);
        for (const auto& col : dd.columns) ASSERT_TRUE(col.empty()) << "d" << i + 1 << " d" << i + 2 << " != 0";
    }
}

// Entries of a graded map must be homogeneous of degree col - row.
void expect_graded(const FreeResolution& res) {
    for (const auto& m : res.maps)
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& [r, e] : m.columns[c]) {
                ASSERT_TRUE(e.is_homogeneous());
                ASSERT_EQ(e.degree(), m.col_degrees[c] - m.row_degrees[r]);
            }
}

}  // namespace

class ResolutionFixture : public ::testing::Test {
   protected:
    RingPtr r = Ring::standard();
    Polynomial x(std::size_t i) const { return Polynomial::variable(r, i); }
    Ideal twisted_cubic() const {
        return Ideal(r, {x(0) * x(2) - x(1) * x(1), x(0) * x(3) - x(1) * x(2), x(1) * x(3) - x(2) * x(2), x(4), x(5)});
    }
};

TEST_F(ResolutionFixture, KoszulComplex) {
    EXPECT_EQ(betti_table(Ideal::of_variables(r, {0, 1, 2})), BettiTable(Grid{{1, 3, 3, 1}}));
    EXPECT_EQ(betti_table(Ideal::of_variables(r, {0, 1, 2, 3})), BettiTable(Grid{{1, 4, 6, 4, 1}}));
    EXPECT_EQ(betti_table(Ideal(r, {x(0) * x(0), x(1) * x(1)})), BettiTable(Grid{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
}

TEST_F(ResolutionFixture, TwistedCubicInALinearSpace) {
    // The cubic in P^3 cut out inside P^5 by x4 = x5 = 0: its table is the scroll
    // table tensored with a Koszul complex on two linear forms.
    Ideal plain(r, {x(0) * x(2) - x(1) * x(1), x(0) * x(3) - x(1) * x(2), x(1) * x(3) - x(2) * x(2)});
    EXPECT_EQ(betti_table(plain), BettiTable(Grid{{1, 0, 0}, {0, 3, 2}}));
    auto res = minimal_resolution(twisted_cubic());
    EXPECT_EQ(BettiTable::from_resolution(res), BettiTable(Grid{{1, 2, 1, 0, 0}, {0, 3, 8, 7, 2}}));
    EXPECT_FALSE(res.saturation_warning);
    expect_complex(res);
    expect_graded(res);
    EXPECT_FALSE(res.has_unit_entries());
}

TEST_F(ResolutionFixture, SchreyerFrameIsAComplexAndMinimalizes) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 4; ++k) {
        std::vector<Polynomial> g;
        for (int j = 0; j < 3; ++j) g.push_back(random_form(r, 2, {0, 1, 2, 3, 4}, rng));
        g.push_back(random_form(r, 3, all_variables(*r), rng));
        Ideal I(r, g);
        auto frame = schreyer_resolution(I);
        expect_complex(frame);
        expect_graded(frame);
        auto min = minimalize(frame);
        expect_complex(min);
        EXPECT_FALSE(min.has_unit_entries());
        // Independent count: Betti numbers from ranks of the scalar parts of the frame.
        EXPECT_EQ(betti_from_scalar_ranks(frame), BettiTable::from_resolution(min));
        // The alternating sum of the table reproduces the Hilbert numerator.
        EXPECT_EQ(BettiTable::from_resolution(min).alternating_numerator(), I.hilbert().numerator);
    }
}

TEST_F(ResolutionFixture, SaturationWarningForArtinianQuotient) {
    std::vector<Polynomial> sq;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i; j < 6; ++j) sq.push_back(x(i) * x(j));
    auto res = minimal_resolution(Ideal(r, sq));
    EXPECT_TRUE(res.saturation_warning);
    EXPECT_EQ(res.length(), 6u);
}

TEST_F(ResolutionFixture, MinimalGeneratorsDropRedundantOnes) {
    Ideal I(r, {x(0) * x(1), x(0) * x(1) * x(2), x(2) * x(3), x(0) * x(1) + x(2) * x(3)});
    auto g = minimal_generators(I);
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(Ideal(r, g), I);
}

TEST_F(ResolutionFixture, BettiTableHelpers) {
    BettiTable b(Grid{{1, 0, 0, 0, 0}, {0, 5, 5, 0, 0}, {0, 0, 0, 1, 0}});
    EXPECT_EQ(b.rows(), 3u);
    EXPECT_EQ(b.columns(), 4u);
    EXPECT_EQ(regularity(b), 2);
    EXPECT_TRUE(gorenstein_symmetric(b));
    EXPECT_FALSE(gorenstein_symmetric(BettiTable(Grid{{1, 0, 0}, {0, 3, 2}})));
    EXPECT_EQ(b.column_total(1), 5);
    EXPECT_EQ(b.alternating_numerator(), (SeriesPolynomial{1, 0, -5, 5, 0, -1}));
    EXPECT_EQ(b.at(7, 7), 0);
}

TEST_F(ResolutionFixture, SyzygiesOfSmallRows) {
    auto s = syzygies(row_matrix({x(0) * x(5), x(1) * x(5)}), r);
    ASSERT_EQ(s.cols(), 1u);
    EXPECT_EQ(s.col_degrees, (std::vector<int>{3}));
    const Polynomial* a = s.entry(0, 0);
    const Polynomial* b = s.entry(1, 0);
    ASSERT_TRUE(a && b);
    // Up to a unit the syzygy is (-x1, x0).
    EXPECT_EQ((*a) * x(0) + (*b) * x(1), Polynomial(r));
    EXPECT_EQ(a->degree(), 1);

    auto k = syzygies(row_matrix({x(0), x(1), x(2)}), r);
    EXPECT_EQ(k.cols(), 3u);
}

TEST_F(ResolutionFixture, SyzygiesAnnihilateTheMatrix) {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 3; ++k) {
        std::vector<Polynomial> f;
        for (int j = 0; j < 4; ++j) f.push_back(random_form(r, 2, {0, 1, 2, 3}, rng));
        auto m = row_matrix(f);
        auto s = syzygies(m, r);
        auto z = compose(m, s, r);
        for (const auto& col : z.columns) EXPECT_TRUE(col.empty());
        // Four general quadrics in four variables form a complete intersection: only Koszul syzygies,
        // six of them in degree 4. The returned set is a Gröbner basis, so it may hold more.
        int quartic = 0;
        for (int d : s.col_degrees) quartic += d == 4;
        EXPECT_EQ(quartic, 6);
        EXPECT_EQ(betti_table(Ideal(r, f)).at(2, 2), 6);
    }
}

TEST_F(ResolutionFixture, LinearSyzygyCounts) {
    EXPECT_EQ(linear_syzygy_counts({x(0) * x(5), x(1) * x(5), x(2) * x(5)}), (LinearSyzygyCounts{3, 1}));
    auto lines = linear_syzygy_counts({x(0) * x(2), x(1) * x(2), x(0) * x(3), x(1) * x(3)});
    EXPECT_EQ(lines, (LinearSyzygyCounts{4, 1}));
    EXPECT_THROW(linear_syzygy_counts({x(0)}), StructureError);
}

TEST_F(ResolutionFixture, RejectsInhomogeneousInput) {
    EXPECT_ANY_THROW(schreyer_resolution(Ideal(r, {x(0) * x(0) + x(1)})));
}
