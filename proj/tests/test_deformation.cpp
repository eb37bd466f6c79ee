#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "test_support.hpp"
#include "versal/deformation.hpp"
#include "versal/error.hpp"
#include "versal/numerics.hpp"

namespace versal {
namespace {

using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;  // 1-based row, col, param

std::vector<Entry> one_based(const DeformationPattern& p) {
    std::vector<Entry> out;
    for (const auto& s : p.stars) out.emplace_back(s.row + 1, s.col + 1, s.param + 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Entry> sorted(std::vector<Entry> v) {
    std::sort(v.begin(), v.end());
    return v;
}

SegreStructure single(Complex lambda, std::vector<std::size_t> sizes) {
    return SegreStructure({{lambda, std::move(sizes)}});
}

const Complex kLambda(0.5, -1.0);
const Complex kMu(-2.0, 0.25);

SegreStructure example_structure() {
    return SegreStructure({{kLambda, {3, 2, 1}}, {kMu, {2}}});
}

TEST(ArnoldPattern, TwoByTwoBlock) {
    const auto p = arnold_pattern(single(0.0, {2}));
    EXPECT_EQ(p.parameter_count, 2u);
    EXPECT_EQ(one_based(p), sorted({{2, 1, 1}, {2, 2, 2}}));
}

TEST(ArnoldPattern, ThreePlusTwo) {
    const auto p = arnold_pattern(SegreStructure({{kLambda, {3, 2}}}));
    EXPECT_EQ(p.parameter_count, 9u);
    EXPECT_EQ(one_based(p), sorted({{3, 1, 1}, {3, 2, 2}, {3, 3, 3}, {3, 4, 4}, {3, 5, 5},
                                    {4, 1, 6}, {5, 1, 7}, {5, 4, 8}, {5, 5, 9}}));
}

TEST(ArnoldPattern, MultiEigenvalueExample) {
    const auto p = arnold_pattern(example_structure());
    EXPECT_EQ(p.parameter_count, 16u);
    EXPECT_EQ(one_based(p),
              sorted({{3, 1, 1},  {3, 2, 2},  {3, 3, 3},  {3, 4, 4},   {3, 5, 5},  {3, 6, 6},
                      {4, 1, 7},  {5, 1, 8},  {6, 1, 9},  {5, 4, 10},  {5, 5, 11}, {5, 6, 12},
                      {6, 4, 13}, {6, 6, 14}, {8, 7, 15}, {8, 8, 16}}));
}

TEST(AlternatePattern, SingleBlocks) {
    const auto one = alternate_pattern(single(kLambda, {1}));
    EXPECT_EQ(one_based(one), sorted({{1, 1, 1}}));

    const auto p = alternate_pattern(single(kLambda, {3}));
    EXPECT_EQ(p.parameter_count, 3u);
    EXPECT_EQ(one_based(p), sorted({{3, 1, 1}, {2, 1, 2}, {3, 2, 2}, {1, 1, 3}, {2, 2, 3}, {3, 3, 3}}));
}

TEST(AlternatePattern, MultiEigenvalueExample) {
    const auto p = alternate_pattern(example_structure());
    EXPECT_EQ(p.parameter_count, 16u);
    EXPECT_EQ(one_based(p),
              sorted({// lambda: 3x3 block
                      {3, 1, 1}, {2, 1, 2}, {3, 2, 2}, {1, 1, 3}, {2, 2, 3}, {3, 3, 3},
                      // 3x2 and 3x1 coupling blocks
                      {3, 4, 4}, {2, 4, 5}, {3, 5, 5}, {3, 6, 6},
                      // 2x3 and 1x3 coupling blocks
                      {4, 1, 7}, {5, 2, 7}, {5, 1, 8}, {6, 1, 9},
                      // 2x2 block and its couplings to the 1x1 block
                      {5, 4, 10}, {4, 4, 11}, {5, 5, 11}, {5, 6, 12}, {6, 4, 13}, {6, 6, 14},
                      // mu
                      {8, 7, 15}, {7, 7, 16}, {8, 8, 16}}));
}

TEST(Patterns, StarCountIdentity) {
    for (const auto& s : testing::all_structures(8, {0.0, 1.0})) {
        const auto arnold = arnold_pattern(s);
        const auto alternate = alternate_pattern(s);
        std::size_t pair_sum = 0, hook_sum = 0;
        for (const auto& g : s.groups()) {
            for (std::size_t p = 0; p < g.sizes.size(); ++p) {
                hook_sum += (2 * p + 1) * g.sizes[p];
                for (std::size_t q = 0; q < g.sizes.size(); ++q) pair_sum += std::min(g.sizes[p], g.sizes[q]);
            }
        }
        EXPECT_EQ(arnold.stars.size(), pair_sum);
        EXPECT_EQ(arnold.stars.size(), hook_sum);
        EXPECT_EQ(arnold.parameter_count, arnold.stars.size());
        EXPECT_EQ(alternate.parameter_count, arnold.parameter_count);

        // Stars never couple distinct eigenvalues, and positions are unique.
        std::set<std::pair<std::size_t, std::size_t>> seen;
        std::vector<std::size_t> group_of;
        for (std::size_t gi = 0; gi < s.groups().size(); ++gi)
            group_of.insert(group_of.end(), s.groups()[gi].multiplicity(), gi);
        for (const auto& star : alternate.stars) {
            EXPECT_EQ(group_of[star.row], group_of[star.col]);
            EXPECT_TRUE(seen.insert({star.row, star.col}).second);
        }
    }
}

TEST(Instantiate, Examples) {
    const SegreStructure s({{kLambda, {3, 2}}});
    const auto arnold = arnold_pattern(s);
    ParameterValues zeros;
    for (std::size_t i = 0; i < 9; ++i) zeros[i] = 0.0;
    EXPECT_EQ(instantiate(arnold, zeros), build_jcf(s));

    ParameterValues v = zeros;
    v[3] = 1e-3;
    ComplexMatrix expected = build_jcf(s);
    expected(2, 3) = 1e-3;
    EXPECT_EQ(instantiate(arnold, v), expected);

    const SegreStructure three({{kLambda, {3}}});
    const Complex a(0.25, 0.5);
    const auto m = instantiate(alternate_pattern(three), {{0, 0.0}, {1, a}, {2, 0.0}});
    ComplexMatrix expected3 = build_jcf(three);
    expected3(1, 0) = a;
    expected3(2, 1) = a;
    EXPECT_EQ(m, expected3);
}

TEST(Instantiate, MissingParameterNamesIndex) {
    const auto p = arnold_pattern(single(0.0, {2}));
    try {
        instantiate(p, {{0, 1.0}});
        FAIL() << "expected MissingParameter";
    } catch (const MissingParameter& e) {
        EXPECT_EQ(e.param(), 1u);
    }
}

TEST(CharacteristicCoefficients, AgreesWithExpansion) {
    std::mt19937_64 gen(41);
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto a = testing::random_matrix(gen, n, n);
        const auto c = characteristic_coefficients(a);
        const auto ref = testing::charpoly_bruteforce(a);
        ASSERT_EQ(c.size(), n);
        for (std::size_t i = 0; i < n; ++i) EXPECT_LE(std::abs(c[i] - ref[i]), 1e-10) << n << " " << i;
    }
}

TEST(ReduceSingleBlock, ZeroPerturbation) {
    const auto j = build_jcf(single(kLambda, {4}));
    const auto r = reduce_single_block(j, kLambda);
    EXPECT_EQ(r.deformed, j);
    EXPECT_EQ(r.transform, ComplexMatrix::identity(4));
}

TEST(ReduceSingleBlock, TwoByTwoClosedForm) {
    std::mt19937_64 gen(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto e = testing::random_with_norm(gen, 2, 2, 1e-2);
        const auto a = build_jcf(single(0.0, {2})) + e;
        const auto r = reduce_single_block(a, 0.0);
        const Complex d1 = e(1, 0) * (1.0 + e(0, 1)) - e(0, 0) * e(1, 1);
        const Complex d2 = e(0, 0) + e(1, 1);
        const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        EXPECT_LE(std::abs(r.deformed(1, 0) - d1), 1e-15);
        EXPECT_LE(std::abs(r.deformed(1, 1) - d2), 1e-15);
        EXPECT_LE(std::abs(r.deformed(1, 0) + det), 1e-15);
        EXPECT_EQ(r.deformed(0, 0), Complex{});
        EXPECT_EQ(r.deformed(0, 1), Complex(1.0));
    }
}

TEST(ReduceSingleBlock, LastRowIsNegatedCharacteristicPolynomial) {
    std::mt19937_64 gen(47);
    for (std::size_t k = 2; k <= 6; ++k) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto e = testing::random_with_norm(gen, k, k, 1e-3);
            const auto a = build_jcf(single(kLambda, {k})) + e;
            const auto r = reduce_single_block(a, kLambda);

            ComplexMatrix shifted = a;
            for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= kLambda;
            const auto ref = testing::charpoly_bruteforce(shifted);
            for (std::size_t j = 0; j < k; ++j) {
                const Complex value = r.deformed(k - 1, j) - (j == k - 1 ? kLambda : Complex{});
                EXPECT_LE(std::abs(value + ref[j]), 1e-10) << "k=" << k << " j=" << j;
            }
        }
    }
}

TEST(ReduceSingleBlock, OutputLiesOnPatternAndIsSimilar) {
    std::mt19937_64 gen(53);
    for (std::size_t k = 1; k <= 6; ++k) {
        const SegreStructure s = single(kLambda, {k});
        const auto j = build_jcf(s);
        std::set<std::pair<std::size_t, std::size_t>> allowed;
        for (const auto& star : arnold_pattern(s).stars) allowed.insert({star.row, star.col});

        for (int trial = 0; trial < 20; ++trial) {
            const auto a = j + testing::random_with_norm(gen, k, k, 1e-3);
            const auto r = reduce_single_block(a, kLambda);
            const auto d = r.deformed - j;
            for (std::size_t row = 0; row < k; ++row)
                for (std::size_t col = 0; col < k; ++col)
                    if (!allowed.contains({row, col})) EXPECT_LE(std::abs(d(row, col)), 1e-12);

            const auto back = solve_linear(r.transform, a * r.transform);
            EXPECT_LE(frobenius_norm(back - r.deformed), 1e-12 * frobenius_norm(a));
            EXPECT_LE(matched_spectrum_distance(eigenvalues(r.deformed), eigenvalues(a)), 1e-8);
        }
    }
}

TEST(ReduceSingleBlock, PivotBreakdown) {
    ComplexMatrix a = build_jcf(single(0.0, {3}));
    a(1, 2) = 1e-10;
    try {
        reduce_single_block(a, 0.0);
        FAIL() << "expected PivotBreakdown";
    } catch (const PivotBreakdown& e) {
        EXPECT_EQ(e.step(), 1u);
        EXPECT_DOUBLE_EQ(e.pivot(), 1e-10);
    }
    EXPECT_THROW(reduce_single_block(ComplexMatrix::zeros(2, 3), 0.0), DimensionMismatch);
}

}  // namespace
}  // namespace versal
