#include <gtest/gtest.h>

#include "test_support.hpp"
#include "versal/codimension.hpp"
#include "versal/deformation.hpp"

namespace versal {
namespace {

SegreStructure single(Complex lambda, std::vector<std::size_t> sizes) {
    return SegreStructure({{lambda, std::move(sizes)}});
}

SegreStructure a_q(std::size_t q) {
    std::vector<EigenBlocks> groups{{0.0, {3}}};
    for (std::size_t i = 1; i < q; ++i) groups.push_back({Complex(static_cast<double>(i), 1.0), {1}});
    return SegreStructure(groups);
}

TEST(OrbitCodim, Examples) {
    const Complex lambda(1.0, 2.0), mu(-3.0, 0.0);
    EXPECT_EQ(orbit_codim(SegreStructure({{lambda, {3, 2, 1}}, {mu, {2}}})), 16u);
    EXPECT_EQ(orbit_codim(single(lambda, {1})), 1u);
    EXPECT_EQ(orbit_codim(single(lambda, {3, 2})), 9u);
    EXPECT_EQ(orbit_dimension(single(lambda, {3, 2})), 16u);
}

TEST(BundleCodim, Examples) {
    for (std::size_t q = 1; q <= 5; ++q) EXPECT_EQ(bundle_codim(a_q(q)), 2u) << "q=" << q;
    EXPECT_EQ(bundle_codim(single(0.0, {1})), 0u);
    EXPECT_EQ(bundle_codim(single(0.0, {3, 2})), 8u);
    EXPECT_EQ(bundle_dimension(single(0.0, {3, 2})), 17u);
}

TEST(OrbitCodimOracle, Examples) {
    EXPECT_EQ(orbit_codim_oracle(single(0.0, {1})), 1u);
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(orbit_codim_oracle(single(Complex(0.5, 1.0), {n})), n);
    EXPECT_EQ(orbit_codim_oracle(single(2.0, {3, 2})), 9u);
}

TEST(OrbitCodimOracle, AgreesWithFormulaForSmallStructures) {
    // The full sweep up to n = 6 runs in the acceptance binary.
    for (const auto& s : testing::all_structures(4, {0.0, 1.0, Complex(2, 1)})) {
        EXPECT_EQ(orbit_codim(s), orbit_codim_oracle(s));
        EXPECT_EQ(orbit_codim(s), arnold_pattern(s).parameter_count);
    }
}

TEST(OrbitCodim, SingleEigenvalueExtremes) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto parts = testing::partitions(n);
        std::size_t lo = n * n, hi = 0;
        for (const auto& p : parts) {
            const auto c = orbit_codim(single(0.0, p));
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        EXPECT_EQ(lo, n);
        EXPECT_EQ(orbit_codim(single(0.0, {n})), n);
        EXPECT_EQ(hi, n * n);
        EXPECT_EQ(orbit_codim(single(0.0, std::vector<std::size_t>(n, 1))), n * n);
    }
}

TEST(OrbitCodim, IndependentOfEigenvalueValues) {
    for (const auto& s : testing::all_structures(6, {0.0, 1.0, Complex(2, 1)})) {
        std::vector<Complex> moved;
        for (std::size_t i = 0; i < s.groups().size(); ++i) moved.push_back(Complex(-7.0 + 3.0 * i, 0.5));
        const auto r = s.relabeled(moved);
        EXPECT_EQ(orbit_codim(r), orbit_codim(s));
        EXPECT_EQ(bundle_codim(r), bundle_codim(s));
    }
}

}  // namespace
}  // namespace versal
