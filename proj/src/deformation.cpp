#include "versal/deformation.hpp"

#include <algorithm>
#include <string>

#include "versal/error.hpp"

namespace versal {

namespace {

// An Arnold star together with the block pair it belongs to.
struct PlacedStar {
    std::size_t row_offset;
    std::size_t col_offset;
    std::size_t block_rows;
    std::size_t block_cols;
    std::size_t local_row;
    std::size_t local_col;
};

std::vector<PlacedStar> arnold_stars(const SegreStructure& s) {
    std::vector<PlacedStar> out;
    std::size_t group_offset = 0;
    for (const auto& g : s.groups()) {
        const auto& k = g.sizes;
        std::vector<std::size_t> off(k.size());
        for (std::size_t p = 0, acc = group_offset; p < k.size(); ++p) {
            off[p] = acc;
            acc += k[p];
        }
        for (std::size_t p = 0; p < k.size(); ++p) {
            // Bottom row of block row p; k[q] <= k[p] for q >= p.
            for (std::size_t q = p; q < k.size(); ++q)
                for (std::size_t c = 0; c < k[q]; ++c)
                    out.push_back({off[p], off[q], k[p], k[q], k[p] - 1, c});
            // First column of block column p below the diagonal.
            for (std::size_t q = p + 1; q < k.size(); ++q)
                for (std::size_t r = 0; r < k[q]; ++r)
                    out.push_back({off[q], off[p], k[q], k[p], r, 0});
        }
        group_offset += g.multiplicity();
    }
    return out;
}

}  // namespace

DeformationPattern arnold_pattern(const SegreStructure& s) {
    DeformationPattern pattern{s, DeformationShape::Arnold, {}, 0};
    for (const auto& ps : arnold_stars(s)) {
        pattern.stars.push_back(
            {ps.row_offset + ps.local_row, ps.col_offset + ps.local_col, pattern.parameter_count++});
    }
    return pattern;
}

DeformationPattern alternate_pattern(const SegreStructure& s) {
    DeformationPattern pattern{s, DeformationShape::Alternate, {}, 0};
    for (const auto& ps : arnold_stars(s)) {
        const std::size_t param = pattern.parameter_count++;
        // Walk the diagonal row - col = const through the Arnold star.
        std::size_t r = ps.local_row - std::min(ps.local_row, ps.local_col);
        std::size_t c = ps.local_col - std::min(ps.local_row, ps.local_col);
        for (; r < ps.block_rows && c < ps.block_cols; ++r, ++c)
            pattern.stars.push_back({ps.row_offset + r, ps.col_offset + c, param});
    }
    return pattern;
}

DeformationPattern make_pattern(const SegreStructure& s, DeformationShape shape) {
    return shape == DeformationShape::Arnold ? arnold_pattern(s) : alternate_pattern(s);
}

ComplexMatrix instantiate(const DeformationPattern& p, const ParameterValues& values) {
    for (std::size_t i = 0; i < p.parameter_count; ++i) {
        if (!values.contains(i)) {
            throw MissingParameter("no value for parameter " + std::to_string(i + 1), i);
        }
    }
    ComplexMatrix m = build_jcf(p.base);
    for (const auto& star : p.stars) m(star.row, star.col) += values.at(star.param);
    return m;
}

ReductionResult reduce_single_block(const ComplexMatrix& a, Complex lambda) {
    if (!a.is_square()) throw DimensionMismatch("reduce_single_block: matrix is not square");
    const std::size_t k = a.rows();

    ComplexMatrix b = a;
    for (std::size_t i = 0; i < k; ++i) b(i, i) -= lambda;
    ComplexMatrix s = ComplexMatrix::identity(k);

    for (std::size_t p = 0; p + 1 < k; ++p) {
        const Complex pivot = b(p, p + 1);
        if (std::abs(pivot) < kPivotTol) {
            throw PivotBreakdown("reduce_single_block: pivot |b(" + std::to_string(p + 1) + "," +
                                     std::to_string(p + 2) + ")| = " +
                                     std::to_string(std::abs(pivot)) + " below tolerance",
                                 p, std::abs(pivot));
        }
        // T = I except row p+1; its inverse is I except row p+1 = b(p, :).
        ComplexMatrix t = ComplexMatrix::identity(k);
        ComplexMatrix t_inv = ComplexMatrix::identity(k);
        for (std::size_t j = 0; j < k; ++j) {
            t(p + 1, j) = (j == p + 1) ? 1.0 / pivot : -b(p, j) / pivot;
            t_inv(p + 1, j) = b(p, j);
        }
        b = t_inv * (b * t);
        // Row p is e_{p+1} by construction; store it exactly.
        for (std::size_t j = 0; j < k; ++j) b(p, j) = (j == p + 1) ? 1.0 : 0.0;
        s = s * t;
    }
    for (std::size_t i = 0; i < k; ++i) b(i, i) += lambda;
    return {std::move(b), std::move(s)};
}

std::vector<Complex> characteristic_coefficients(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("characteristic_coefficients: not square");
    const std::size_t n = a.rows();
    std::vector<Complex> c(n + 1);
    c[n] = 1.0;
    ComplexMatrix m = ComplexMatrix::zeros(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        const ComplexMatrix am = a * m;
        Complex trace{};
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        c[n - k] = -trace / static_cast<double>(k);
    }
    c.pop_back();
    return c;
}

}  // namespace versal
