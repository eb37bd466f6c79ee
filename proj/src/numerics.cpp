#include "versal/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "versal/error.hpp"

namespace versal {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace

double frobenius_norm(const ComplexMatrix& m) {
    // Scaled accumulation, same as LAPACK's zlange('F').
    double scale = 0.0;
    double ssq = 1.0;
    auto accumulate = [&](double v) {
        if (v == 0.0) return;
        const double a = std::abs(v);
        if (scale < a) {
            ssq = 1.0 + ssq * (scale / a) * (scale / a);
            scale = a;
        } else {
            ssq += (a / scale) * (a / scale);
        }
    };
    for (const Complex& z : m.entries()) {
        accumulate(z.real());
        accumulate(z.imag());
    }
    return scale * std::sqrt(ssq);
}

ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square()) throw DimensionMismatch("solve_linear: coefficient matrix is not square");
    if (b.rows() != a.rows()) throw DimensionMismatch("solve_linear: right-hand side row mismatch");

    const std::size_t n = a.rows();
    const std::size_t nrhs = b.cols();
    const double threshold = kSingularTol * frobenius_norm(a);

    ComplexMatrix lu = a;
    ComplexMatrix x = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0 || best < threshold) {
            throw SingularMatrix("solve_linear: pivot " + std::to_string(best) + " at column " +
                                 std::to_string(k) + " below tolerance");
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            for (std::size_t j = 0; j < nrhs; ++j) std::swap(x(k, j), x(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = lu(i, k) / lu(k, k);
            if (factor == Complex{}) continue;
            lu(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
            for (std::size_t j = 0; j < nrhs; ++j) x(i, j) -= factor * x(k, j);
        }
    }
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t j = 0; j < nrhs; ++j) {
            Complex acc = x(kk, j);
            for (std::size_t c = kk + 1; c < n; ++c) acc -= lu(kk, c) * x(c, j);
            x(kk, j) = acc / lu(kk, kk);
        }
    }
    return x;
}

ComplexMatrix min_norm_least_squares(const ComplexMatrix& a, const ComplexMatrix& b, double tau) {
    if (b.rows() != a.rows()) {
        throw DimensionMismatch("min_norm_least_squares: right-hand side row mismatch");
    }
    const Eigen::MatrixXcd ea = to_eigen(a);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(ea, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double cutoff = sigma.size() > 0 ? tau * sigma(0) : 0.0;

    Eigen::MatrixXcd coeffs = svd.matrixU().adjoint() * to_eigen(b);
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff && sigma(i) > 0.0) {
            coeffs.row(i) /= sigma(i);
        } else {
            coeffs.row(i).setZero();
        }
    }
    return from_eigen(svd.matrixV() * coeffs);
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

std::size_t numerical_rank(const ComplexMatrix& m, double tau) {
    const auto sigma = singular_values(m);
    if (sigma.empty() || sigma.front() == 0.0) return 0;
    const double cutoff = tau * sigma.front();
    std::size_t rank = 0;
    for (double s : sigma)
        if (s > cutoff) ++rank;
    return rank;
}

namespace {

Eigen::ComplexSchur<Eigen::MatrixXcd> run_schur(const ComplexMatrix& m, bool compute_u) {
    if (!m.is_square()) throw DimensionMismatch("eigenvalues: matrix is not square");
    if (m.rows() > kMaxEigenSize) {
        throw DimensionMismatch("eigenvalues: size " + std::to_string(m.rows()) +
                                " exceeds limit " + std::to_string(kMaxEigenSize));
    }
    Eigen::ComplexSchur<Eigen::MatrixXcd> s(static_cast<Eigen::Index>(m.rows()));
    s.setMaxIterations(static_cast<Eigen::Index>(500 * m.rows()));
    s.compute(to_eigen(m), compute_u);
    if (s.info() != Eigen::Success) {
        throw NoConvergence("eigenvalues: QR iteration did not converge");
    }
    return s;
}

}  // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
    const auto s = run_schur(m, false);
    const auto& t = s.matrixT();
    std::vector<Complex> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = t(i, i);
    return out;
}

SchurForm schur(const ComplexMatrix& m) {
    const auto s = run_schur(m, true);
    ComplexMatrix t = from_eigen(s.matrixT());
    // Eigen leaves the strictly lower part unspecified.
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j) t(i, j) = 0.0;
    return {from_eigen(s.matrixU()), std::move(t)};
}

ComplexMatrix reorder_schur(ComplexMatrix t, std::vector<bool> front) {
    const std::size_t n = t.rows();
    if (!t.is_square() || front.size() != n) throw DimensionMismatch("reorder_schur: size mismatch");

    // Swap the diagonal entries at k and k + 1. The first column of the
    // rotation is an eigenvector of the 2x2 block for t(k+1, k+1).
    auto swap_down = [&](std::size_t k) {
        const Complex v1 = t(k, k + 1);
        const Complex v2 = t(k + 1, k + 1) - t(k, k);
        const double norm = std::hypot(std::abs(v1), std::abs(v2));
        if (norm == 0.0) return;
        const Complex c = v1 / norm, s = v2 / norm;
        // Q = [[c, -conj(s)], [s, conj(c)]]
        for (std::size_t j = 0; j < n; ++j) {
            const Complex a = t(k, j), b = t(k + 1, j);
            t(k, j) = std::conj(c) * a + std::conj(s) * b;
            t(k + 1, j) = -s * a + c * b;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex a = t(i, k), b = t(i, k + 1);
            t(i, k) = a * c + b * s;
            t(i, k + 1) = -a * std::conj(s) + b * std::conj(c);
        }
        t(k + 1, k) = 0.0;
    };

    std::size_t placed = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!front[i]) continue;
        for (std::size_t k = i; k > placed; --k) {
            swap_down(k - 1);
            std::swap(front[k - 1], front[k]);
        }
        ++placed;
    }
    return t;
}

double matched_spectrum_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& z : a) {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(z - b[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

}  // namespace versal
