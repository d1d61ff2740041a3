// linalg.hpp — Fixed-size complex linear algebra: 2x2/4x4 operators, tensor
// products, matrix exponentials (Hermitian or not), and state/density metrics.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>

#include "ptsim/errors.hpp"

namespace ptsim {

using Complex = std::complex<double>;

// 2x2 single-qubit operator (V, U1, U2, Hadamard, Hamiltonians).
using Gate2 = Eigen::Matrix2cd;
// 4x4 two-qubit operator (controlled gates, compiled pulse propagators).
using Mat4 = Eigen::Matrix4cd;
// Four amplitudes in ancilla (x) work order: |00>,|01>,|10>,|11>, ancilla left.
using TwoQubitState = Eigen::Vector4cd;
// Two work-qubit amplitudes.
using WorkState = Eigen::Vector2cd;
// 2x2 density matrix of the work qubit.
using Density2 = Eigen::Matrix2cd;

// --------------------------- constants --------------------------------------

inline Gate2 identity2() { return Gate2::Identity(); }
inline Mat4 identity4() { return Mat4::Identity(); }

inline Gate2 pauli_x() {
    Gate2 m;
    m << 0, 1, 1, 0;
    return m;
}

inline Gate2 pauli_y() {
    Gate2 m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Gate2 pauli_z() {
    Gate2 m;
    m << 1, 0, 0, -1;
    return m;
}

// --------------------------- predicates -------------------------------------

template <typename Derived>
bool is_finite(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

// Entrywise max |A - B|.
template <typename DA, typename DB>
double max_abs_diff(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// ||G^dag G - I||_max <= tol
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& g, double tol = 1e-12) {
    using Plain = typename Derived::PlainObject;
    Plain gram = g.adjoint() * g;
    return max_abs_diff(gram, Plain::Identity(g.rows(), g.cols())) <= tol;
}

// --------------------------- tensor product ---------------------------------

// Kronecker product with the ancilla as the left (most significant) factor,
// consistent with the TwoQubitState basis ordering.
inline Mat4 tensor(const Gate2& ancilla, const Gate2& work) {
    return Eigen::kroneckerProduct(ancilla, work).eval();
}

inline TwoQubitState tensor_state(const WorkState& ancilla, const WorkState& work) {
    return Eigen::kroneckerProduct(ancilla, work).eval();
}

// --------------------------- matrix exponential -----------------------------

enum class ExpmMethod { Eig, Series };

namespace detail {

// Eigenvector matrix condition number above which the eig path refuses;
// near the exceptional point the Hamiltonian loses diagonalizability.
inline constexpr double kEigConditionBound = 1e8;

inline constexpr int kTaylorTerms = 18;

} // namespace detail

// Scaling-and-squaring with a truncated Taylor kernel. Works for any finite
// square complex matrix; serves as the independent reference path.
template <int N>
Eigen::Matrix<Complex, N, N> expm_series(const Eigen::Matrix<Complex, N, N>& m) {
    using Mat = Eigen::Matrix<Complex, N, N>;
    if (!is_finite(m)) throw NonFiniteError("expm_series: non-finite input");

    const double norm = m.template lpNorm<1>();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Mat a = m / std::pow(2.0, squarings);

    // Horner evaluation of sum_{k=0..K} a^k / k!
    Mat result = Mat::Identity();
    for (int k = detail::kTaylorTerms; k >= 1; --k) {
        result = Mat::Identity() + (a * result) / static_cast<double>(k);
    }
    for (int i = 0; i < squarings; ++i) result = (result * result).eval();
    return result;
}

// Diagonalize-and-exponentiate. Throws NonDiagonalizableError when the
// eigenvector matrix is too ill-conditioned to trust (caller falls back to
// the series path).
template <int N>
Eigen::Matrix<Complex, N, N> expm_eig(const Eigen::Matrix<Complex, N, N>& m) {
    using Mat = Eigen::Matrix<Complex, N, N>;
    if (!is_finite(m)) throw NonFiniteError("expm_eig: non-finite input");

    Eigen::ComplexEigenSolver<Mat> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NonDiagonalizableError("expm_eig: eigendecomposition failed");

    const Mat vectors = solver.eigenvectors();
    Eigen::JacobiSVD<Mat> svd(vectors);
    const double smin = svd.singularValues()(N - 1);
    const double smax = svd.singularValues()(0);
    if (!(smin > 0.0) || smax / smin > detail::kEigConditionBound)
        throw NonDiagonalizableError("expm_eig: eigenvector condition number above bound");

    Eigen::Vector<Complex, N> lambda = solver.eigenvalues();
    for (int i = 0; i < N; ++i) lambda(i) = std::exp(lambda(i));
    return vectors * lambda.asDiagonal() * vectors.inverse();
}

template <int N>
Eigen::Matrix<Complex, N, N> expm(const Eigen::Matrix<Complex, N, N>& m, ExpmMethod method) {
    return method == ExpmMethod::Eig ? expm_eig(m) : expm_series(m);
}

// Default route: eig with automatic fallback to series near defective inputs.
template <int N>
Eigen::Matrix<Complex, N, N> expm(const Eigen::Matrix<Complex, N, N>& m) {
    try {
        return expm_eig(m);
    } catch (const NonDiagonalizableError&) {
        return expm_series(m);
    }
}

// --------------------------- density-matrix metrics -------------------------

inline bool is_valid_density(const Density2& rho, double tol = 1e-12) {
    if (!is_finite(rho)) return false;
    if (max_abs_diff(rho, Density2(rho.adjoint())) > tol) return false;
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Density2> solver(rho);
    return solver.eigenvalues().minCoeff() >= -tol;
}

namespace detail {

inline void require_density(const Density2& rho, const char* who) {
    if (!is_valid_density(rho))
        throw InvalidDensityError(std::string(who) + ": argument violates density-matrix invariants");
}

} // namespace detail

// Uhlmann fidelity in the squared-overlap convention; for a qubit
// F = tr(rho sigma) + 2 sqrt(det rho * det sigma).
inline double fidelity(const Density2& rho, const Density2& sigma) {
    detail::require_density(rho, "fidelity");
    detail::require_density(sigma, "fidelity");
    const double cross = (rho * sigma).trace().real();
    const double dets = std::max(0.0, rho.determinant().real()) *
                        std::max(0.0, sigma.determinant().real());
    return std::clamp(cross + 2.0 * std::sqrt(std::max(0.0, dets)), 0.0, 1.0);
}

// (1/2) ||rho - sigma||_1 via the eigenvalues of the Hermitian difference.
inline double trace_distance(const Density2& rho, const Density2& sigma) {
    detail::require_density(rho, "trace_distance");
    detail::require_density(sigma, "trace_distance");
    Eigen::SelfAdjointEigenSolver<Density2> solver(rho - sigma);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

} // namespace ptsim
