#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace conclab {

using Complex = std::complex<double>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RVector = Eigen::VectorXd;

/// Seeded stream used everywhere randomness enters the library.
using Rng = std::mt19937_64;

namespace linalg {

/// Kronecker product, (a ⊗ b)_{(i,j),(k,l)} = a_ik b_jl with composite
/// index i·rows(b) + j.
CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);

/// max |m - m†|
double hermiticity_residual(const CMatrix& m);

/// max |u†u - I|
double unitarity_residual(const CMatrix& u);

bool all_finite(const CMatrix& m);

/// Matrix of i.i.d. standard complex Gaussians (unit variance per entry).
CMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
CMatrix haar_unitary(Eigen::Index n, Rng& rng);

/// n×k matrix with orthonormal columns, Haar-distributed.
CMatrix haar_isometry(Eigen::Index n, Eigen::Index k, Rng& rng);

/// Nearest unitary in Frobenius norm (polar factor).
CMatrix closest_unitary(const CMatrix& m);

/// exp(a) for anti-Hermitian a, computed through the Hermitian eigensystem
/// of i·a so the result is unitary to working precision.
CMatrix expm_antihermitian(const CMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix (only the lower triangle is read).
double min_eigenvalue(const CMatrix& hermitian);

}  // namespace linalg
}  // namespace conclab
