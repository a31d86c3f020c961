#include "conclab/states.hpp"

#include <cmath>
#include <sstream>

#include "conclab/error.hpp"

namespace conclab {

Dims::Dims(int alice, int bob, int cap) : alice_(alice), bob_(bob) {
  if (alice < 1 || bob < 1 || alice > cap || bob > cap) {
    std::ostringstream os;
    os << "local dimensions (" << alice << ", " << bob
       << ") outside [1, " << cap << "]";
    throw Error(ErrorCode::kBadParameter, os.str());
  }
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(Dims dims, CMatrix coeffs)
    : dims_(dims), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != dims_.alice() || coeffs_.cols() != dims_.bob()) {
    std::ostringstream os;
    os << "coefficient matrix is " << coeffs_.rows() << "x" << coeffs_.cols()
       << ", dims are " << dims_.alice() << "x" << dims_.bob();
    throw Error(ErrorCode::kShapeMismatch, os.str());
  }
  if (!linalg::all_finite(coeffs_)) {
    throw Error(ErrorCode::kNonFiniteEntry, "coefficient matrix");
  }
  normalized_ = std::abs(coeffs_.norm() - 1.0) <= kNormalizedTol;
}

PureState PureState::zero(Dims dims) {
  return PureState(dims, CMatrix::Zero(dims.alice(), dims.bob()));
}

PureState PureState::from_vector(Dims dims, const CVector& v) {
  if (v.size() != dims.total()) {
    throw Error(ErrorCode::kShapeMismatch, "vector length does not match dims");
  }
  CMatrix c(dims.alice(), dims.bob());
  for (int i = 0; i < dims.alice(); ++i) {
    for (int j = 0; j < dims.bob(); ++j) c(i, j) = v(i * dims.bob() + j);
  }
  return PureState(dims, std::move(c));
}

CVector PureState::vector() const {
  CVector v(dims_.total());
  for (int i = 0; i < dims_.alice(); ++i) {
    for (int j = 0; j < dims_.bob(); ++j) v(i * dims_.bob() + j) = coeffs_(i, j);
  }
  return v;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Dims dims, CMatrix matrix) : dims_(dims) {
  const int n = dims.total();
  if (matrix.rows() != n || matrix.cols() != n) {
    throw Error(ErrorCode::kShapeMismatch,
                "density matrix must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
  if (!linalg::all_finite(matrix)) {
    throw Error(ErrorCode::kNonFiniteEntry, "density matrix");
  }
  const double herm = linalg::hermiticity_residual(matrix);
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "max |rho - rho^dagger| = " << herm << " exceeds " << kHermitianTol;
    throw Error(ErrorCode::kNotHermitian, os.str());
  }
  matrix_ = (matrix + matrix.adjoint()) * 0.5;
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "trace deviates from 1 by " << trace - 1.0 << " (tolerance "
       << kTraceTol << ")";
    throw Error(ErrorCode::kTraceError, os.str());
  }
  const double lmin = linalg::min_eigenvalue(matrix_);
  if (lmin < -kPositivityTol) {
    std::ostringstream os;
    os << "minimum eigenvalue " << lmin << " below " << -kPositivityTol;
    throw Error(ErrorCode::kNotPositive, os.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  const double n2 = state.squared_norm();
  if (n2 == 0.0) throw Error(ErrorCode::kZeroState, "projector of zero vector");
  const CVector v = state.vector();
  return DensityMatrix(state.dims(), v * v.adjoint() / n2);
}

// ---------------------------------------------------------------------------
// Schmidt, marginals, entropy

CMatrix SchmidtDecomposition::reconstruct() const {
  CMatrix sigma = CMatrix::Zero(left_basis.rows(), right_basis.rows());
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    sigma(i, i) = singular_values(i);
  }
  return left_basis * sigma * right_basis.transpose();
}

SchmidtDecomposition schmidt(const PureState& state, double rank_tol) {
  Eigen::JacobiSVD<CMatrix> svd(state.coeffs(),
                                Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtDecomposition out;
  out.singular_values = svd.singularValues();
  if (!out.singular_values.allFinite()) {
    throw Error(ErrorCode::kComputationFailed, "SVD of coefficient matrix");
  }
  out.left_basis = svd.matrixU();
  // ψ = U Σ V† = U Σ (V̄)ᵀ
  out.right_basis = svd.matrixV().conjugate();
  const double lmax =
      out.singular_values.size() > 0 ? out.singular_values(0) : 0.0;
  for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
    if (out.singular_values(i) > rank_tol * lmax) ++out.rank;
  }
  return out;
}

DensityMatrix reduced_density(const PureState& state, Side side) {
  const double n2 = state.squared_norm();
  if (n2 == 0.0) throw Error(ErrorCode::kZeroState, "marginal of zero vector");
  const CMatrix& psi = state.coeffs();
  if (side == Side::kA) {
    return DensityMatrix(Dims(state.dims().alice(), 1),
                         psi * psi.adjoint() / n2);
  }
  return DensityMatrix(Dims(state.dims().bob(), 1),
                       psi.transpose() * psi.conjugate() / n2);
}

double entanglement_entropy(const PureState& state) {
  if (!state.normalized()) {
    throw Error(ErrorCode::kNotNormalized,
                "entropy requires a normalized state");
  }
  const SchmidtDecomposition s = schmidt(state);
  double h = 0.0;
  for (Eigen::Index i = 0; i < s.singular_values.size(); ++i) {
    const double p = s.singular_values(i) * s.singular_values(i);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

// ---------------------------------------------------------------------------
// Decompositions

Decomposition::Decomposition(Dims dims, std::vector<PureState> members)
    : dims_(dims), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (!(m.dims() == dims_)) {
      throw Error(ErrorCode::kShapeMismatch,
                  "decomposition member has mismatched dims");
    }
  }
}

CMatrix Decomposition::density() const {
  CMatrix rho = CMatrix::Zero(dims_.total(), dims_.total());
  for (const auto& m : members_) {
    const CVector v = m.vector();
    rho.noalias() += v * v.adjoint();
  }
  return rho;
}

double reconstruction_error(const Decomposition& dec, const DensityMatrix& rho) {
  if (!(dec.dims() == rho.dims())) {
    throw Error(ErrorCode::kSizeMismatch, "dims differ");
  }
  return linalg::max_abs(dec.density() - rho.matrix());
}

MixingUnitary::MixingUnitary(CMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) {
    throw Error(ErrorCode::kShapeMismatch, "mixing unitary must be square");
  }
  const double res = linalg::unitarity_residual(u_);
  if (!(res <= kUnitaryTol)) {
    std::ostringstream os;
    os << "max |U^dagger U - I| = " << res;
    throw Error(ErrorCode::kNotUnitary, os.str());
  }
}

MixingUnitary MixingUnitary::identity(int m) {
  return MixingUnitary(CMatrix::Identity(m, m));
}

LocalUnitaryPair::LocalUnitaryPair(CMatrix v, CMatrix w)
    : v_(std::move(v)), w_(std::move(w)) {
  for (const CMatrix* x : {&v_, &w_}) {
    if (x->rows() != x->cols()) {
      throw Error(ErrorCode::kShapeMismatch, "local unitary must be square");
    }
    if (!(linalg::unitarity_residual(*x) <= kUnitaryTol)) {
      throw Error(ErrorCode::kNotUnitary, "local basis change");
    }
  }
}

LocalUnitaryPair LocalUnitaryPair::identity(const Dims& dims) {
  return LocalUnitaryPair(CMatrix::Identity(dims.alice(), dims.alice()),
                          CMatrix::Identity(dims.bob(), dims.bob()));
}

Decomposition eig_decomposition(const DensityMatrix& rho, double rank_tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kComputationFailed, "eigensolver on density matrix");
  }
  const auto& evals = es.eigenvalues();
  const Eigen::Index n = evals.size();
  const double lmax = evals(n - 1);
  std::vector<PureState> members;
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    if (!(evals(k) > rank_tol * lmax)) break;
    members.push_back(PureState::from_vector(
        rho.dims(), std::sqrt(evals(k)) * es.eigenvectors().col(k)));
  }
  return Decomposition(rho.dims(), std::move(members));
}

Decomposition pad(const Decomposition& dec, int m) {
  if (m < dec.size()) {
    throw Error(ErrorCode::kShrinkNotAllowed,
                "cannot pad " + std::to_string(dec.size()) +
                    " members down to " + std::to_string(m));
  }
  std::vector<PureState> members = dec.members();
  members.reserve(m);
  while (static_cast<int>(members.size()) < m) {
    members.push_back(PureState::zero(dec.dims()));
  }
  return Decomposition(dec.dims(), std::move(members));
}

Decomposition mix(const Decomposition& dec, const MixingUnitary& u) {
  if (u.size() != dec.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "mixing unitary of size " + std::to_string(u.size()) +
                    " for " + std::to_string(dec.size()) + " members");
  }
  const CMatrix& U = u.matrix();
  std::vector<PureState> out;
  out.reserve(dec.size());
  for (int mu = 0; mu < dec.size(); ++mu) {
    CMatrix c = CMatrix::Zero(dec.dims().alice(), dec.dims().bob());
    for (int nu = 0; nu < dec.size(); ++nu) c += U(mu, nu) * dec[nu].coeffs();
    out.emplace_back(dec.dims(), std::move(c));
  }
  return Decomposition(dec.dims(), std::move(out));
}

namespace {

void check_local(const Dims& dims, const LocalUnitaryPair& lu) {
  if (lu.v().rows() != dims.alice() || lu.w().rows() != dims.bob()) {
    throw Error(ErrorCode::kSizeMismatch,
                "local unitary sizes do not match state dims");
  }
}

}  // namespace

PureState apply_local(const PureState& state, const LocalUnitaryPair& lu) {
  check_local(state.dims(), lu);
  return PureState(state.dims(), lu.v() * state.coeffs() * lu.w().transpose());
}

DensityMatrix apply_local(const DensityMatrix& rho, const LocalUnitaryPair& lu) {
  check_local(rho.dims(), lu);
  const CMatrix k = linalg::kron(lu.v(), lu.w());
  return DensityMatrix(rho.dims(), k * rho.matrix() * k.adjoint());
}

Decomposition apply_local(const Decomposition& dec, const LocalUnitaryPair& lu) {
  std::vector<PureState> out;
  out.reserve(dec.size());
  for (const auto& m : dec.members()) out.push_back(apply_local(m, lu));
  return Decomposition(dec.dims(), std::move(out));
}

}  // namespace conclab
