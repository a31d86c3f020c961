#pragma once

#include <vector>

#include "conclab/linalg.hpp"

namespace conclab {

inline constexpr int kDefaultDimCap = 8;
inline constexpr double kDefaultRankTol = 1e-10;

// Validation tolerances for density matrices and unitaries.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormalizedTol = 1e-12;

/// Local dimensions of a bipartite system. A dimension of 1 is allowed so
/// that a single-party marginal can be carried as (d, 1); every
/// entanglement operation checks for d >= 2 itself.
class Dims {
 public:
  Dims(int alice, int bob, int cap = kDefaultDimCap);

  int alice() const noexcept { return alice_; }
  int bob() const noexcept { return bob_; }
  int total() const noexcept { return alice_ * bob_; }

  friend bool operator==(const Dims&, const Dims&) = default;

 private:
  int alice_;
  int bob_;
};

/// Coefficient matrix [ψ] of a bipartite vector, ψ_{ij} the amplitude of
/// |i⟩_A ⊗ |j⟩_B. Not necessarily normalized.
class PureState {
 public:
  /// Throws kShapeMismatch or kNonFiniteEntry.
  PureState(Dims dims, CMatrix coeffs);

  static PureState zero(Dims dims);
  /// Inverse of vector(): entry i·d_b + j becomes ψ_{ij}.
  static PureState from_vector(Dims dims, const CVector& v);

  const Dims& dims() const noexcept { return dims_; }
  const CMatrix& coeffs() const noexcept { return coeffs_; }
  bool normalized() const noexcept { return normalized_; }
  double squared_norm() const { return coeffs_.squaredNorm(); }

  /// Composite-index vector, entry i·d_b + j.
  CVector vector() const;

 private:
  Dims dims_;
  CMatrix coeffs_;
  bool normalized_;
};

/// Density matrix over the composite basis i·d_b + j.
class DensityMatrix {
 public:
  /// Validates Hermiticity (deviations up to kHermitianTol are symmetrized
  /// away, larger ones rejected), unit trace and positivity.
  DensityMatrix(Dims dims, CMatrix matrix);

  /// |ψ⟩⟨ψ| / ⟨ψ|ψ⟩.
  static DensityMatrix from_pure(const PureState& state);

  const Dims& dims() const noexcept { return dims_; }
  const CMatrix& matrix() const noexcept { return matrix_; }

 private:
  Dims dims_;
  CMatrix matrix_;
};

struct SchmidtDecomposition {
  RVector singular_values;  // descending, length min(d_a, d_b)
  CMatrix left_basis;       // d_a × d_a unitary
  CMatrix right_basis;      // d_b × d_b unitary
  int rank = 0;

  /// left_basis · diag(λ) · right_basisᵀ
  CMatrix reconstruct() const;
};

SchmidtDecomposition schmidt(const PureState& state,
                             double rank_tol = kDefaultRankTol);

enum class Side { kA, kB };

/// Marginal on one side, returned with dims (d_side, 1). Throws kZeroState.
DensityMatrix reduced_density(const PureState& state, Side side);

/// Entropy of entanglement in bits. Throws kNotNormalized.
double entanglement_entropy(const PureState& state);

/// Unnormalized pure states ψ^μ with Σ_μ |ψ^μ⟩⟨ψ^μ| = ρ. Weights live
/// inside the vectors.
class Decomposition {
 public:
  Decomposition(Dims dims, std::vector<PureState> members);

  const Dims& dims() const noexcept { return dims_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  const std::vector<PureState>& members() const noexcept { return members_; }
  const PureState& operator[](int mu) const { return members_[mu]; }

  /// Σ_μ |ψ^μ⟩⟨ψ^μ|
  CMatrix density() const;

 private:
  Dims dims_;
  std::vector<PureState> members_;
};

/// max |Σ_μ |ψ^μ⟩⟨ψ^μ| − ρ|
double reconstruction_error(const Decomposition& dec, const DensityMatrix& rho);

class MixingUnitary {
 public:
  /// 1×1 identity.
  MixingUnitary() : u_(CMatrix::Identity(1, 1)) {}
  /// Throws kNotUnitary.
  explicit MixingUnitary(CMatrix u);
  static MixingUnitary identity(int m);

  int size() const noexcept { return static_cast<int>(u_.rows()); }
  const CMatrix& matrix() const noexcept { return u_; }

 private:
  CMatrix u_;
};

class LocalUnitaryPair {
 public:
  LocalUnitaryPair(CMatrix v, CMatrix w);
  static LocalUnitaryPair identity(const Dims& dims);

  const CMatrix& v() const noexcept { return v_; }
  const CMatrix& w() const noexcept { return w_; }

 private:
  CMatrix v_;
  CMatrix w_;
};

/// Members are √λ_k v_k for eigenpairs with λ_k > rank_tol·λ_max, in
/// descending eigenvalue order.
Decomposition eig_decomposition(const DensityMatrix& rho,
                                double rank_tol = kDefaultRankTol);

/// Appends zero vectors up to m members. Throws kShrinkNotAllowed.
Decomposition pad(const Decomposition& dec, int m);

/// ψ′^μ = Σ_ν U^{μν} ψ^ν. Throws kSizeMismatch.
Decomposition mix(const Decomposition& dec, const MixingUnitary& u);

/// [ψ] → V [ψ] Wᵀ
PureState apply_local(const PureState& state, const LocalUnitaryPair& lu);
/// ρ → (V⊗W) ρ (V⊗W)†
DensityMatrix apply_local(const DensityMatrix& rho, const LocalUnitaryPair& lu);
Decomposition apply_local(const Decomposition& dec, const LocalUnitaryPair& lu);

}  // namespace conclab
