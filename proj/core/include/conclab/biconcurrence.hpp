#pragma once

#include <vector>

#include "conclab/concurrence.hpp"
#include "conclab/states.hpp"

namespace conclab {

/// B^{μνmn} stored as an m²×m² matrix, row (μ, m) = μ·m_size + m and column
/// (ν, n) = ν·m_size + n. Rows carry the antilinear arguments.
class BiconcurrenceOperator {
 public:
  BiconcurrenceOperator(int members, CMatrix matrix);

  int members() const noexcept { return m_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  Complex at(int mu, int nu, int m, int n) const {
    return matrix_(mu * m_ + m, nu * m_ + n);
  }

 private:
  int m_;
  CMatrix matrix_;
};

/// Prefactor of the preconcurrence contraction. kCalibrated (1/2) is the
/// value consistent with the algebraic form over unordered wedge indices;
/// kAsPrinted (1/4) is kept only so the discrepancy can be audited.
enum class ContractionConstant { kCalibrated, kAsPrinted };
double contraction_constant(ContractionConstant c);

/// 1 − Tr ρ_A² evaluated through both the marginal and the reduction map
/// −⟨ψ|I⊗Λ(|ψ⟩⟨ψ|)|ψ⟩, Λ(A) = Tr(A)·I − A. Throws kNotNormalized, or
/// kComputationFailed if the two routes disagree beyond 1e-12.
double b_scalar(const PureState& state);
double b_scalar_from_marginal(const PureState& state);
double b_scalar_from_reduction_map(const PureState& state);

/// ⟨ψ_μ|ψ_ν⟩⟨ψ_m|ψ_n⟩ − Tr([ψ_μ]†[ψ_ν][ψ_m]†[ψ_n])
BiconcurrenceOperator biconcurrence_operator(const Decomposition& dec);

/// −⟨ψ_μ| I⊗Λ(|ψ_ν⟩⟨ψ_m|) |ψ_n⟩, evaluated with explicit operators.
BiconcurrenceOperator biconcurrence_operator_reduction_map(
    const Decomposition& dec);

/// c·Σ_κ C_κ^{nν} conj(C_κ^{mμ}) over unordered wedge indices.
///
/// Because every slice C_κ is symmetric, the result is symmetric under
/// ν↔n: with c = 1/2 it reproduces symmetrize(biconcurrence_operator(dec)),
/// and it agrees with the unsymmetrized operator on every B^{μμμμ}.
BiconcurrenceOperator from_preconcurrence(
    const PreconcurrenceTensor& t,
    ContractionConstant c = ContractionConstant::kCalibrated);

/// (B^{μνmn} + B^{μnmν}) / 2
BiconcurrenceOperator symmetrize(const BiconcurrenceOperator& b);

/// Max-entry deviations between the three constructions on one
/// decomposition.
struct ConstructionResiduals {
  double reduction_map_vs_algebraic = 0.0;
  double contraction_vs_algebraic = 0.0;
  double contraction_vs_symmetrized = 0.0;
  double contraction_vs_algebraic_diagonal = 0.0;
};
ConstructionResiduals construction_residuals(const Decomposition& dec);

/// B̃ = (U*⊗U*) B (U*⊗U*)†, the operator of mix(dec, u).
BiconcurrenceOperator transform(const BiconcurrenceOperator& b,
                                const MixingUnitary& u);

struct DiagTrace {
  double value = 0.0;
  std::vector<double> per_member;  // B^{μμμμ}
};
DiagTrace diag_trace(const BiconcurrenceOperator& b);

struct ObjectiveValue {
  double value = 0.0;
  MixingUnitary u;
  std::vector<double> per_member;
};

/// diag_trace(transform(b, u)), with the unitary that produced it.
ObjectiveValue objective(const BiconcurrenceOperator& b, const MixingUnitary& u);

/// Tr(P·(U*⊗U*) B (U*⊗U*)†) with P the projector onto composite indices
/// (μ, μ); evaluated as Tr(Q·B), Q = (U*⊗U*)† P (U*⊗U*).
double objective_via_projector(const BiconcurrenceOperator& b,
                               const MixingUnitary& u);

/// f(U) = Σ_μ B̃^{μμμμ} prepared for repeated evaluation.
///
/// Only the part of B symmetric in its linear (and antilinear) pair enters
/// f, and that part is PSD with rank at most the number of wedge indices.
/// Its eigenfactorization Σ_k σ_k w_k w_k† turns each diagonal entry into
/// Σ_k σ_k |u_μᵀ F_k u_μ|² with u_μ the μ-th row of U and F_k = reshape(w̄_k),
/// which costs O(m³·rank) per evaluation instead of O(m⁵).
class QuarticObjective {
 public:
  explicit QuarticObjective(const BiconcurrenceOperator& b);
  /// f(U) = Σ_μ Σ_k weights[k]·|u_μᵀ F_k u_μ|² for given forms F_k (only
  /// their symmetric part matters).
  QuarticObjective(int members, std::vector<double> weights,
                   std::vector<CMatrix> forms);

  int members() const noexcept { return m_; }
  int factor_rank() const noexcept { return static_cast<int>(forms_.size()); }

  double value(const CMatrix& u) const;
  /// E with df = Re Tr(E† dU), i.e. E = 2 ∂f/∂Ū.
  CMatrix euclidean_gradient(const CMatrix& u) const;

 private:
  int m_;
  std::vector<double> weights_;
  std::vector<CMatrix> forms_;
};

}  // namespace conclab
