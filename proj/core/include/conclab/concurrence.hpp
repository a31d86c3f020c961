#pragma once

#include <vector>

#include "conclab/states.hpp"

namespace conclab {

/// Strictly ordered index pair i < j on one side.
struct IndexPair {
  int first = 0;
  int second = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// κ = (i₁∧j₁; i₂∧j₂). Enumeration is lexicographic over (a, b), so the
/// flat position is index_of(a)·C(d_b, 2) + index_of(b).
struct WedgeIndex {
  IndexPair a;
  IndexPair b;
  friend bool operator==(const WedgeIndex&, const WedgeIndex&) = default;
};

/// All i < j in [0, d), lexicographic.
std::vector<IndexPair> ordered_pairs(int d);
std::vector<WedgeIndex> wedge_indices(const Dims& dims);
/// C(d_a, 2)·C(d_b, 2)
int wedge_count(const Dims& dims);

/// Lexicographic k-subsets of [0, n).
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Doubled 2×2 minors of [ψ] in wedge order.
struct ConcurrenceMatrix {
  Dims dims;
  CVector entries;
};

struct ConcurrenceNorm {
  double squared = 0.0;
  double norm = 0.0;
};

/// Throws kDimensionTooSmall when either side has d < 2.
ConcurrenceMatrix concurrence_matrix(const PureState& state);
ConcurrenceNorm concurrence_norm(const ConcurrenceMatrix& c);

/// Plain k×k determinants of [ψ], indexed by (row subset, column subset) in
/// lexicographic order, flattened row-subset-major.
struct KMinorTensor {
  int order = 0;
  std::vector<std::vector<int>> row_subsets;
  std::vector<std::vector<int>> col_subsets;
  CVector entries;

  Complex at(std::size_t row, std::size_t col) const {
    return entries(static_cast<Eigen::Index>(row * col_subsets.size() + col));
  }
  double squared_norm() const { return entries.squaredNorm(); }
};

/// Throws kBadOrder unless 2 <= k <= min(d_a, d_b).
KMinorTensor k_minors(const PureState& state, int k);

/// C_κ^{μν}, stored as one symmetric m×m slice per wedge index.
class PreconcurrenceTensor {
 public:
  PreconcurrenceTensor(Dims dims, int m, std::vector<CMatrix> slices);

  const Dims& dims() const noexcept { return dims_; }
  int members() const noexcept { return m_; }
  int wedges() const noexcept { return static_cast<int>(slices_.size()); }

  const CMatrix& slice(int kappa) const { return slices_[kappa]; }
  const std::vector<CMatrix>& slices() const noexcept { return slices_; }
  Complex at(int kappa, int mu, int nu) const { return slices_[kappa](mu, nu); }

  /// Σ_{κ,μ,ν} |C_κ^{μν}|²
  double squared_norm() const;

 private:
  Dims dims_;
  int m_;
  std::vector<CMatrix> slices_;
};

PreconcurrenceTensor preconcurrence(const Decomposition& dec);

/// C′^{μ′ν′} = Σ U^{μ′μ} C^{μν} U^{ν′ν}, i.e. each slice goes to U C Uᵀ.
PreconcurrenceTensor transform_mix(const PreconcurrenceTensor& t,
                                   const MixingUnitary& u);

/// Second compound of a square matrix: entries
/// a_{ik} a_{jl} − a_{il} a_{jk} for rows (i<j), columns (k<l).
CMatrix second_compound(const CMatrix& a);

/// Wedge components transform with second_compound(V) ⊗ second_compound(W).
PreconcurrenceTensor transform_local(const PreconcurrenceTensor& t,
                                     const LocalUnitaryPair& lu);

/// D^{μν} = Σ_{κ,α} C_κ^{μα} conj(C_κ^{να})
CMatrix d_matrix(const PreconcurrenceTensor& t);

}  // namespace conclab
