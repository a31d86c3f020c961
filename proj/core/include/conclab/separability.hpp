#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "conclab/optim.hpp"
#include "conclab/states.hpp"

namespace conclab {

enum class Verdict { kSeparableNumerical, kEntangledNumerical, kInconclusive };
const char* to_string(Verdict v);

/// Separable below threshold, entangled at or above 10·threshold,
/// inconclusive in between.
Verdict classify(double best_value, double threshold);

struct PptResult {
  double min_eigenvalue = 0.0;
  bool npt = false;
};

/// ρ^{T_B}: entry ((i,j),(k,l)) ← ρ((i,l),(k,j)).
CMatrix partial_transpose(const DensityMatrix& rho);

/// npt when the partial transpose has an eigenvalue below −1e-10.
PptResult ppt(const DensityMatrix& rho);

/// Two-qubit concurrence max(0, λ₁−λ₂−λ₃−λ₄). Throws kWrongDims.
double wootters(const DensityMatrix& rho);

/// Largest decomposition length chosen automatically. 36 keeps the m²×m²
/// operator and its factorization small; full-rank 2×3 states reach it
/// exactly with m = r².
inline constexpr int kDefaultMaxMembers = 36;

struct SeparabilityOptions {
  /// Decomposition length; defaults to min(r², (d_a·d_b)², max_members),
  /// never below r.
  std::optional<int> members;
  /// Defaults to default_threshold(m).
  std::optional<double> threshold;
  double rank_tol = kDefaultRankTol;
  int max_members = kDefaultMaxMembers;
};

int default_members(int rank, const Dims& dims, int max_members);
/// 1e-6 / m
double default_threshold(int members);

struct SeparabilityReport {
  Dims dims;
  int rank = 0;
  int members = 0;
  double best_value = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::kInconclusive;
  OptimResult optim;
  PptResult ppt;
  std::optional<double> wootters;
  double wall_seconds = 0.0;
};

SeparabilityReport test_separability(const DensityMatrix& rho,
                                     const OptimConfig& cfg,
                                     const SeparabilityOptions& opts = {});

enum class Rank2Class { kSeparable, kOneCopyPseudoDistillable };
const char* to_string(Rank2Class c);

inline constexpr double kDefaultRank2Threshold = 1e-8;

struct Rank2Verdict {
  Rank2Class verdict = Rank2Class::kOneCopyPseudoDistillable;
  int rank = 0;
  /// Minimizer of Σ_μ Σ_κ |C_κ^{μμ}|² over U(2).
  MixingUnitary u;
  double residual = 0.0;
  /// Separable branch only: after mixing by u and then by
  /// (1/√2)[[1, 1], [−1, 1]] every slice reads diag(x_κ, −x_κ).
  std::vector<Complex> x_kappa;
  /// Largest deviation of those slices from diag(x_κ, −x_κ).
  double diagonal_form_residual = 0.0;
  OptimResult optim;
};

/// Throws kRankTooHigh when the numerical rank exceeds 2.
Rank2Verdict rank2_classify(const DensityMatrix& rho, const OptimConfig& cfg,
                            double threshold = kDefaultRank2Threshold,
                            double rank_tol = kDefaultRankTol);

struct WitnessReport {
  double best_concurrence = 0.0;
  /// d_a×2 and d_b×2 isometries of the best sample (empty if none counted).
  CMatrix v;
  CMatrix w;
  int samples = 0;
  int evaluated = 0;
};

/// Random search over local 2-dimensional subspaces for two-qubit
/// entanglement. Throws kBadParameter for budget < 1.
WitnessReport witness_2q(const DensityMatrix& rho, int budget,
                         std::uint64_t seed);

}  // namespace conclab
