#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "conclab/biconcurrence.hpp"
#include "conclab/linalg.hpp"
#include "conclab/states.hpp"

namespace conclab {

struct OptimConfig {
  int starts = 8;
  int max_iters = 2000;
  double grad_tol = 1e-9;
  /// Stop a start once an accepted step improves the value by less.
  double value_tol = 1e-12;
  double fd_step = 1e-6;
  std::uint64_t seed = 0;
  /// Starts run on this many threads; results do not depend on it.
  int threads = 1;
  bool record_trace = false;

  /// Throws kBadParameter.
  void validate() const;
};

/// Real function on U(m). `euclidean_gradient`, when present, returns E
/// with df = Re Tr(E† dU).
struct UnitaryObjective {
  std::function<double(const CMatrix&)> value;
  std::function<CMatrix(const CMatrix&)> euclidean_gradient;
};

/// Wraps a prepared quartic functional together with its analytic gradient.
UnitaryObjective make_objective(QuarticObjective q);

/// Σ_μ B̃^{μμμμ} as a UnitaryObjective with its analytic gradient.
UnitaryObjective biconcurrence_objective(const BiconcurrenceOperator& b);

enum class GradientMode { kAnalytic, kFiniteDifference };

/// Anti-Hermitian A such that d/dt f(U·exp(tΩ)) = Re Tr(A†Ω) at t = 0.
/// Finite differences are central, along the m² tangent directions.
CMatrix riemannian_gradient(const UnitaryObjective& objective, const CMatrix& u,
                            GradientMode mode, double fd_step = 1e-6);

enum class StopReason {
  kGradientTolerance,
  kValueTolerance,
  kLineSearchExhausted,
  kMaxIterations,
};
const char* to_string(StopReason reason);

struct StartResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  StopReason reason = StopReason::kMaxIterations;
  double final_gradient_norm = 0.0;
  /// Largest |U†U − I| seen over all iterates of this start.
  double max_unitarity_error = 0.0;
  /// Objective after every accepted step, starting with the initial value
  /// (filled only with OptimConfig::record_trace).
  std::vector<double> trace;
};

struct OptimResult {
  double best_value = 0.0;
  MixingUnitary best_u;
  int best_start = 0;
  std::vector<StartResult> starts;
};

/// Riemannian steepest descent U ← U·exp(−ηA) with Armijo backtracking.
/// Start 0 begins at the identity, start s > 0 at a Haar unitary drawn from
/// a stream seeded with cfg.seed + s. Throws kNonFiniteObjective.
OptimResult minimize_unitary(const UnitaryObjective& objective, int m,
                             const OptimConfig& cfg);

}  // namespace conclab
