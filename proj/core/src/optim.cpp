#include "conclab/optim.hpp"

#include <cmath>
#include <exception>
#include <memory>
#include <thread>

#include "conclab/error.hpp"

namespace conclab {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kShrink = 0.5;
constexpr double kInitialStep = 1.0;
constexpr double kMaxStep = 1e3;
constexpr int kMaxBacktracks = 60;
constexpr int kReorthonormalizeEvery = 50;

double checked_value(const UnitaryObjective& obj, const CMatrix& u) {
  const double v = obj.value(u);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kNonFiniteObjective, "objective returned non-finite");
  }
  return v;
}

CMatrix project_antihermitian(const CMatrix& x) {
  return 0.5 * (x - x.adjoint());
}

StartResult run_start(const UnitaryObjective& obj, int m, const OptimConfig& cfg,
                      int start, CMatrix& u_out) {
  CMatrix u = CMatrix::Identity(m, m);
  if (start > 0) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(start));
    u = linalg::haar_unitary(m, rng);
  }
  const GradientMode mode = obj.euclidean_gradient
                                ? GradientMode::kAnalytic
                                : GradientMode::kFiniteDifference;
  StartResult res;
  double f = checked_value(obj, u);
  if (cfg.record_trace) res.trace.push_back(f);
  res.max_unitarity_error = linalg::unitarity_residual(u);
  double step = kInitialStep;

  for (int it = 1; it <= cfg.max_iters; ++it) {
    res.iterations = it;
    const CMatrix a = riemannian_gradient(obj, u, mode, cfg.fd_step);
    const double g2 = a.squaredNorm();
    res.final_gradient_norm = std::sqrt(g2);
    if (res.final_gradient_norm < cfg.grad_tol) {
      res.reason = StopReason::kGradientTolerance;
      break;
    }

    double t = step;
    bool accepted = false;
    CMatrix u_next;
    double f_next = f;
    for (int bt = 0; bt < kMaxBacktracks; ++bt, t *= kShrink) {
      u_next = u * linalg::expm_antihermitian(-t * a);
      f_next = checked_value(obj, u_next);
      if (f_next <= f - kArmijo * t * g2) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      res.reason = StopReason::kLineSearchExhausted;
      break;
    }

    if (it % kReorthonormalizeEvery == 0) {
      res.max_unitarity_error = std::max(res.max_unitarity_error,
                                         linalg::unitarity_residual(u_next));
      u_next = linalg::closest_unitary(u_next);
    }
    res.max_unitarity_error =
        std::max(res.max_unitarity_error, linalg::unitarity_residual(u_next));

    const double improvement = f - f_next;
    u = std::move(u_next);
    f = f_next;
    if (cfg.record_trace) res.trace.push_back(f);
    step = std::min(2.0 * t, kMaxStep);
    if (improvement < cfg.value_tol) {
      res.reason = StopReason::kValueTolerance;
      break;
    }
  }
  res.value = f;
  res.converged = res.reason != StopReason::kMaxIterations;
  u_out = std::move(u);
  return res;
}

}  // namespace

void OptimConfig::validate() const {
  if (starts < 1) throw Error(ErrorCode::kBadParameter, "starts must be >= 1");
  if (max_iters < 1) {
    throw Error(ErrorCode::kBadParameter, "max_iters must be >= 1");
  }
  if (!(grad_tol > 0.0) || !(value_tol > 0.0) || !(fd_step > 0.0)) {
    throw Error(ErrorCode::kBadParameter, "tolerances must be > 0");
  }
  if (threads < 1) throw Error(ErrorCode::kBadParameter, "threads must be >= 1");
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kGradientTolerance: return "gradient_tolerance";
    case StopReason::kValueTolerance: return "value_tolerance";
    case StopReason::kLineSearchExhausted: return "line_search_exhausted";
    case StopReason::kMaxIterations: return "max_iterations";
  }
  return "unknown";
}

UnitaryObjective biconcurrence_objective(const BiconcurrenceOperator& b) {
  return make_objective(QuarticObjective(b));
}

UnitaryObjective make_objective(QuarticObjective quartic) {
  auto q = std::make_shared<const QuarticObjective>(std::move(quartic));
  return UnitaryObjective{
      [q](const CMatrix& u) { return q->value(u); },
      [q](const CMatrix& u) { return q->euclidean_gradient(u); }};
}

CMatrix riemannian_gradient(const UnitaryObjective& objective, const CMatrix& u,
                            GradientMode mode, double fd_step) {
  const Eigen::Index m = u.rows();
  if (mode == GradientMode::kAnalytic) {
    if (!objective.euclidean_gradient) {
      throw Error(ErrorCode::kBadParameter,
                  "objective has no analytic gradient");
    }
    const CMatrix e = objective.euclidean_gradient(u);
    if (!linalg::all_finite(e)) {
      throw Error(ErrorCode::kNonFiniteObjective, "gradient is non-finite");
    }
    return project_antihermitian(u.adjoint() * e);
  }

  // Orthogonal basis of u(m): E_ij − E_ji, i(E_ij + E_ji) for i < j, iE_ii.
  CMatrix grad = CMatrix::Zero(m, m);
  auto directional = [&](const CMatrix& omega) {
    const double fp =
        checked_value(objective, u * linalg::expm_antihermitian(fd_step * omega));
    const double fm =
        checked_value(objective, u * linalg::expm_antihermitian(-fd_step * omega));
    return (fp - fm) / (2.0 * fd_step);
  };
  const Complex i1(0.0, 1.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    CMatrix omega = CMatrix::Zero(m, m);
    omega(i, i) = i1;
    grad += directional(omega) * omega;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      CMatrix re = CMatrix::Zero(m, m);
      re(i, j) = 1.0;
      re(j, i) = -1.0;
      grad += 0.5 * directional(re) * re;
      CMatrix im = CMatrix::Zero(m, m);
      im(i, j) = im(j, i) = i1;
      grad += 0.5 * directional(im) * im;
    }
  }
  return grad;
}

OptimResult minimize_unitary(const UnitaryObjective& objective, int m,
                             const OptimConfig& cfg) {
  cfg.validate();
  if (m < 1) throw Error(ErrorCode::kBadParameter, "m must be >= 1");
  if (!objective.value) {
    throw Error(ErrorCode::kBadParameter, "objective has no value function");
  }

  std::vector<StartResult> results(cfg.starts);
  std::vector<CMatrix> unitaries(cfg.starts);
  std::vector<std::exception_ptr> errors(cfg.starts);
  auto work = [&](int s) {
    try {
      results[s] = run_start(objective, m, cfg, s, unitaries[s]);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };

  const int threads = std::min(cfg.threads, cfg.starts);
  if (threads <= 1) {
    for (int s = 0; s < cfg.starts; ++s) work(s);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int s = t; s < cfg.starts; s += threads) work(s);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  int best = 0;
  for (int s = 1; s < cfg.starts; ++s) {
    if (results[s].value < results[best].value) best = s;
  }
  return OptimResult{results[best].value,
                     MixingUnitary(std::move(unitaries[best])),
                     best, std::move(results)};
}

}  // namespace conclab
