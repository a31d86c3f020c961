#include "conclab/separability.hpp"

#include <chrono>
#include <cmath>

#include "conclab/biconcurrence.hpp"
#include "conclab/concurrence.hpp"
#include "conclab/error.hpp"

namespace conclab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kSeparableNumerical: return "SeparableNumerical";
    case Verdict::kEntangledNumerical: return "EntangledNumerical";
    case Verdict::kInconclusive: return "Inconclusive";
  }
  return "Unknown";
}

const char* to_string(Rank2Class c) {
  return c == Rank2Class::kSeparable ? "Separable" : "OneCopyPseudoDistillable";
}

Verdict classify(double best_value, double threshold) {
  if (best_value < threshold) return Verdict::kSeparableNumerical;
  if (best_value >= 10.0 * threshold) return Verdict::kEntangledNumerical;
  return Verdict::kInconclusive;
}

CMatrix partial_transpose(const DensityMatrix& rho) {
  const int da = rho.dims().alice();
  const int db = rho.dims().bob();
  const CMatrix& r = rho.matrix();
  CMatrix pt(r.rows(), r.cols());
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      for (int k = 0; k < da; ++k) {
        for (int l = 0; l < db; ++l) {
          pt(i * db + j, k * db + l) = r(i * db + l, k * db + j);
        }
      }
    }
  }
  return pt;
}

PptResult ppt(const DensityMatrix& rho) {
  const double lmin = linalg::min_eigenvalue(partial_transpose(rho));
  return {lmin, lmin < -kPositivityTol};
}

double wootters(const DensityMatrix& rho) {
  if (rho.dims().alice() != 2 || rho.dims().bob() != 2) {
    throw Error(ErrorCode::kWrongDims, "Wootters concurrence needs 2x2 dims");
  }
  CMatrix sy(2, 2);
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const CMatrix yy = linalg::kron(sy, sy);
  const CMatrix flipped = yy * rho.matrix().conjugate() * yy;

  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kComputationFailed, "eigensolver in wootters");
  }
  const RVector sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix root = es.eigenvectors() * sq.cast<Complex>().asDiagonal() *
                       es.eigenvectors().adjoint();
  const CMatrix r = root * flipped * root;
  Eigen::SelfAdjointEigenSolver<CMatrix> er(0.5 * (r + r.adjoint()),
                                            Eigen::EigenvaluesOnly);
  if (er.info() != Eigen::Success) {
    throw Error(ErrorCode::kComputationFailed, "eigensolver in wootters");
  }
  // ascending
  const RVector lam = er.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const double c = lam(3) - lam(2) - lam(1) - lam(0);
  return std::max(0.0, c);
}

// ---------------------------------------------------------------------------

int default_members(int rank, const Dims& dims, int max_members) {
  const long full = static_cast<long>(dims.total()) * dims.total();
  long m = std::min<long>(static_cast<long>(rank) * rank, full);
  m = std::min<long>(m, max_members);
  return static_cast<int>(std::max<long>(m, rank));
}

double default_threshold(int members) { return 1e-6 / members; }

SeparabilityReport test_separability(const DensityMatrix& rho,
                                     const OptimConfig& cfg,
                                     const SeparabilityOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  cfg.validate();
  const Decomposition seed = eig_decomposition(rho, opts.rank_tol);
  const int rank = seed.size();
  const int m = opts.members.value_or(
      default_members(rank, rho.dims(), opts.max_members));
  if (m < 1) throw Error(ErrorCode::kBadParameter, "m must be >= 1");
  const double threshold = opts.threshold.value_or(default_threshold(m));
  if (!(threshold > 0.0)) {
    throw Error(ErrorCode::kBadParameter, "threshold must be > 0");
  }

  const BiconcurrenceOperator b = biconcurrence_operator(pad(seed, m));
  OptimResult optim = minimize_unitary(biconcurrence_objective(b), m, cfg);

  SeparabilityReport report{
      .dims = rho.dims(),
      .rank = rank,
      .members = m,
      .best_value = optim.best_value,
      .threshold = threshold,
      .verdict = classify(optim.best_value, threshold),
      .optim = std::move(optim),
      .ppt = ppt(rho),
      .wootters = std::nullopt,
      .wall_seconds = 0.0,
  };
  if (rho.dims().alice() == 2 && rho.dims().bob() == 2) {
    report.wootters = wootters(rho);
  }
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  return report;
}

// ---------------------------------------------------------------------------

Rank2Verdict rank2_classify(const DensityMatrix& rho, const OptimConfig& cfg,
                            double threshold, double rank_tol) {
  const Decomposition seed = eig_decomposition(rho, rank_tol);
  if (seed.size() > 2) {
    throw Error(ErrorCode::kRankTooHigh,
                "numerical rank " + std::to_string(seed.size()) + " > 2");
  }
  const Decomposition dec = pad(seed, 2);
  const PreconcurrenceTensor c = preconcurrence(dec);

  // Σ_μ Σ_κ |(U C_κ Uᵀ)_{μμ}|²
  OptimResult opt = minimize_unitary(
      make_objective(QuarticObjective(
          2, std::vector<double>(c.slices().size(), 1.0), c.slices())),
      2, cfg);

  Rank2Verdict out;
  out.rank = seed.size();
  out.u = opt.best_u;
  out.residual = opt.best_value;
  out.verdict = opt.best_value < threshold ? Rank2Class::kSeparable
                                           : Rank2Class::kOneCopyPseudoDistillable;
  if (out.verdict == Rank2Class::kSeparable) {
    CMatrix uq(2, 2);
    uq << 1.0, 1.0, -1.0, 1.0;
    uq /= std::sqrt(2.0);
    const PreconcurrenceTensor diag =
        transform_mix(transform_mix(c, opt.best_u), MixingUnitary(uq));
    for (const auto& s : diag.slices()) {
      out.x_kappa.push_back(s(0, 0));
      out.diagonal_form_residual = std::max(
          {out.diagonal_form_residual, std::abs(s(0, 1)), std::abs(s(1, 0)),
           std::abs(s(1, 1) + s(0, 0))});
    }
  }
  out.optim = std::move(opt);
  return out;
}

WitnessReport witness_2q(const DensityMatrix& rho, int budget,
                         std::uint64_t seed) {
  if (budget < 1) throw Error(ErrorCode::kBadParameter, "budget must be >= 1");
  const int da = rho.dims().alice();
  const int db = rho.dims().bob();
  if (da < 2 || db < 2) {
    throw Error(ErrorCode::kDimensionTooSmall,
                "witness search needs both local dimensions >= 2");
  }
  Rng rng(seed);
  WitnessReport out;
  out.samples = budget;
  const Dims qubits(2, 2);
  for (int s = 0; s < budget; ++s) {
    CMatrix v = linalg::haar_isometry(da, 2, rng);
    CMatrix w = linalg::haar_isometry(db, 2, rng);
    const CMatrix k = linalg::kron(v, w);
    CMatrix proj = k.adjoint() * rho.matrix() * k;
    const double tr = proj.trace().real();
    if (tr < 1e-8) continue;
    proj /= tr;
    ++out.evaluated;
    const double c = wootters(DensityMatrix(qubits, 0.5 * (proj + proj.adjoint())));
    if (out.v.size() == 0 || c > out.best_concurrence) {
      out.best_concurrence = c;
      out.v = std::move(v);
      out.w = std::move(w);
    }
  }
  return out;
}

}  // namespace conclab
