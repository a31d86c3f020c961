#include "conclab/biconcurrence.hpp"

#include <cmath>
#include <sstream>

#include "conclab/error.hpp"

namespace conclab {

namespace {

void require_normalized(const PureState& state) {
  if (!state.normalized()) {
    throw Error(ErrorCode::kNotNormalized, "B(psi) needs a normalized state");
  }
}

// (I⊗Λ)(X) = Tr_B(X) ⊗ I_B − X
CMatrix reduction_map_on_bob(const CMatrix& x, const Dims& dims) {
  const int da = dims.alice();
  const int db = dims.bob();
  CMatrix partial = CMatrix::Zero(da, da);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      for (int j = 0; j < db; ++j) partial(i, k) += x(i * db + j, k * db + j);
    }
  }
  return linalg::kron(partial, CMatrix::Identity(db, db)) - x;
}

}  // namespace

BiconcurrenceOperator::BiconcurrenceOperator(int members, CMatrix matrix)
    : m_(members), matrix_(std::move(matrix)) {
  if (matrix_.rows() != m_ * m_ || matrix_.cols() != m_ * m_) {
    throw Error(ErrorCode::kShapeMismatch, "operator must be m^2 x m^2");
  }
}

double contraction_constant(ContractionConstant c) {
  return c == ContractionConstant::kCalibrated ? 0.5 : 0.25;
}

double b_scalar_from_marginal(const PureState& state) {
  require_normalized(state);
  const CMatrix rho = state.coeffs() * state.coeffs().adjoint();
  return 1.0 - (rho * rho).trace().real();
}

double b_scalar_from_reduction_map(const PureState& state) {
  require_normalized(state);
  const CVector v = state.vector();
  const CMatrix lam = reduction_map_on_bob(v * v.adjoint(), state.dims());
  return -(v.adjoint() * lam * v)(0, 0).real();
}

double b_scalar(const PureState& state) {
  const double a = b_scalar_from_marginal(state);
  const double b = b_scalar_from_reduction_map(state);
  if (std::abs(a - b) > 1e-12) {
    std::ostringstream os;
    os << "marginal and reduction-map routes disagree: " << a << " vs " << b;
    throw Error(ErrorCode::kComputationFailed, os.str());
  }
  return a;
}

BiconcurrenceOperator biconcurrence_operator(const Decomposition& dec) {
  const int m = dec.size();
  // gram(μ,ν) = ⟨ψ_μ|ψ_ν⟩, prod[μ·m+ν] = [ψ_μ]†[ψ_ν]
  CMatrix gram(m, m);
  std::vector<CMatrix> prod(static_cast<std::size_t>(m) * m);
  for (int mu = 0; mu < m; ++mu) {
    for (int nu = 0; nu < m; ++nu) {
      prod[mu * m + nu] = dec[mu].coeffs().adjoint() * dec[nu].coeffs();
      gram(mu, nu) = prod[mu * m + nu].trace();
    }
  }
  CMatrix b(m * m, m * m);
  for (int mu = 0; mu < m; ++mu) {
    for (int nu = 0; nu < m; ++nu) {
      const CMatrix& left = prod[mu * m + nu];
      for (int mm = 0; mm < m; ++mm) {
        for (int n = 0; n < m; ++n) {
          // Tr(L R) = Σ L ∘ Rᵀ
          const Complex tr =
              left.cwiseProduct(prod[mm * m + n].transpose()).sum();
          b(mu * m + mm, nu * m + n) = gram(mu, nu) * gram(mm, n) - tr;
        }
      }
    }
  }
  return BiconcurrenceOperator(m, std::move(b));
}

BiconcurrenceOperator biconcurrence_operator_reduction_map(
    const Decomposition& dec) {
  const int m = dec.size();
  std::vector<CVector> vecs;
  vecs.reserve(m);
  for (const auto& p : dec.members()) vecs.push_back(p.vector());
  CMatrix b(m * m, m * m);
  for (int nu = 0; nu < m; ++nu) {
    for (int mm = 0; mm < m; ++mm) {
      const CMatrix lam =
          reduction_map_on_bob(vecs[nu] * vecs[mm].adjoint(), dec.dims());
      for (int mu = 0; mu < m; ++mu) {
        const CVector left = lam.adjoint() * vecs[mu];
        for (int n = 0; n < m; ++n) {
          b(mu * m + mm, nu * m + n) = -left.dot(vecs[n]);
        }
      }
    }
  }
  return BiconcurrenceOperator(m, std::move(b));
}

BiconcurrenceOperator from_preconcurrence(const PreconcurrenceTensor& t,
                                          ContractionConstant c) {
  const int m = t.members();
  const double k = contraction_constant(c);
  CMatrix b = CMatrix::Zero(m * m, m * m);
  for (const auto& s : t.slices()) {
    for (int mu = 0; mu < m; ++mu) {
      for (int mm = 0; mm < m; ++mm) {
        const Complex conj_left = std::conj(s(mm, mu));
        for (int nu = 0; nu < m; ++nu) {
          for (int n = 0; n < m; ++n) {
            b(mu * m + mm, nu * m + n) += s(n, nu) * conj_left;
          }
        }
      }
    }
  }
  return BiconcurrenceOperator(m, k * b);
}

BiconcurrenceOperator symmetrize(const BiconcurrenceOperator& b) {
  const int m = b.members();
  CMatrix s(m * m, m * m);
  for (int mu = 0; mu < m; ++mu) {
    for (int nu = 0; nu < m; ++nu) {
      for (int mm = 0; mm < m; ++mm) {
        for (int n = 0; n < m; ++n) {
          s(mu * m + mm, nu * m + n) =
              0.5 * (b.at(mu, nu, mm, n) + b.at(mu, n, mm, nu));
        }
      }
    }
  }
  return BiconcurrenceOperator(m, std::move(s));
}

ConstructionResiduals construction_residuals(const Decomposition& dec) {
  const auto algebraic = biconcurrence_operator(dec);
  const auto lambda_form = biconcurrence_operator_reduction_map(dec);
  const auto contracted = from_preconcurrence(preconcurrence(dec));
  ConstructionResiduals r;
  r.reduction_map_vs_algebraic =
      linalg::max_abs(lambda_form.matrix() - algebraic.matrix());
  r.contraction_vs_algebraic =
      linalg::max_abs(contracted.matrix() - algebraic.matrix());
  r.contraction_vs_symmetrized =
      linalg::max_abs(contracted.matrix() - symmetrize(algebraic).matrix());
  const int m = dec.size();
  for (int mu = 0; mu < m; ++mu) {
    r.contraction_vs_algebraic_diagonal =
        std::max(r.contraction_vs_algebraic_diagonal,
                 std::abs(contracted.at(mu, mu, mu, mu) -
                          algebraic.at(mu, mu, mu, mu)));
  }
  return r;
}

BiconcurrenceOperator transform(const BiconcurrenceOperator& b,
                                const MixingUnitary& u) {
  if (u.size() != b.members()) {
    throw Error(ErrorCode::kSizeMismatch, "mixing unitary size != m");
  }
  const CMatrix uc = u.matrix().conjugate();
  const CMatrix k = linalg::kron(uc, uc);
  return BiconcurrenceOperator(b.members(), k * b.matrix() * k.adjoint());
}

DiagTrace diag_trace(const BiconcurrenceOperator& b) {
  const int m = b.members();
  DiagTrace d;
  d.per_member.resize(m);
  for (int mu = 0; mu < m; ++mu) {
    d.per_member[mu] = b.at(mu, mu, mu, mu).real();
    d.value += d.per_member[mu];
  }
  return d;
}

ObjectiveValue objective(const BiconcurrenceOperator& b, const MixingUnitary& u) {
  DiagTrace d = diag_trace(transform(b, u));
  return ObjectiveValue{d.value, u, std::move(d.per_member)};
}

double objective_via_projector(const BiconcurrenceOperator& b,
                               const MixingUnitary& u) {
  const int m = b.members();
  if (u.size() != m) {
    throw Error(ErrorCode::kSizeMismatch, "mixing unitary size != m");
  }
  const CMatrix uc = u.matrix().conjugate();
  const CMatrix k = linalg::kron(uc, uc);
  CMatrix proj = CMatrix::Zero(m * m, m * m);
  for (int mu = 0; mu < m; ++mu) proj(mu * m + mu, mu * m + mu) = 1.0;
  const CMatrix q = k.adjoint() * proj * k;
  return q.cwiseProduct(b.matrix().transpose()).sum().real();
}

// ---------------------------------------------------------------------------

QuarticObjective::QuarticObjective(const BiconcurrenceOperator& b)
    : m_(b.members()) {
  const CMatrix sym = symmetrize(b).matrix();
  // symmetrize() acts on the column pair; the row pair follows from
  // Hermiticity up to round-off, which the explicit Hermitization absorbs.
  const CMatrix herm = 0.5 * (sym + sym.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kComputationFailed,
                "eigensolver on biconcurrence operator");
  }
  const auto& evals = es.eigenvalues();
  const double top = evals.size() > 0 ? evals(evals.size() - 1) : 0.0;
  for (Eigen::Index k = evals.size() - 1; k >= 0; --k) {
    if (!(evals(k) > 1e-14 * top) || top <= 0.0) break;
    CMatrix f(m_, m_);
    for (int alpha = 0; alpha < m_; ++alpha) {
      for (int a = 0; a < m_; ++a) {
        f(alpha, a) = std::conj(es.eigenvectors()(alpha * m_ + a, k));
      }
    }
    weights_.push_back(evals(k));
    forms_.push_back(0.5 * (f + f.transpose()));
  }
}

QuarticObjective::QuarticObjective(int members, std::vector<double> weights,
                                   std::vector<CMatrix> forms)
    : m_(members), weights_(std::move(weights)) {
  if (weights_.size() != forms.size()) {
    throw Error(ErrorCode::kSizeMismatch, "one weight per form expected");
  }
  for (auto& f : forms) {
    if (f.rows() != m_ || f.cols() != m_) {
      throw Error(ErrorCode::kShapeMismatch, "form is not m x m");
    }
    forms_.push_back(0.5 * (f + f.transpose()));
  }
}

double QuarticObjective::value(const CMatrix& u) const {
  double f = 0.0;
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    const CMatrix fu = u * forms_[k];  // row μ: u_μᵀ F_k
    double s = 0.0;
    for (int mu = 0; mu < m_; ++mu) {
      s += std::norm(fu.row(mu).cwiseProduct(u.row(mu)).sum());
    }
    f += weights_[k] * s;
  }
  return f;
}

CMatrix QuarticObjective::euclidean_gradient(const CMatrix& u) const {
  CMatrix grad = CMatrix::Zero(m_, m_);
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    const CMatrix fu = u * forms_[k];  // row μ: (F_k u_μ)ᵀ since F_k is symmetric
    for (int mu = 0; mu < m_; ++mu) {
      const Complex y = fu.row(mu).cwiseProduct(u.row(mu)).sum();
      grad.row(mu) += (4.0 * weights_[k] * y) * fu.row(mu).conjugate();
    }
  }
  return grad;
}

}  // namespace conclab
