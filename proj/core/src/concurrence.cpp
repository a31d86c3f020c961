#include "conclab/concurrence.hpp"

#include "conclab/error.hpp"

namespace conclab {

namespace {

void require_two_by_two(const Dims& dims) {
  if (dims.alice() < 2 || dims.bob() < 2) {
    throw Error(ErrorCode::kDimensionTooSmall,
                "concurrence needs both local dimensions >= 2");
  }
}

// ψ^μ_{i₁i₂} ψ^ν_{j₁j₂} − ψ^μ_{i₁j₂} ψ^ν_{j₁i₂}
Complex cross_minor(const CMatrix& p, const CMatrix& q, const WedgeIndex& w) {
  return p(w.a.first, w.b.first) * q(w.a.second, w.b.second) -
         p(w.a.first, w.b.second) * q(w.a.second, w.b.first);
}

}  // namespace

std::vector<IndexPair> ordered_pairs(int d) {
  std::vector<IndexPair> out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<WedgeIndex> wedge_indices(const Dims& dims) {
  std::vector<WedgeIndex> out;
  for (const auto& a : ordered_pairs(dims.alice())) {
    for (const auto& b : ordered_pairs(dims.bob())) out.push_back({a, b});
  }
  return out;
}

int wedge_count(const Dims& dims) {
  return dims.alice() * (dims.alice() - 1) / 2 * dims.bob() *
         (dims.bob() - 1) / 2;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

ConcurrenceMatrix concurrence_matrix(const PureState& state) {
  require_two_by_two(state.dims());
  const auto wedges = wedge_indices(state.dims());
  ConcurrenceMatrix c{state.dims(), CVector(static_cast<Eigen::Index>(wedges.size()))};
  const CMatrix& psi = state.coeffs();
  for (std::size_t k = 0; k < wedges.size(); ++k) {
    c.entries(static_cast<Eigen::Index>(k)) = 2.0 * cross_minor(psi, psi, wedges[k]);
  }
  return c;
}

ConcurrenceNorm concurrence_norm(const ConcurrenceMatrix& c) {
  const double sq = c.entries.squaredNorm();
  return {sq, std::sqrt(sq)};
}

KMinorTensor k_minors(const PureState& state, int k) {
  const int dmin = std::min(state.dims().alice(), state.dims().bob());
  if (k < 2 || k > dmin) {
    throw Error(ErrorCode::kBadOrder, "minor order " + std::to_string(k) +
                                          " outside [2, " +
                                          std::to_string(dmin) + "]");
  }
  KMinorTensor t;
  t.order = k;
  t.row_subsets = k_subsets(state.dims().alice(), k);
  t.col_subsets = k_subsets(state.dims().bob(), k);
  t.entries.resize(static_cast<Eigen::Index>(t.row_subsets.size() *
                                             t.col_subsets.size()));
  const CMatrix& psi = state.coeffs();
  CMatrix sub(k, k);
  Eigen::Index pos = 0;
  for (const auto& rows : t.row_subsets) {
    for (const auto& cols : t.col_subsets) {
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) sub(r, c) = psi(rows[r], cols[c]);
      }
      t.entries(pos++) = sub.determinant();
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

PreconcurrenceTensor::PreconcurrenceTensor(Dims dims, int m,
                                           std::vector<CMatrix> slices)
    : dims_(dims), m_(m), slices_(std::move(slices)) {
  if (static_cast<int>(slices_.size()) != wedge_count(dims_)) {
    throw Error(ErrorCode::kShapeMismatch, "one slice per wedge index expected");
  }
  for (const auto& s : slices_) {
    if (s.rows() != m_ || s.cols() != m_) {
      throw Error(ErrorCode::kShapeMismatch, "slice is not m x m");
    }
  }
}

double PreconcurrenceTensor::squared_norm() const {
  double s = 0.0;
  for (const auto& c : slices_) s += c.squaredNorm();
  return s;
}

PreconcurrenceTensor preconcurrence(const Decomposition& dec) {
  require_two_by_two(dec.dims());
  const int m = dec.size();
  const auto wedges = wedge_indices(dec.dims());
  std::vector<CMatrix> slices;
  slices.reserve(wedges.size());
  for (const auto& w : wedges) {
    CMatrix s(m, m);
    for (int mu = 0; mu < m; ++mu) {
      const CMatrix& p = dec[mu].coeffs();
      for (int nu = mu; nu < m; ++nu) {
        const CMatrix& q = dec[nu].coeffs();
        s(mu, nu) = cross_minor(p, q, w) + cross_minor(q, p, w);
        s(nu, mu) = s(mu, nu);
      }
    }
    slices.push_back(std::move(s));
  }
  return PreconcurrenceTensor(dec.dims(), m, std::move(slices));
}

PreconcurrenceTensor transform_mix(const PreconcurrenceTensor& t,
                                   const MixingUnitary& u) {
  if (u.size() != t.members()) {
    throw Error(ErrorCode::kSizeMismatch, "mixing unitary size != m");
  }
  const CMatrix& U = u.matrix();
  std::vector<CMatrix> slices;
  slices.reserve(t.slices().size());
  for (const auto& c : t.slices()) slices.push_back(U * c * U.transpose());
  return PreconcurrenceTensor(t.dims(), t.members(), std::move(slices));
}

CMatrix second_compound(const CMatrix& a) {
  const auto pairs = ordered_pairs(static_cast<int>(a.rows()));
  const auto n = static_cast<Eigen::Index>(pairs.size());
  CMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto [i, j] = pairs[r];
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto [k, l] = pairs[c];
      out(r, c) = a(i, k) * a(j, l) - a(i, l) * a(j, k);
    }
  }
  return out;
}

PreconcurrenceTensor transform_local(const PreconcurrenceTensor& t,
                                     const LocalUnitaryPair& lu) {
  if (lu.v().rows() != t.dims().alice() || lu.w().rows() != t.dims().bob()) {
    throw Error(ErrorCode::kSizeMismatch,
                "local unitary sizes do not match tensor dims");
  }
  const CMatrix map = linalg::kron(second_compound(lu.v()),
                                   second_compound(lu.w()));
  const int kcount = t.wedges();
  std::vector<CMatrix> slices(kcount,
                              CMatrix::Zero(t.members(), t.members()));
  for (int out = 0; out < kcount; ++out) {
    for (int in = 0; in < kcount; ++in) {
      const Complex coef = map(out, in);
      if (coef != Complex(0.0)) slices[out] += coef * t.slice(in);
    }
  }
  return PreconcurrenceTensor(t.dims(), t.members(), std::move(slices));
}

CMatrix d_matrix(const PreconcurrenceTensor& t) {
  CMatrix d = CMatrix::Zero(t.members(), t.members());
  for (const auto& c : t.slices()) d.noalias() += c * c.adjoint();
  return d;
}

}  // namespace conclab
