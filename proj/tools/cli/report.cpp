#include "cli/report.hpp"

namespace conclab::cli {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json pair_json(const IndexPair& p) { return json::array({p.first, p.second}); }

json wedge_json(const WedgeIndex& w) {
  return json::array({pair_json(w.a), pair_json(w.b)});
}

json dims_json(const Dims& d) { return json::array({d.alice(), d.bob()}); }

}  // namespace

json pure_analysis(const PureState& state) {
  json out;
  out["dims"] = dims_json(state.dims());
  out["squared_norm"] = state.squared_norm();
  out["normalized"] = state.normalized();
  const SchmidtDecomposition s = schmidt(state);
  out["schmidt_coefficients"] =
      std::vector<double>(s.singular_values.begin(), s.singular_values.end());
  out["schmidt_rank"] = s.rank;
  out["entropy_bits"] =
      state.normalized() ? json(entanglement_entropy(state)) : json(nullptr);
  out["b_scalar"] = state.normalized() ? json(b_scalar(state)) : json(nullptr);

  if (state.dims().alice() >= 2 && state.dims().bob() >= 2) {
    const ConcurrenceMatrix c = concurrence_matrix(state);
    const auto wedges = wedge_indices(state.dims());
    json entries = json::array();
    for (std::size_t k = 0; k < wedges.size(); ++k) {
      entries.push_back({{"kappa", wedge_json(wedges[k])},
                         {"value", complex_json(c.entries(static_cast<Eigen::Index>(k)))}});
    }
    out["concurrence_matrix"] = std::move(entries);
    const ConcurrenceNorm n = concurrence_norm(c);
    out["concurrence_norm_squared"] = n.squared;
    out["concurrence_norm"] = n.norm;
    json minors = json::array();
    const int dmin = std::min(state.dims().alice(), state.dims().bob());
    for (int k = 2; k <= dmin; ++k) {
      minors.push_back({{"k", k}, {"norm_squared", k_minors(state, k).squared_norm()}});
    }
    out["k_minor_norms"] = std::move(minors);
  }
  return out;
}

json preconcurrence_report(const PreconcurrenceTensor& t) {
  json out;
  out["dims"] = dims_json(t.dims());
  out["m"] = t.members();
  out["wedges"] = t.wedges();
  out["squared_norm"] = t.squared_norm();
  const auto wedges = wedge_indices(t.dims());
  json entries = json::array();
  for (int k = 0; k < t.wedges(); ++k) {
    for (int mu = 0; mu < t.members(); ++mu) {
      for (int nu = 0; nu < t.members(); ++nu) {
        entries.push_back({{"kappa", wedge_json(wedges[k])},
                           {"kappa_index", k},
                           {"mu", mu},
                           {"nu", nu},
                           {"value", complex_json(t.at(k, mu, nu))}});
      }
    }
  }
  out["entries"] = std::move(entries);
  out["d_matrix"] = matrix_json(d_matrix(t));
  return out;
}

json biconcurrence_report(const BiconcurrenceOperator& b, bool entries) {
  json out;
  const int m = b.members();
  out["m"] = m;
  const DiagTrace d = diag_trace(b);
  out["diag_trace_identity"] = d.value;
  out["diag_per_member"] = d.per_member;
  out["min_eigenvalue"] =
      linalg::min_eigenvalue(0.5 * (b.matrix() + b.matrix().adjoint()));
  out["hermiticity_residual"] = linalg::hermiticity_residual(b.matrix());
  if (entries) {
    json list = json::array();
    for (int mu = 0; mu < m; ++mu) {
      for (int nu = 0; nu < m; ++nu) {
        for (int mm = 0; mm < m; ++mm) {
          for (int n = 0; n < m; ++n) {
            list.push_back({{"mu", mu},
                            {"nu", nu},
                            {"m", mm},
                            {"n", n},
                            {"value", complex_json(b.at(mu, nu, mm, n))}});
          }
        }
      }
    }
    out["entries"] = std::move(list);
  }
  return out;
}

json optim_json(const OptimResult& r, bool include_trace) {
  json out;
  out["best_value"] = r.best_value;
  out["best_start"] = r.best_start;
  out["best_u"] = matrix_json(r.best_u.matrix());
  json starts = json::array();
  for (const auto& s : r.starts) {
    json j{{"value", s.value},
           {"iterations", s.iterations},
           {"converged", s.converged},
           {"stop_reason", to_string(s.reason)},
           {"final_gradient_norm", s.final_gradient_norm}};
    if (include_trace) j["trace"] = s.trace;
    starts.push_back(std::move(j));
  }
  out["starts"] = std::move(starts);
  return out;
}

json ppt_json(const PptResult& p) {
  return {{"min_eigenvalue", p.min_eigenvalue}, {"npt", p.npt}};
}

json separability_json(const SeparabilityReport& r, bool include_timing,
                       bool include_trace) {
  json out;
  out["dims"] = dims_json(r.dims);
  out["rank"] = r.rank;
  out["m"] = r.members;
  out["best_value"] = r.best_value;
  out["threshold"] = r.threshold;
  out["verdict"] = to_string(r.verdict);
  std::vector<double> minima;
  for (const auto& s : r.optim.starts) minima.push_back(s.value);
  out["per_start_minima"] = minima;
  out["ppt"] = ppt_json(r.ppt);
  out["wootters"] = r.wootters ? json(*r.wootters) : json(nullptr);
  out["optimizer"] = optim_json(r.optim, include_trace);
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

json rank2_json(const Rank2Verdict& v, bool include_trace) {
  json out;
  out["verdict"] = to_string(v.verdict);
  out["rank"] = v.rank;
  out["residual"] = v.residual;
  out["u"] = matrix_json(v.u.matrix());
  json xs = json::array();
  for (const auto& x : v.x_kappa) xs.push_back(complex_json(x));
  out["x_kappa"] = std::move(xs);
  out["diagonal_form_residual"] = v.diagonal_form_residual;
  out["optimizer"] = optim_json(v.optim, include_trace);
  return out;
}

json witness_json(const WitnessReport& w) {
  return {{"best_concurrence", w.best_concurrence},
          {"samples", w.samples},
          {"evaluated", w.evaluated},
          {"v", matrix_json(w.v)},
          {"w", matrix_json(w.w)}};
}

}  // namespace conclab::cli
