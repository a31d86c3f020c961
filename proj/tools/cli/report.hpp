#pragma once

#include <json.hpp>

#include "conclab/conclab.hpp"

namespace conclab::cli {

using nlohmann::json;

json complex_json(Complex z);
json matrix_json(const CMatrix& m);

/// Schmidt spectrum, entropy (normalized states only), concurrence matrix
/// with wedge labels, |C|² and every k-minor norm.
json pure_analysis(const PureState& state);

/// Entries in lexicographic (κ, μ, ν) order with their index labels.
json preconcurrence_report(const PreconcurrenceTensor& t);

/// Summary (diag trace at identity, min eigenvalue, Hermiticity residual)
/// plus, when `entries` is set, every B^{μνmn} with labels.
json biconcurrence_report(const BiconcurrenceOperator& b, bool entries);

json optim_json(const OptimResult& r, bool include_trace);

/// Wall time is only included on request so that reports are reproducible
/// byte for byte.
json separability_json(const SeparabilityReport& r, bool include_timing,
                       bool include_trace);
json rank2_json(const Rank2Verdict& v, bool include_trace);
json witness_json(const WitnessReport& w);
json ppt_json(const PptResult& p);

}  // namespace conclab::cli
