#include "cli/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "cli/state_file.hpp"
#include "conclab/conclab.hpp"

namespace conclab::cli {

namespace {

// Raised for input problems detected before any computation starts.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string format = "text";
  std::string family;
  std::vector<std::string> params;
  std::string out_path;
  std::optional<int> members;
  std::optional<double> threshold;
  int starts = OptimConfig{}.starts;
  int max_iters = OptimConfig{}.max_iters;
  double grad_tol = OptimConfig{}.grad_tol;
  double value_tol = OptimConfig{}.value_tol;
  int threads = 1;
  std::uint64_t seed = 0;
  int budget = 2000;
  bool verbose = false;
  bool timing = false;
  bool entries = false;
};

State load(const std::string& path) {
  try {
    return parse_state_file(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

DensityMatrix load_density(const std::string& path) {
  State s = load(path);
  if (auto* p = std::get_if<PureState>(&s)) {
    try {
      return DensityMatrix::from_pure(*p);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  return std::get<DensityMatrix>(std::move(s));
}

// A pure file becomes the single-member decomposition [ψ]; a density file is
// decomposed through its eigenvectors. Either is padded to `members`.
Decomposition load_decomposition(const std::string& path,
                                 std::optional<int> members) {
  State s = load(path);
  Decomposition dec = std::visit(
      [](const auto& st) -> Decomposition {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, PureState>) {
          return Decomposition(st.dims(), {st});
        } else {
          return eig_decomposition(st);
        }
      },
      s);
  return members ? pad(dec, *members) : dec;
}

OptimConfig optim_config(const Options& o) {
  OptimConfig cfg;
  cfg.starts = o.starts;
  cfg.max_iters = o.max_iters;
  cfg.grad_tol = o.grad_tol;
  cfg.value_tol = o.value_tol;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.record_trace = o.verbose;
  return cfg;
}

class TextWriter {
 public:
  explicit TextWriter(std::ostream& out) : out_(out) {
    out_ << std::setprecision(12);
  }
  template <typename T>
  TextWriter& kv(const std::string& key, const T& value) {
    out_ << key << ": " << value << '\n';
    return *this;
  }
  TextWriter& kv(const std::string& key, bool value) {
    out_ << key << ": " << (value ? "true" : "false") << '\n';
    return *this;
  }
  TextWriter& kv(const std::string& key, Complex z) {
    out_ << key << ": " << z.real() << (z.imag() < 0 ? " - " : " + ")
         << std::abs(z.imag()) << "i\n";
    return *this;
  }
  TextWriter& list(const std::string& key, const std::vector<double>& values) {
    out_ << key << ":";
    for (double v : values) out_ << ' ' << v;
    out_ << '\n';
    return *this;
  }

 private:
  std::ostream& out_;
};

std::vector<double> per_start_values(const OptimResult& r) {
  std::vector<double> v;
  for (const auto& s : r.starts) v.push_back(s.value);
  return v;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// Commands. Each returns the process exit code.

int cmd_gen(const Options& o, std::ostream& out) {
  FamilySpec spec{o.family, {}};
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kBadParameter, "--param expects k=v, got '" + p + "'");
    }
    spec.params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  const State state = generate(spec);
  if (o.out_path.empty()) {
    out << format_state_json(state);
  } else {
    write_state_file(o.out_path, state);
    if (o.format == "json") {
      emit_json(out, {{"written", o.out_path}, {"family", o.family}});
    } else {
      out << "wrote " << o.out_path << '\n';
    }
  }
  return 0;
}

int cmd_pure_analyze(const Options& o, std::ostream& out) {
  State s = load(o.file);
  const auto* p = std::get_if<PureState>(&s);
  if (p == nullptr) throw InputError("pure-analyze needs a pure state file");
  const json report = pure_analysis(*p);
  if (o.format == "json") {
    emit_json(out, report);
    return 0;
  }
  TextWriter w(out);
  w.kv("dims", std::to_string(p->dims().alice()) + "x" +
                   std::to_string(p->dims().bob()));
  w.kv("squared_norm", p->squared_norm());
  w.list("schmidt_coefficients",
         report["schmidt_coefficients"].get<std::vector<double>>());
  w.kv("schmidt_rank", report["schmidt_rank"].get<int>());
  if (p->normalized()) {
    w.kv("entropy_bits", report["entropy_bits"].get<double>());
    w.kv("b_scalar", report["b_scalar"].get<double>());
  } else {
    w.kv("entropy_bits", "n/a (state not normalized)");
  }
  if (report.contains("concurrence_matrix")) {
    for (const auto& e : report["concurrence_matrix"]) {
      const auto& k = e["kappa"];
      std::ostringstream key;
      key << "C(" << k[0][0] << "^" << k[0][1] << ";" << k[1][0] << "^"
          << k[1][1] << ")";
      w.kv(key.str(), Complex(e["value"][0].get<double>(),
                              e["value"][1].get<double>()));
    }
    w.kv("concurrence_norm_squared",
         report["concurrence_norm_squared"].get<double>());
    for (const auto& k : report["k_minor_norms"]) {
      w.kv("k_minor_norm_squared[k=" + std::to_string(k["k"].get<int>()) + "]",
           k["norm_squared"].get<double>());
    }
  }
  return 0;
}

int cmd_preconcurrence(const Options& o, std::ostream& out) {
  const Decomposition dec = load_decomposition(o.file, o.members);
  const PreconcurrenceTensor t = preconcurrence(dec);
  const json report = preconcurrence_report(t);
  if (o.format == "json") {
    emit_json(out, report);
    return 0;
  }
  TextWriter w(out);
  w.kv("m", t.members()).kv("wedges", t.wedges()).kv("squared_norm",
                                                     t.squared_norm());
  for (const auto& e : report["entries"]) {
    const Complex z(e["value"][0].get<double>(), e["value"][1].get<double>());
    if (z == Complex(0.0)) continue;
    std::ostringstream key;
    key << "C[" << e["kappa_index"] << "][" << e["mu"] << "," << e["nu"] << "]";
    w.kv(key.str(), z);
  }
  return 0;
}

int cmd_biconc(const Options& o, std::ostream& out) {
  const Decomposition dec = load_decomposition(o.file, o.members);
  const BiconcurrenceOperator b = biconcurrence_operator(dec);
  const json report = biconcurrence_report(b, o.entries || o.format == "json");
  if (o.format == "json") {
    emit_json(out, report);
    return 0;
  }
  TextWriter w(out);
  w.kv("m", b.members())
      .kv("diag_trace_identity", report["diag_trace_identity"].get<double>())
      .list("diag_per_member", report["diag_per_member"].get<std::vector<double>>())
      .kv("min_eigenvalue", report["min_eigenvalue"].get<double>())
      .kv("hermiticity_residual", report["hermiticity_residual"].get<double>());
  if (o.entries) {
    for (const auto& e : report["entries"]) {
      std::ostringstream key;
      key << "B[" << e["mu"] << "," << e["nu"] << "," << e["m"] << "," << e["n"]
          << "]";
      w.kv(key.str(), Complex(e["value"][0].get<double>(),
                              e["value"][1].get<double>()));
    }
  }
  return 0;
}

int cmd_separability(const Options& o, std::ostream& out) {
  const DensityMatrix rho = load_density(o.file);
  SeparabilityOptions opts;
  opts.members = o.members;
  opts.threshold = o.threshold;
  const SeparabilityReport r = test_separability(rho, optim_config(o), opts);
  if (o.format == "json") {
    emit_json(out, separability_json(r, o.timing, o.verbose));
  } else {
    TextWriter w(out);
    w.kv("verdict", to_string(r.verdict))
        .kv("dims", std::to_string(r.dims.alice()) + "x" +
                        std::to_string(r.dims.bob()))
        .kv("rank", r.rank)
        .kv("m", r.members)
        .kv("best_value", r.best_value)
        .kv("threshold", r.threshold)
        .list("per_start_minima", per_start_values(r.optim))
        .kv("ppt_min_eigenvalue", r.ppt.min_eigenvalue)
        .kv("ppt_npt", r.ppt.npt);
    if (r.wootters) w.kv("wootters", *r.wootters);
    if (o.timing) w.kv("wall_seconds", r.wall_seconds);
    if (o.verbose) {
      for (std::size_t s = 0; s < r.optim.starts.size(); ++s) {
        w.list("trace[" + std::to_string(s) + "]", r.optim.starts[s].trace);
      }
    }
  }
  switch (r.verdict) {
    case Verdict::kSeparableNumerical: return kExitSeparable;
    case Verdict::kEntangledNumerical: return kExitEntangled;
    case Verdict::kInconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_rank2(const Options& o, std::ostream& out) {
  const DensityMatrix rho = load_density(o.file);
  const Rank2Verdict v = rank2_classify(
      rho, optim_config(o), o.threshold.value_or(kDefaultRank2Threshold));
  if (o.format == "json") {
    emit_json(out, rank2_json(v, o.verbose));
    return 0;
  }
  TextWriter w(out);
  w.kv("verdict", to_string(v.verdict))
      .kv("rank", v.rank)
      .kv("residual", v.residual);
  for (std::size_t k = 0; k < v.x_kappa.size(); ++k) {
    w.kv("x[" + std::to_string(k) + "]", v.x_kappa[k]);
  }
  if (v.verdict == Rank2Class::kSeparable) {
    w.kv("diagonal_form_residual", v.diagonal_form_residual);
  }
  return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const DensityMatrix rho = load_density(o.file);
  const WitnessReport r = witness_2q(rho, o.budget, o.seed);
  if (o.format == "json") {
    emit_json(out, witness_json(r));
    return 0;
  }
  TextWriter(out)
      .kv("best_concurrence", r.best_concurrence)
      .kv("samples", r.samples)
      .kv("evaluated", r.evaluated);
  return 0;
}

int cmd_ppt(const Options& o, std::ostream& out) {
  const PptResult r = ppt(load_density(o.file));
  if (o.format == "json") {
    emit_json(out, ppt_json(r));
  } else {
    TextWriter(out).kv("min_eigenvalue", r.min_eigenvalue).kv("npt", r.npt);
  }
  return 0;
}

int cmd_wootters(const Options& o, std::ostream& out) {
  const DensityMatrix rho = load_density(o.file);
  if (rho.dims().alice() != 2 || rho.dims().bob() != 2) {
    throw InputError("oracle-wootters needs a 2x2 state");
  }
  const double c = wootters(rho);
  if (o.format == "json") {
    emit_json(out, {{"concurrence", c}});
  } else {
    TextWriter(out).kv("concurrence", c);
  }
  return 0;
}

// ---------------------------------------------------------------------------

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_file(CLI::App* app, Options& o) {
  app->add_option("file", o.file, "State file (JSON)")->required();
}

void add_seed(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed,
                  "RNG seed (default: $CONCURRENCE_LAB_SEED or 0)");
}

void add_optimizer(CLI::App* app, Options& o) {
  app->add_option("--starts", o.starts, "Optimizer starts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--max-iters", o.max_iters, "Iterations per start")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--grad-tol", o.grad_tol, "Gradient-norm stopping tolerance")
      ->check(CLI::PositiveNumber);
  app->add_option("--value-tol", o.value_tol, "Minimum improvement per step")
      ->check(CLI::PositiveNumber);
  app->add_option("--threads", o.threads, "Threads for optimizer starts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_flag("--verbose", o.verbose, "Include per-start optimizer traces");
  add_seed(app, o);
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("CONCURRENCE_LAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const auto v = std::stoull(text, &used);
    if (used == text.size() && text[0] != '-') return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("CONCURRENCE_LAB_SEED='") + env +
                   "' is not a non-negative integer");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  try {
    o.seed = default_seed();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"conclab: generalized concurrence, biconcurrence and "
               "separability analysis of bipartite states"};
  app.name("conclab");
  app.require_subcommand(1, 1);

  auto* gen = app.add_subcommand("gen", "Generate a state file");
  gen->add_option("--family", o.family, "State family")
      ->required()
      ->check(CLI::IsMember(family_names()));
  gen->add_option("--param", o.params, "Family parameter k=v (repeatable)");
  gen->add_option("--out", o.out_path, "Output file (default: stdout)");
  add_format(gen, o);

  auto* pure = app.add_subcommand(
      "pure-analyze",
      "Schmidt spectrum, entropy, concurrence matrix and k-minor norms");
  add_file(pure, o);
  add_format(pure, o);

  auto* pre = app.add_subcommand("preconcurrence",
                                 "Preconcurrence tensor of the state's decomposition");
  add_file(pre, o);
  pre->add_option("--m", o.members, "Pad the decomposition to M members");
  add_format(pre, o);

  auto* bic = app.add_subcommand("biconc", "Biconcurrence operator summary");
  add_file(bic, o);
  bic->add_option("--m", o.members, "Pad the decomposition to M members");
  bic->add_flag("--entries", o.entries, "List every operator entry");
  add_format(bic, o);

  auto* sep = app.add_subcommand(
      "separability",
      "Minimize the biconcurrence diagonal trace over U(m); exit 0/1/2 = "
      "separable/entangled/inconclusive");
  add_file(sep, o);
  sep->add_option("--m", o.members, "Decomposition length");
  sep->add_option("--threshold", o.threshold, "Separability threshold (default 1e-6/m)");
  sep->add_flag("--timing", o.timing, "Include wall time in the report");
  add_optimizer(sep, o);
  add_format(sep, o);

  auto* r2 = app.add_subcommand("rank2", "Rank-2 separable / 1-copy pseudo-distillable classifier");
  add_file(r2, o);
  r2->add_option("--threshold", o.threshold, "Residual threshold (default 1e-8)");
  add_optimizer(r2, o);
  add_format(r2, o);

  auto* wit = app.add_subcommand("witness2q", "Random search for two-qubit entanglement in local 2-dim subspaces");
  add_file(wit, o);
  wit->add_option("--budget", o.budget, "Number of sampled subspace pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_seed(wit, o);
  add_format(wit, o);

  auto* pptc = app.add_subcommand("oracle-ppt", "Partial-transpose oracle");
  add_file(pptc, o);
  add_format(pptc, o);

  auto* woo = app.add_subcommand("oracle-wootters", "Two-qubit Wootters concurrence");
  add_file(woo, o);
  add_format(woo, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run 'conclab --help'\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (pure->parsed()) return cmd_pure_analyze(o, out);
    if (pre->parsed()) return cmd_preconcurrence(o, out);
    if (bic->parsed()) return cmd_biconc(o, out);
    if (sep->parsed()) return cmd_separability(o, out);
    if (r2->parsed()) return cmd_rank2(o, out);
    if (wit->parsed()) return cmd_witness(o, out);
    if (pptc->parsed()) return cmd_ppt(o, out);
    if (woo->parsed()) return cmd_wootters(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBadParameter) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "computation error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace conclab::cli
