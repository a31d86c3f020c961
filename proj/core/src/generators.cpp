#include "conclab/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "conclab/error.hpp"

namespace conclab {
namespace gen {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kBadParameter,
                std::string(name) + " = " + std::to_string(v) +
                    " outside [0, 1]");
  }
}

CVector max_entangled(int d) {
  CVector phi = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(double(d));
  return phi;
}

}  // namespace

PureState bell(int d) {
  if (d < 2) throw Error(ErrorCode::kBadParameter, "bell needs d >= 2");
  const Dims dims(d, d);
  return PureState::from_vector(dims, max_entangled(d));
}

PureState product(int d_a, int d_b) {
  CMatrix c = CMatrix::Zero(d_a, d_b);
  c(0, 0) = 1.0;
  return PureState(Dims(d_a, d_b), std::move(c));
}

PureState intro_psi() {
  CMatrix c = CMatrix::Zero(3, 3);
  c(0, 0) = c(1, 1) = 1.0 / std::sqrt(2.0);
  return PureState(Dims(3, 3), std::move(c));
}

PureState intro_phi(double x) {
  require_unit_interval(x, "x");
  CMatrix c = std::sqrt(x) * intro_psi().coeffs();
  c(2, 2) = std::sqrt(1.0 - x);
  return PureState(Dims(3, 3), std::move(c));
}

DensityMatrix werner2(double p) {
  require_unit_interval(p, "p");
  CVector singlet = CVector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  CMatrix rho = p * singlet * singlet.adjoint() +
                (1.0 - p) / 4.0 * CMatrix::Identity(4, 4);
  return DensityMatrix(Dims(2, 2), std::move(rho));
}

DensityMatrix isotropic(int d, double fidelity) {
  require_unit_interval(fidelity, "F");
  if (d < 2) throw Error(ErrorCode::kBadParameter, "isotropic needs d >= 2");
  const int n = d * d;
  const CVector phi = max_entangled(d);
  const CMatrix proj = phi * phi.adjoint();
  CMatrix rho = fidelity * proj + (1.0 - fidelity) / double(n - 1) *
                                      (CMatrix::Identity(n, n) - proj);
  return DensityMatrix(Dims(d, d), std::move(rho));
}

PureState random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  CMatrix c = linalg::gaussian(dims.alice(), dims.bob(), rng);
  c /= c.norm();
  return PureState(dims, std::move(c));
}

DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > dims.total()) {
    throw Error(ErrorCode::kBadParameter,
                "rank " + std::to_string(rank) + " outside [1, " +
                    std::to_string(dims.total()) + "]");
  }
  Rng rng(seed);
  const CMatrix g = linalg::gaussian(dims.total(), rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(dims, std::move(rho));
}

SeparableSample random_separable(const Dims& dims, int terms,
                                 std::uint64_t seed) {
  if (terms < 1) throw Error(ErrorCode::kBadParameter, "terms must be >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (auto& w : weights) total += (w = uniform(rng));
  std::vector<PureState> members;
  members.reserve(terms);
  for (int k = 0; k < terms; ++k) {
    CVector a = linalg::gaussian(dims.alice(), 1, rng);
    CVector b = linalg::gaussian(dims.bob(), 1, rng);
    a.normalize();
    b.normalize();
    members.emplace_back(dims, std::sqrt(weights[k] / total) * a *
                                   b.transpose());
  }
  Decomposition cert(dims, std::move(members));
  CMatrix rho = cert.density();
  rho /= rho.trace().real();
  return SeparableSample{DensityMatrix(dims, std::move(rho)), std::move(cert)};
}

std::vector<PureState> tiles_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  auto ket = [](std::initializer_list<double> v) {
    CVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out(i++) = x;
    return out;
  };
  const CVector e0 = ket({1, 0, 0}), e2 = ket({0, 0, 1});
  const CVector m01 = s * ket({1, -1, 0}), m12 = s * ket({0, 1, -1});
  const CVector all = ket({1, 1, 1}) / std::sqrt(3.0);
  const Dims dims(3, 3);
  std::vector<PureState> basis;
  basis.emplace_back(dims, e0 * m01.transpose());
  basis.emplace_back(dims, m01 * e2.transpose());
  basis.emplace_back(dims, e2 * m12.transpose());
  basis.emplace_back(dims, m12 * e0.transpose());
  basis.emplace_back(dims, all * all.transpose());
  return basis;
}

DensityMatrix tiles_upb() {
  CMatrix rho = CMatrix::Identity(9, 9);
  for (const auto& t : tiles_basis()) {
    const CVector v = t.vector();
    rho -= v * v.adjoint();
  }
  return DensityMatrix(Dims(3, 3), rho / 4.0);
}

}  // namespace gen

namespace {

class Params {
 public:
  explicit Params(const FamilySpec& spec) : spec_(spec) {}

  double real(const std::string& key) const {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) {
      throw Error(ErrorCode::kBadParameter,
                  spec_.name + " requires parameter '" + key + "'");
    }
    return parse_real(key, it->second);
  }
  double real(const std::string& key, double fallback) const {
    const auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : parse_real(key, it->second);
  }
  int integer(const std::string& key, int fallback) const {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    return static_cast<int>(parse_unsigned(key, it->second));
  }
  std::uint64_t seed() const {
    const auto it = spec_.params.find("seed");
    return it == spec_.params.end() ? 0 : parse_unsigned("seed", it->second);
  }

 private:
  double parse_real(const std::string& key, const std::string& text) const {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kBadParameter,
                "parameter " + key + "='" + text + "' is not a number");
  }
  std::uint64_t parse_unsigned(const std::string& key,
                               const std::string& text) const {
    try {
      std::size_t used = 0;
      if (!text.empty() && text[0] != '-') {
        const auto v = std::stoull(text, &used);
        if (used == text.size()) return v;
      }
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kBadParameter,
                "parameter " + key + "='" + text +
                    "' is not a non-negative integer");
  }

  const FamilySpec& spec_;
};

}  // namespace

std::vector<std::string> family_names() {
  return {"bell",          "product",        "intro_psi",
          "intro_phi",     "werner2",        "isotropic",
          "random_pure",   "random_density", "random_separable",
          "tiles_upb"};
}

State generate(const FamilySpec& spec) {
  const Params p(spec);
  const std::string& name = spec.name;
  auto dims = [&] { return Dims(p.integer("da", 2), p.integer("db", 2)); };
  if (name == "bell") return gen::bell(p.integer("d", 2));
  if (name == "product") {
    return gen::product(p.integer("da", 2), p.integer("db", 2));
  }
  if (name == "intro_psi") return gen::intro_psi();
  if (name == "intro_phi") return gen::intro_phi(p.real("x", 0.2271));
  if (name == "werner2") return gen::werner2(p.real("p"));
  if (name == "isotropic") {
    return gen::isotropic(p.integer("d", 2), p.real("F"));
  }
  if (name == "random_pure") return gen::random_pure(dims(), p.seed());
  if (name == "random_density") {
    const Dims d = dims();
    return gen::random_density(d, p.integer("rank", d.total()), p.seed());
  }
  if (name == "random_separable") {
    return gen::random_separable(dims(), p.integer("terms", 4), p.seed()).rho;
  }
  if (name == "tiles_upb") return gen::tiles_upb();
  throw Error(ErrorCode::kBadParameter, "unknown family '" + name + "'");
}

}  // namespace conclab
