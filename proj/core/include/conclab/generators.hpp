#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "conclab/states.hpp"

namespace conclab {

using State = std::variant<PureState, DensityMatrix>;

namespace gen {

/// (Σ_i |ii⟩)/√d
PureState bell(int d);
/// |00⟩
PureState product(int d_a, int d_b);
/// (|00⟩ + |11⟩)/√2 embedded in 3×3.
PureState intro_psi();
/// √x·intro_psi + √(1−x)|22⟩, x ∈ [0, 1].
PureState intro_phi(double x);
/// p|Ψ−⟩⟨Ψ−| + (1−p) I/4, p ∈ [0, 1].
DensityMatrix werner2(double p);
/// F|Φ+⟩⟨Φ+| + (1−F)(I − |Φ+⟩⟨Φ+|)/(d²−1), F ∈ [0, 1].
DensityMatrix isotropic(int d, double fidelity);
/// Haar-random normalized vector.
PureState random_pure(const Dims& dims, std::uint64_t seed);
/// G G† / Tr with G a dims.total() × rank complex Gaussian matrix.
DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed);

struct SeparableSample {
  DensityMatrix rho;
  /// Product members √w_k |a_k⟩⊗|b_k⟩ reconstructing rho.
  Decomposition certificate;
};
SeparableSample random_separable(const Dims& dims, int terms,
                                 std::uint64_t seed);

/// 3×3 PPT entangled state (I − Σ_i |t_i⟩⟨t_i|)/4 from the five "tiles"
/// unextendible product basis vectors.
DensityMatrix tiles_upb();
/// The five tiles vectors, normalized.
std::vector<PureState> tiles_basis();

}  // namespace gen

/// Named family plus string-valued parameters, as used by the CLI.
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;
};

/// Families: bell(d), product(da,db), intro_psi, intro_phi(x), werner2(p),
/// isotropic(d,F), random_pure(da,db,seed), random_density(da,db,rank,seed),
/// random_separable(da,db,terms,seed), tiles_upb. Throws kBadParameter.
State generate(const FamilySpec& spec);

std::vector<std::string> family_names();

}  // namespace conclab
