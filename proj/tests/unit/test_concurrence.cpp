#include <cmath>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace conclab {
namespace {

using testing::max_diff;

CMatrix slice_matrix(const std::vector<std::vector<Complex>>& s) {
  CMatrix out(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) out(i, j) = s[i][j];
  }
  return out;
}

double max_tensor_diff(const PreconcurrenceTensor& a, const PreconcurrenceTensor& b) {
  double worst = 0.0;
  for (int k = 0; k < a.wedges(); ++k) worst = std::max(worst, max_diff(a.slice(k), b.slice(k)));
  return worst;
}

TEST(Wedges, LexicographicEnumeration) {
  const auto w = wedge_indices(Dims(3, 4));
  ASSERT_EQ(static_cast<int>(w.size()), wedge_count(Dims(3, 4)));
  EXPECT_EQ(w.size(), 18u);
  EXPECT_EQ(w.front(), (WedgeIndex{{0, 1}, {0, 1}}));
  EXPECT_EQ(w[1], (WedgeIndex{{0, 1}, {0, 2}}));
  EXPECT_EQ(w[6], (WedgeIndex{{0, 2}, {0, 1}}));
  EXPECT_EQ(w.back(), (WedgeIndex{{1, 2}, {2, 3}}));
  EXPECT_EQ(k_subsets(4, 3).size(), 4u);
  EXPECT_EQ(k_subsets(4, 3).front(), (std::vector<int>{0, 1, 2}));
}

TEST(ConcurrenceMatrix, Examples) {
  const auto bell = concurrence_matrix(gen::bell(2));
  ASSERT_EQ(bell.entries.size(), 1);
  EXPECT_NEAR(std::abs(bell.entries(0) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(concurrence_norm(bell).squared, bell.entries.squaredNorm());
  EXPECT_NEAR(concurrence_norm(bell).squared, 1.0, 1e-15);

  for (auto dims : {Dims(2, 2), Dims(3, 4)}) {
    const auto prod = concurrence_matrix(gen::product(dims.alice(), dims.bob()));
    EXPECT_EQ(prod.entries.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(concurrence_norm(prod).norm, 0.0);
  }
  EXPECT_THROW(concurrence_matrix(PureState(Dims(1, 3), CMatrix::Ones(1, 3))), Error);
}

TEST(ConcurrenceMatrix, IntroPhiAgainstDeterminantOracle) {
  const PureState phi = gen::intro_phi(0.2271);
  const auto c = concurrence_matrix(phi);
  const auto wedges = wedge_indices(phi.dims());
  int nonzero = 0;
  for (std::size_t k = 0; k < wedges.size(); ++k) {
    const auto& w = wedges[k];
    const Complex ref = testing::concurrence_entry(phi.coeffs(), w.a.first, w.a.second,
                                                   w.b.first, w.b.second);
    EXPECT_NEAR(std::abs(c.entries(k) - ref), 0.0, 1e-15);
    if (std::abs(ref) > 0) ++nonzero;
  }
  EXPECT_EQ(nonzero, 3);
}

TEST(ConcurrenceMatrix, CauchyBinet) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Dims dims(2 + seed % 4, 2 + (seed / 4) % 4);
    const PureState s = gen::random_pure(dims, seed);
    const auto lam2 = testing::squared_singular_values(s);
    const double e2 = testing::elementary_symmetric(lam2, 2);
    EXPECT_NEAR(concurrence_norm(concurrence_matrix(s)).squared / (4 * e2), 1.0, 1e-9);
  }
}

TEST(ConcurrenceMatrix, VanishesIffProduct) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Dims dims(2 + seed % 3, 2 + (seed / 3) % 3);
    const auto prod = concurrence_matrix(testing::random_product(dims, seed));
    EXPECT_LT(prod.entries.cwiseAbs().maxCoeff(), 1e-12);
    const PureState ent = gen::random_pure(dims, seed);
    EXPECT_GT(schmidt(ent).rank, 1);
    EXPECT_GT(concurrence_norm(concurrence_matrix(ent)).squared, 1e-8);
  }
}

TEST(KMinors, Examples) {
  const auto bell = k_minors(gen::bell(2), 2);
  ASSERT_EQ(bell.entries.size(), 1);
  EXPECT_NEAR(bell.entries(0).real(), 0.5, 1e-15);

  const auto psi = gen::intro_psi();  // Schmidt rank 2
  EXPECT_GT(k_minors(psi, 2).squared_norm(), 0.1);
  EXPECT_LT(k_minors(psi, 3).entries.cwiseAbs().maxCoeff(), 1e-12);

  EXPECT_THROW(k_minors(psi, 1), Error);
  EXPECT_THROW(k_minors(psi, 4), Error);
  EXPECT_THROW(k_minors(gen::random_pure(Dims(2, 3), 0), 3), Error);
}

TEST(KMinors, EntriesMatchLeibnizDeterminants) {
  const PureState s = gen::random_pure(Dims(4, 3), 11);
  for (int k = 2; k <= 3; ++k) {
    const auto t = k_minors(s, k);
    for (std::size_t r = 0; r < t.row_subsets.size(); ++r) {
      for (std::size_t c = 0; c < t.col_subsets.size(); ++c) {
        CMatrix sub(k, k);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            sub(i, j) = s.coeffs()(t.row_subsets[r][i], t.col_subsets[c][j]);
          }
        }
        EXPECT_NEAR(std::abs(t.at(r, c) - testing::leibniz_det(sub)), 0.0, 1e-14);
      }
    }
  }
}

TEST(KMinors, CauchyBinetAllOrders) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Dims dims(2 + seed % 4, 2 + (seed / 4) % 4);
    const PureState s = gen::random_pure(dims, 300 + seed);
    const auto lam2 = testing::squared_singular_values(s);
    for (int k = 2; k <= std::min(dims.alice(), dims.bob()); ++k) {
      const double ek = testing::elementary_symmetric(lam2, k);
      EXPECT_NEAR(k_minors(s, k).squared_norm() / ek, 1.0, 1e-9)
          << "k=" << k << " seed=" << seed;
    }
  }
}

TEST(Preconcurrence, Examples) {
  const auto single = preconcurrence(Decomposition(Dims(2, 2), {gen::bell(2)}));
  ASSERT_EQ(single.wedges(), 1);
  EXPECT_NEAR(std::abs(single.at(0, 0, 0) - 1.0), 0.0, 1e-15);

  // Two weighted product members √½|00⟩ and √½|11⟩. Direct expansion gives
  // ψ⁰₀₀ψ¹₁₁ + ψ¹₀₀ψ⁰₁₁ = ½ off the diagonal.
  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a(0, 0) = std::sqrt(0.5);
  b(1, 1) = std::sqrt(0.5);
  const Decomposition dec(Dims(2, 2), {PureState(Dims(2, 2), a), PureState(Dims(2, 2), b)});
  const auto t = preconcurrence(dec);
  EXPECT_EQ(t.at(0, 0, 0), Complex(0.0));
  EXPECT_EQ(t.at(0, 1, 1), Complex(0.0));
  EXPECT_NEAR(std::abs(t.at(0, 0, 1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(testing::brute_preconcurrence(dec)[0][0][1] - 0.5), 0.0, 1e-15);
}

TEST(Preconcurrence, MatchesBruteForceAndIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Dims dims(2 + seed % 2, 2 + (seed / 2) % 3);
    const Decomposition dec = testing::random_decomposition(dims, 1 + seed % 5, seed);
    const auto t = preconcurrence(dec);
    const auto ref = testing::brute_preconcurrence(dec);
    ASSERT_EQ(t.wedges(), static_cast<int>(ref.size()));
    for (int k = 0; k < t.wedges(); ++k) {
      EXPECT_LT(max_diff(t.slice(k), slice_matrix(ref[k])), 1e-14);
      EXPECT_EQ(t.slice(k), t.slice(k).transpose());
    }
    for (int mu = 0; mu < dec.size(); ++mu) {
      const auto c = concurrence_matrix(dec[mu]);
      for (int k = 0; k < t.wedges(); ++k) EXPECT_EQ(t.at(k, mu, mu), c.entries(k));
    }
  }
}

TEST(TransformMix, Examples) {
  const Decomposition dec = testing::random_decomposition(Dims(2, 3), 3, 1);
  const auto t = preconcurrence(dec);
  EXPECT_LT(max_tensor_diff(transform_mix(t, MixingUnitary::identity(3)), t), 1e-15);

  const double theta = 0.7;
  CMatrix d = CMatrix::Identity(3, 3);
  d(0, 0) = std::polar(1.0, theta);
  const auto phased = transform_mix(t, MixingUnitary(d));
  for (int k = 0; k < t.wedges(); ++k) {
    EXPECT_NEAR(std::abs(phased.at(k, 0, 0) - std::polar(1.0, 2 * theta) * t.at(k, 0, 0)),
                0.0, 1e-14);
  }
  EXPECT_THROW(transform_mix(t, MixingUnitary::identity(2)), Error);
}

TEST(TransformMix, CommutesWithRecomputation) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Dims dims(2 + seed % 2, 2 + seed % 3);
    const int m = 1 + seed % 5;
    const Decomposition dec = testing::random_decomposition(dims, m, seed);
    const MixingUnitary u = testing::random_mixing(m, 1000 + seed);
    EXPECT_LT(max_tensor_diff(transform_mix(preconcurrence(dec), u),
                              preconcurrence(mix(dec, u))),
              1e-10);
  }
}

TEST(TransformMix, ComposesBilinearly) {
  const Decomposition dec = testing::random_decomposition(Dims(3, 3), 4, 2);
  const auto t = preconcurrence(dec);
  const MixingUnitary u1 = testing::random_mixing(4, 3), u2 = testing::random_mixing(4, 4);
  EXPECT_LT(max_tensor_diff(transform_mix(t, MixingUnitary(u1.matrix() * u2.matrix())),
                            transform_mix(transform_mix(t, u2), u1)),
            1e-12);
}

TEST(SecondCompound, UnitaryForUnitaryInput) {
  const auto lu = testing::random_local_pair(Dims(4, 3), 8);
  EXPECT_LT(linalg::unitarity_residual(second_compound(lu.v())), 1e-13);
  const CMatrix c = second_compound(lu.v());
  EXPECT_EQ(c.rows(), 6);
  CMatrix sub(2, 2);
  sub << lu.v()(0, 1), lu.v()(0, 3), lu.v()(2, 1), lu.v()(2, 3);
  // rows (0,2) and columns (1,3) are positions 1 and 4 in lexicographic order
  EXPECT_NEAR(std::abs(c(1, 4) - testing::leibniz_det(sub)), 0.0, 1e-15);
}

TEST(TransformLocal, CommutesWithRecomputationAndPreservesNorm) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Dims dims(2 + seed % 3, 2 + (seed / 3) % 3);
    const int m = 1 + seed % 4;
    const Decomposition dec = testing::random_decomposition(dims, m, seed);
    const auto lu = testing::random_local_pair(dims, 2000 + seed);
    const auto t = preconcurrence(dec);
    const auto moved = transform_local(t, lu);
    EXPECT_LT(max_tensor_diff(moved, preconcurrence(apply_local(dec, lu))), 1e-10);
    EXPECT_NEAR(moved.squared_norm(), t.squared_norm(), 1e-10);
  }
  const auto t = preconcurrence(testing::random_decomposition(Dims(2, 2), 2, 0));
  EXPECT_LT(max_tensor_diff(transform_local(t, LocalUnitaryPair::identity(Dims(2, 2))), t),
            1e-15);
}

TEST(Transforms, MixAndLocalCommute) {
  const Dims dims(3, 2);
  const Decomposition dec = testing::random_decomposition(dims, 3, 5);
  const auto u = testing::random_mixing(3, 6);
  const auto lu = testing::random_local_pair(dims, 7);
  const auto t = preconcurrence(dec);
  EXPECT_LT(max_tensor_diff(transform_mix(transform_local(t, lu), u),
                            transform_local(transform_mix(t, u), lu)),
            1e-10);
}

TEST(DMatrix, Examples) {
  const CMatrix bell = d_matrix(preconcurrence(Decomposition(Dims(2, 2), {gen::bell(2)})));
  ASSERT_EQ(bell.rows(), 1);
  EXPECT_NEAR(bell(0, 0).real(), 1.0, 1e-15);

  const auto sample = gen::random_separable(Dims(2, 3), 4, 3);
  const CMatrix d = d_matrix(preconcurrence(sample.certificate));
  EXPECT_LT(linalg::hermiticity_residual(d), 1e-12);
  EXPECT_GT(linalg::min_eigenvalue(d), -1e-10);
}

TEST(DMatrix, HermitianPsdAndMatchesContraction) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Decomposition dec = testing::random_decomposition(Dims(3, 3), 1 + seed % 5, seed);
    const auto t = preconcurrence(dec);
    const CMatrix d = d_matrix(t);
    EXPECT_LT(linalg::hermiticity_residual(d), 1e-12);
    EXPECT_GT(linalg::min_eigenvalue(d), -1e-10);
    const int m = dec.size();
    for (int mu = 0; mu < m; ++mu) {
      for (int nu = 0; nu < m; ++nu) {
        Complex ref = 0.0;
        for (int k = 0; k < t.wedges(); ++k) {
          for (int a = 0; a < m; ++a) ref += t.at(k, mu, a) * std::conj(t.at(k, nu, a));
        }
        EXPECT_NEAR(std::abs(d(mu, nu) - ref), 0.0, 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace conclab
