// Copyright 2026 The oosym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oosym/projectors.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "oosym/errors.hpp"
#include "oracles.hpp"

using namespace oosym;

TEST(multi_index, rank_round_trip) {
  for (int K = 1; K <= 4; ++K) {
    for (int rank = 0; rank < simplex_size(K); ++rank) {
      const auto alpha = MultiIndex::from_rank(rank, K);
      EXPECT_EQ(alpha.rank(), rank);
      EXPECT_EQ(MultiIndex::parse(alpha.to_string()), alpha);
    }
  }
  EXPECT_EQ(MultiIndex({0, 2}).rank(), 2);
  EXPECT_EQ(MultiIndex({2, 0}).rank(), 6);
  EXPECT_EQ(MultiIndex({1, 2}).to_string(), "12");
  EXPECT_THROW(MultiIndex({3}), IndexError);
  EXPECT_THROW(MultiIndex::from_rank(9, 2), IndexError);
}

TEST(flip, definition_d2) {
  const auto f = flip(2);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 1.0;
  expected(1, 2) = expected(2, 1) = 1.0;
  EXPECT_EQ(max_abs_diff(f, ComplexOperator(expected, {2, 2})), 0.0);
}

TEST(flip, swaps_product_vectors) {
  const int d = 3;
  const auto f = flip(d);
  const Vector psi = random_unit_vector(d, Field::Complex, 1);
  const Vector phi = random_unit_vector(d, Field::Complex, 2);
  Vector psi_phi(d * d), phi_psi(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      psi_phi(i * d + j) = psi(i) * phi(j);
      phi_psi(i * d + j) = phi(i) * psi(j);
    }
  }
  EXPECT_LE((f.matrix() * psi_phi - phi_psi).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(flip, trace_and_square) {
  for (int d : {2, 3, 4, 5}) {
    const auto f = flip(d);
    EXPECT_EQ(f.trace(), Complex(d));
    EXPECT_EQ(max_abs_diff(f * f, ComplexOperator::identity({d, d})), 0.0);
    EXPECT_EQ(max_abs_diff(f, ComplexOperator(oracle::flip(d), {d, d})), 0.0);
  }
  EXPECT_THROW(flip(1), DomainError);
}

TEST(build_bipartite, traces) {
  // Oracle: closed-form traces evaluated here, cross-checked on dense matrices.
  auto traces = [](int d) {
    const auto b = build_bipartite(d);
    return std::vector<double>{b.q0.trace().real(),  b.q1.trace().real(), b.p1.trace().real(),
                               b.pi0.trace().real(), b.pi1.trace().real(), b.pi2.trace().real()};
  };
  const auto t2 = traces(2);
  const std::vector<double> expected2{3, 1, 1, 2, 1, 1};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(t2[i], expected2[i], 1e-14);

  const auto t3 = traces(3);
  EXPECT_NEAR(t3[3], 5.0, 1e-14);
  EXPECT_NEAR(t3[4], 3.0, 1e-14);
  EXPECT_NEAR(t3[5], 1.0, 1e-14);
  EXPECT_NEAR(t3[3] + t3[4] + t3[5], 9.0, 1e-14);

  for (int d = 2; d <= 8; ++d) {
    const auto b = build_bipartite(d);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(b.pi(k).trace().real(), static_cast<double>(bipartite_trace(d, k)), 1e-12);
    }
  }
}

TEST(build_bipartite, resolution_and_orthogonality) {
  for (int d = 2; d <= 6; ++d) {
    const auto b = build_bipartite(d);
    const auto id = ComplexOperator::identity({d, d});
    EXPECT_LE(max_abs_diff(b.q0 + b.q1, id), 1e-15);
    EXPECT_LE(max_abs_diff(b.p0 + b.p1, id), 1e-15);
    EXPECT_LE(max_abs_diff(b.pi0 + b.pi1 + b.pi2, id), 1e-15);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const auto prod = b.pi(i) * b.pi(j);
        const double r = i == j ? max_abs_diff(prod, b.pi(j)) : max_abs(prod);
        EXPECT_LE(r, 1e-13) << "d=" << d << " i=" << i << " j=" << j;
      }
      EXPECT_LE(max_abs_diff(b.pi(i), ComplexOperator(oracle::pi(d, i), {d, d})), 1e-15);
    }
    // P+ sits inside the symmetric subspace.
    EXPECT_LE(max_abs_diff(b.q0 * b.pplus, b.pplus), 1e-15);
  }
}

TEST(build_bipartite, pplus_is_rank_one) {
  for (int d : {2, 3, 4}) {
    const auto ev = eigenvalues(build_bipartite(d).pi2);
    EXPECT_NEAR(ev.back(), 1.0, 1e-13);
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) EXPECT_NEAR(ev[i], 0.0, 1e-13);
  }
}

TEST(build_bipartite, d2_ranks) {
  const auto b = build_bipartite(2);
  EXPECT_NEAR(b.pi1.trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(b.pi0.trace().real(), 2.0, 1e-15);
  EXPECT_THROW(build_bipartite(1), DomainError);
}

TEST(build_bipartite, werner_isotropic_dependence) {
  for (int d = 2; d <= 5; ++d) {
    const auto b = build_bipartite(d);
    EXPECT_LE(max_abs(b.q0 + b.q1 - b.p0 - b.p1), 4 * std::numeric_limits<double>::epsilon());
  }
}

TEST(pair_permutation, small_cases) {
  EXPECT_EQ(pair_permutation(1), (std::vector<int>{0, 1}));
  EXPECT_EQ(pair_permutation(2), (std::vector<int>{0, 2, 1, 3}));
  EXPECT_EQ(pair_permutation(3), (std::vector<int>{0, 3, 1, 4, 2, 5}));
  const auto id = ComplexOperator::identity(Shape(6, 2));
  EXPECT_EQ(max_abs_diff(permute_legs(id, pair_permutation(3)), id), 0.0);
}

TEST(pair_permutation, permuted_product_commutes_with_orthogonal_tuples) {
  const int d = 2;
  const auto b = build_bipartite(d);
  const auto op = permute_legs(kron(b.pi0, b.pi1), pair_permutation(2));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto o1 = random_orthogonal(d, 2 * seed);
    const auto o2 = random_orthogonal(d, 2 * seed + 1);
    const auto oo = kron(kron(kron(o1, o2), o1), o2);
    EXPECT_LE(max_abs_diff(oo * op, op * oo), 1e-10);
  }
}

TEST(build_multipartite, matches_explicit_index_formula) {
  // <a1 a2 b1 b2| Pi^{(x y)} |a1' a2' b1' b2'> = Pi^x[a1 b1, a1' b1'] Pi^y[a2 b2, a2' b2']
  const int d = 2;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const auto px = oracle::pi(d, x);
      const auto py = oracle::pi(d, y);
      const auto proj = build_multipartite(d, 2, MultiIndex({x, y}));
      double worst = 0.0;
      for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
          const int a1 = r >> 3 & 1, a2 = r >> 2 & 1, b1 = r >> 1 & 1, b2 = r & 1;
          const int a1p = c >> 3 & 1, a2p = c >> 2 & 1, b1p = c >> 1 & 1, b2p = c & 1;
          const Complex expected = px(a1 * d + b1, a1p * d + b1p) * py(a2 * d + b2, a2p * d + b2p);
          worst = std::max(worst, std::abs(proj(r, c) - expected));
        }
      }
      EXPECT_LE(worst, 1e-15);
    }
  }
}

TEST(build_multipartite, completeness_d2_k2) {
  const auto family = build_family(2, 2);
  ASSERT_EQ(family.size(), 9u);
  ComplexOperator total = ComplexOperator::zero(Shape(4, 2));
  for (const auto& p : family) total += p;
  EXPECT_LE(max_abs_diff(total, ComplexOperator::identity(Shape(4, 2))), 1e-12);
}

TEST(build_multipartite, traces_are_products) {
  const auto p = build_multipartite(2, 2, MultiIndex({0, 2}));
  EXPECT_NEAR(p.trace().real(), 2.0, 1e-14);
  EXPECT_EQ(multipartite_trace(2, MultiIndex({0, 2})), 2);
  for (int d : {2, 3}) {
    const auto family = build_family(d, 2);
    for (int rank = 0; rank < 9; ++rank) {
      const auto alpha = MultiIndex::from_rank(rank, 2);
      const double expected = static_cast<double>(bipartite_trace(d, alpha[0]) *
                                                  bipartite_trace(d, alpha[1]));
      EXPECT_NEAR(family[rank].trace().real(), expected, 1e-12);
    }
  }
}

TEST(build_multipartite, orthogonality_d2_k2) {
  const auto family = build_family(2, 2);
  int pairs = 0;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      if (a == b) {
        EXPECT_LE(max_abs_diff(family[a] * family[a], family[a]), 1e-12);
        continue;
      }
      EXPECT_LE(max_abs(family[a] * family[b]), 1e-13);
      if (a < b) ++pairs;
    }
  }
  EXPECT_EQ(pairs, 36);
}

TEST(build_multipartite, family_properties) {
  for (auto [d, K] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 1}, {3, 2}}) {
    const auto family = build_family(d, K);
    const Shape shape(2 * K, d);
    ComplexOperator total = ComplexOperator::zero(shape);
    for (const auto& p : family) total += p;
    EXPECT_LE(max_abs_diff(total, ComplexOperator::identity(shape)), 1e-12);
    for (const auto& p : family) EXPECT_LE(max_abs_diff(p * p, p), 1e-12);
  }
}

TEST(build_multipartite, orthogonal_invariance) {
  for (auto [d, K] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}}) {
    const auto family = build_family(d, K);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      std::vector<ComplexOperator> o;
      for (int i = 0; i < K; ++i) o.push_back(random_orthogonal(d, mix_seed(seed, i)));
      ComplexOperator oo = o[0];
      for (int i = 1; i < 2 * K; ++i) oo = kron(oo, o[i % K]);
      for (const auto& p : family) EXPECT_LE(max_abs_diff(oo * p, p * oo), 1e-10);
    }
  }
}

TEST(build_multipartite, unitary_tuples_break_pplus_but_not_antisymmetric) {
  // Pi^1 = Q^1 commutes with every U x U; P+ only with real (orthogonal) U.
  const int d = 2;
  const auto b = build_bipartite(d);
  double worst_pplus = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto u = random_unitary(d, seed);
    const auto uu = kron(u, u);
    EXPECT_LE(max_abs_diff(uu * b.pi1, b.pi1 * uu), 1e-12);
    worst_pplus = std::max(worst_pplus, max_abs_diff(uu * b.pi2, b.pi2 * uu));
  }
  EXPECT_GT(worst_pplus, 1e-3);
}

TEST(build_multipartite, capacity) {
  EXPECT_NO_THROW(check_dense_capacity(2, 6));
  EXPECT_THROW(check_dense_capacity(2, 7), CapacityError);
  EXPECT_NO_THROW(check_dense_capacity(3, 3));
  EXPECT_THROW(check_dense_capacity(3, 4), CapacityError);
  EXPECT_THROW(build_multipartite(3, 4, MultiIndex({0, 0, 0, 0})), CapacityError);
  EXPECT_THROW(build_multipartite(2, 2, MultiIndex({0})), IndexError);
}

TEST(normalized_projector, unit_trace) {
  const auto np = normalized_projector(3, 2, MultiIndex({1, 0}));
  EXPECT_EQ(np.trace, 15);
  EXPECT_NEAR(np.normalized().trace().real(), 1.0, 1e-14);
}
