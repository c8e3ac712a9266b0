// Copyright 2026 The bosonlab Authors
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

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "bosonlab/routing.hpp"
#include "bosonlab/stats.hpp"

namespace bosonlab {
namespace {

// P e_i = e_{image[i]}, written out entry by entry.
Matrix permutation_oracle(const std::vector<int>& image) {
  const int m = static_cast<int>(image.size());
  Matrix p = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) p(image[i], i) = 1.0;
  return p;
}

bool is_swap_or_identity(const Gate2& g) {
  Gate2 swap;
  swap << 0, 1, 1, 0;
  return g == Gate2::Identity() || g == swap;
}

void expect_routes(const std::vector<int>& image) {
  Circuit c = route_permutation(Permutation(image));
  const int m = static_cast<int>(image.size());
  ASSERT_EQ(c.architecture().label().str(), "BBstar");
  ASSERT_EQ(c.gates().size(), static_cast<std::size_t>(m * log2_exact(m)));
  for (const Gate2& g : c.gates()) ASSERT_TRUE(is_swap_or_identity(g));
  ASSERT_EQ(circuit_unitary(c).matrix(), permutation_oracle(image));
}

TEST(Permutation, Basics) {
  Permutation p = Permutation::parse_one_based("3,1,2,4");
  EXPECT_EQ(p.image(), (std::vector<int>{2, 0, 1, 3}));
  EXPECT_EQ(p.str_one_based(), "3,1,2,4");
  EXPECT_EQ(p.after(p.inverse()), Permutation::identity(4));
  EXPECT_EQ(p.matrix(), permutation_oracle(p.image()));
  EXPECT_EQ(p.apply({10, 11, 12, 13}), (std::vector<int>{11, 12, 10, 13}));
  Permutation q({1, 0, 3, 2});
  EXPECT_EQ(p.after(q).matrix(), p.matrix() * q.matrix());
  EXPECT_THROW(Permutation({0, 0}), ValidationError);
  EXPECT_THROW(Permutation::parse_one_based("1,3"), ValidationError);
}

TEST(Routing, IdentityAndTwoModeSwap) {
  Circuit id = route_permutation(Permutation::identity(8));
  for (const Gate2& g : id.gates()) EXPECT_EQ(g, Gate2::Identity());
  Circuit sw = route_permutation(Permutation({1, 0}));
  int swaps = 0;
  for (const Gate2& g : sw.gates()) swaps += g != Gate2::Identity();
  EXPECT_EQ(swaps, 1);
}

TEST(Routing, ExhaustiveUpToEight) {
  for (int m : {2, 4, 8}) {
    std::vector<int> image(m);
    std::iota(image.begin(), image.end(), 0);
    int count = 0;
    do {
      expect_routes(image);
      ++count;
    } while (std::next_permutation(image.begin(), image.end()));
    EXPECT_EQ(count, m == 2 ? 2 : m == 4 ? 24 : 40320);
  }
}

TEST(Routing, RandomLargerSizes) {
  Rng rng(17);
  for (int m : {16, 32, 64}) {
    for (int i = 0; i < (m == 16 ? 1000 : 50); ++i) {
      expect_routes(sample_permutation(m, rng).image());
    }
  }
}

TEST(Routing, Deterministic) {
  Rng rng(2);
  Permutation p = sample_permutation(16, rng);
  EXPECT_EQ(route_permutation(p).gates(), route_permutation(p).gates());
}

TEST(Routing, SampledPermutationsAreUniform) {
  Rng rng(5);
  std::map<std::vector<int>, std::uint64_t> counts;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    RoutedPermutation r = sample_permutation_circuit(4, rng);
    ++counts[r.permutation.image()];
    if (i < 200) {
      ASSERT_EQ(circuit_unitary(r.circuit).matrix(), r.permutation.matrix());
    }
  }
  ASSERT_EQ(counts.size(), 24u);
  std::vector<std::uint64_t> obs;
  for (const auto& [k, v] : counts) obs.push_back(v);
  EXPECT_GT(chi_square_gof(obs, std::vector<double>(24, 1.0 / 24)).p_value, 1e-3);
}

TEST(GridEmbedding, TwoModeChainIsTheGate) {
  Rng rng(1);
  Gate2 g = haar_gate(rng);
  GridEmbedding e = embed_grid_1d({g});
  EXPECT_EQ(e.permutation, Permutation::identity(2));
  EXPECT_EQ(e.circuit.gates()[0], g);
}

TEST(GridEmbedding, FourModeChainPlacesMiddleGateOnTwoFour) {
  Rng rng(2);
  std::vector<Gate2> chain{haar_gate(rng), haar_gate(rng), haar_gate(rng)};
  GridEmbedding e = embed_grid_1d(chain);
  std::vector<GatePlacement> ps = e.circuit.architecture().placements();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].layer != 2) continue;
    if (ps[i].mode_a == 2) {
      EXPECT_EQ(ps[i].mode_b, 4);
      EXPECT_EQ(e.circuit.gates()[i], chain[1]);
    } else {
      EXPECT_EQ(e.circuit.gates()[i], Gate2::Identity());
    }
  }
  // Descending order on the upper block of size 2^L: 2^{L-1} + k -> 2^L + 1 - k.
  EXPECT_EQ(e.permutation.image(), (std::vector<int>{0, 1, 3, 2}));

  // Level order: the two outer junctions first, then the middle one.
  Matrix chain_u = Matrix::Identity(4, 4);
  for (int s : {0, 2, 1}) {
    Matrix blk = Matrix::Identity(4, 4);
    blk.block(s, s, 2, 2) = chain[s];
    chain_u = blk * chain_u;
  }
  EXPECT_LE(verify_embedding(chain_u, e.permutation, e.circuit), 1e-12);
}

// The block reversals for L = 2..n, applied in ascending L, that turn the upper half
// of each size-2^L block from ascending to descending order.
TEST(GridEmbedding, ChainPermutationIsProductOfReversals) {
  for (int n = 1; n <= 6; ++n) {
    const int m = 1 << n;
    Matrix p = Matrix::Identity(m, m);
    for (int level = 2; level <= n; ++level) {
      const int block = 1 << level, half = block / 2;
      for (int j = 1; j <= m / block; ++j) {
        std::vector<int> image(m);
        std::iota(image.begin(), image.end(), 0);
        for (int k = 1; k <= half; ++k) {
          image[block * (j - 1) + half + k - 1] = block * (j - 1) + block - k;
        }
        p = permutation_oracle(image) * p;
      }
    }
    GridEmbedding e = embed_grid_1d(std::vector<Gate2>(m - 1, Gate2::Identity()));
    EXPECT_EQ(e.permutation.matrix(), p) << "M = " << m;
  }
}

// At depth L >= 2 the only non-trivial gate of block j sits on modes
// 2^L (j-1) + 2^{L-2} + 1 and 2^L (j-1) + 2^{L-1} + 2^{L-2} + 1.
TEST(GridEmbedding, ChainGateOffsets) {
  Rng rng(9);
  for (int n = 2; n <= 5; ++n) {
    const int m = 1 << n;
    std::vector<Gate2> chain;
    for (int i = 0; i < m - 1; ++i) chain.push_back(haar_gate(rng));
    GridEmbedding e = embed_grid_1d(chain);
    std::vector<GatePlacement> ps = e.circuit.architecture().placements();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const int level = ps[i].layer;
      if (level < 2) {
        EXPECT_NE(e.circuit.gates()[i], Gate2::Identity());
        continue;
      }
      const int block = 1 << level;
      const int j = (ps[i].mode_a - 1) / block + 1;
      const int a = block * (j - 1) + (1 << (level - 2)) + 1;
      const bool active = ps[i].mode_a == a;
      EXPECT_EQ(e.circuit.gates()[i] != Gate2::Identity(), active)
          << "M = " << m << " layer " << level << " mode " << ps[i].mode_a;
      if (active) {
        EXPECT_EQ(ps[i].mode_b, a + block / 2);
      }
    }
  }
}

TEST(GridEmbedding, RandomGrids) {
  Rng rng(3);
  for (const std::vector<int>& sizes : std::vector<std::vector<int>>{
           {3}, {2, 2}, {1, 1, 2}, {2, 1}, {4}, {1, 3, 1}}) {
    for (int i = 0; i < 20; ++i) {
      GridSpec g = random_grid(sizes, rng);
      GridEmbedding e = embed_grid(g);
      EXPECT_LE(verify_embedding(grid_circuit_unitary(g).matrix(), e.permutation,
                                 e.circuit),
                1e-10);
    }
  }
}

TEST(GridEmbedding, OneDimensionalMatchesGeneral) {
  Rng rng(4);
  std::vector<Gate2> chain;
  for (int i = 0; i < 15; ++i) chain.push_back(haar_gate(rng));
  GridSpec g({4});
  for (int s = 1; s <= 15; ++s) g.set_gate(1, s, chain[s - 1]);
  GridEmbedding a = embed_grid_1d(chain);
  GridEmbedding b = embed_grid(g);
  EXPECT_EQ(a.permutation, b.permutation);
  EXPECT_EQ(a.circuit.gates(), b.circuit.gates());
}

TEST(GridEmbedding, IdentityGridAndPerturbation) {
  GridSpec g({2, 2});
  GridEmbedding e = embed_grid(g);
  EXPECT_EQ(verify_embedding(Matrix::Identity(16, 16), e.permutation, e.circuit), 0.0);

  Rng rng(6);
  GridSpec r = random_grid({3}, rng);
  GridEmbedding er = embed_grid(r);
  Matrix target = grid_circuit_unitary(r).matrix();
  target(0, 0) += 1e-3;
  EXPECT_GE(verify_embedding(target, er.permutation, er.circuit), 1e-4);
  EXPECT_THROW(verify_embedding(Matrix::Identity(4, 4), er.permutation, er.circuit),
               DimensionError);
}

TEST(GridEmbedding, EdgeLevels) {
  GridSpec g({3});
  std::vector<int> levels;
  for (const GridEdge& e : g.edges()) levels.push_back(e.level);
  EXPECT_EQ(levels, (std::vector<int>{1, 1, 1, 1, 2, 2, 3}));
  EXPECT_THROW(GridSpec({0}), DimensionError);
  EXPECT_THROW(g.set_gate(1, 8, Gate2::Identity()), ValidationError);
}

}  // namespace
}  // namespace bosonlab
