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

#ifndef BOSONLAB_ROUTING_HPP_
#define BOSONLAB_ROUTING_HPP_

#include <map>
#include <utility>
#include <vector>

#include "bosonlab/architecture.hpp"
#include "bosonlab/permutation.hpp"

namespace bosonlab {

// Benes looping-algorithm routing onto B B*. Every gate is the identity or
// the swap [[0,1],[1,0]], and the circuit unitary equals perm.matrix().
Circuit route_permutation(const Permutation& perm);

struct RoutedPermutation {
  Permutation permutation;
  Circuit circuit;
};

RoutedPermutation sample_permutation_circuit(int modes, Rng& rng);

// Nearest-neighbour circuit on a 2^{n_1} x ... x 2^{n_d} grid. Grid modes are
// numbered with dimension 1 varying fastest: x = sum_i x_i 2^{n_1+...+n_{i-1}}.
// Each edge joins x and the mode one step further along a single dimension.
struct GridEdge {
  int dim = 0;    // 1-based dimension
  int lower = 0;  // 1-based mode of the lower endpoint
  int upper = 0;  // 1-based mode of the upper endpoint
  int level = 0;  // 1 + 2-adic valuation of the 1-based junction index
};

class GridSpec {
 public:
  // Every edge starts as the identity.
  explicit GridSpec(std::vector<int> log_sizes);

  int dims() const { return static_cast<int>(log_sizes_.size()); }
  int modes() const { return 1 << total_bits_; }
  const std::vector<int>& log_sizes() const { return log_sizes_; }

  // Edges in application order: dimension by dimension, and within one
  // dimension by level, then by lower mode.
  const std::vector<GridEdge>& edges() const { return edges_; }

  void set_gate(int dim, int lower, const Gate2& gate);
  const Gate2& gate(int dim, int lower) const;

 private:
  std::vector<int> log_sizes_;
  int total_bits_ = 0;
  std::vector<GridEdge> edges_;
  std::map<std::pair<int, int>, Gate2> gates_;
};

// Random Haar gate on every edge.
GridSpec random_grid(std::vector<int> log_sizes, Rng& rng);

ComplexUnitary grid_circuit_unitary(const GridSpec& grid);

struct GridEmbedding {
  Permutation permutation;
  Circuit circuit;  // on the butterfly B
};

// Finds P and a butterfly circuit C' with grid unitary = P U(C') P^T.
GridEmbedding embed_grid(const GridSpec& grid);
// 1D chain: chain[s-1] acts on modes (s, s+1), applied in level order.
GridEmbedding embed_grid_1d(const std::vector<Gate2>& chain);

// max |target - P U(C') P^T|
double verify_embedding(const Matrix& target, const Permutation& perm,
                        const Circuit& circuit);

}  // namespace bosonlab

#endif  // BOSONLAB_ROUTING_HPP_
