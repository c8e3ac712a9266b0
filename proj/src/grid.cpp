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
#include <string>

#include "bosonlab/routing.hpp"

namespace bosonlab {
namespace {

int two_adic_level(int junction) {
  int level = 1;
  while ((junction & 1) == 0) {
    junction >>= 1;
    ++level;
  }
  return level;
}

// Butterfly position o -> chain coordinate on a block of 2^bits sites. The
// upper half of every block is laid out in reverse, which is what puts each
// level's junction onto a single butterfly pair.
int chain_position(int bits, int o) {
  if (bits == 0) return 0;
  const int half = 1 << (bits - 1);
  if (o < half) return chain_position(bits - 1, o);
  return (1 << bits) - 1 - chain_position(bits - 1, o - half);
}

}  // namespace

GridSpec::GridSpec(std::vector<int> log_sizes) : log_sizes_(std::move(log_sizes)) {
  if (log_sizes_.empty()) throw DimensionError("grid needs at least one dimension");
  for (int n : log_sizes_) {
    if (n < 1) throw DimensionError("grid side lengths must be 2^n with n >= 1");
    total_bits_ += n;
  }
  if (total_bits_ > 20) throw CapacityError("grid too large");

  int offset = 0;
  for (int d = 0; d < dims(); ++d) {
    const int side = 1 << log_sizes_[d];
    std::vector<GridEdge> dim_edges;
    for (int x = 0; x < modes(); ++x) {
      const int coord = (x >> offset) & (side - 1);
      if (coord == side - 1) continue;
      dim_edges.push_back({d + 1, x + 1, x + 1 + (1 << offset),
                           two_adic_level(coord + 1)});
    }
    std::stable_sort(dim_edges.begin(), dim_edges.end(),
                     [](const GridEdge& a, const GridEdge& b) {
                       return a.level < b.level;
                     });
    for (const GridEdge& e : dim_edges) {
      edges_.push_back(e);
      gates_[{e.dim, e.lower}] = Gate2::Identity();
    }
    offset += log_sizes_[d];
  }
}

void GridSpec::set_gate(int dim, int lower, const Gate2& gate) {
  auto it = gates_.find({dim, lower});
  if (it == gates_.end()) {
    throw ValidationError("grid has no edge in dimension " + std::to_string(dim) +
                          " starting at mode " + std::to_string(lower));
  }
  require_unitary(gate, "grid gate");
  it->second = gate;
}

const Gate2& GridSpec::gate(int dim, int lower) const {
  auto it = gates_.find({dim, lower});
  if (it == gates_.end()) throw ValidationError("grid edge does not exist");
  return it->second;
}

GridSpec random_grid(std::vector<int> log_sizes, Rng& rng) {
  GridSpec grid(std::move(log_sizes));
  const std::vector<GridEdge> edges = grid.edges();
  for (const GridEdge& e : edges) grid.set_gate(e.dim, e.lower, haar_gate(rng));
  return grid;
}

ComplexUnitary grid_circuit_unitary(const GridSpec& grid) {
  Matrix u = Matrix::Identity(grid.modes(), grid.modes());
  for (const GridEdge& e : grid.edges()) {
    const Gate2& g = grid.gate(e.dim, e.lower);
    const int a = e.lower - 1, b = e.upper - 1;
    for (int c = 0; c < u.cols(); ++c) {
      const Complex ua = u(a, c), ub = u(b, c);
      u(a, c) = g(0, 0) * ua + g(0, 1) * ub;
      u(b, c) = g(1, 0) * ua + g(1, 1) * ub;
    }
  }
  return ComplexUnitary(std::move(u), 1e-9);
}

GridEmbedding embed_grid(const GridSpec& grid) {
  const int modes = grid.modes();
  std::vector<int> image(modes, 0);
  for (int b = 0; b < modes; ++b) {
    int offset = 0, x = 0;
    for (int n : grid.log_sizes()) {
      const int coord = (b >> offset) & ((1 << n) - 1);
      x |= chain_position(n, coord) << offset;
      offset += n;
    }
    image[b] = x;
  }
  Permutation perm(std::move(image));
  const Permutation inv = perm.inverse();

  Architecture arch = build_butterfly(modes);
  std::map<std::pair<int, int>, Gate2> placed;  // (layer, mode_a) -> gate
  Gate2 swap;
  swap << 0, 1, 1, 0;
  std::vector<int> offsets(grid.dims(), 0);
  for (int d = 1; d < grid.dims(); ++d) offsets[d] = offsets[d - 1] + grid.log_sizes()[d - 1];

  for (const GridEdge& e : grid.edges()) {
    const int layer = offsets[e.dim - 1] + e.level;
    const int bu = inv[e.lower - 1];
    const int bv = inv[e.upper - 1];
    const int lo = std::min(bu, bv), hi = std::max(bu, bv);
    if (hi - lo != (1 << (layer - 1)) || (lo >> (layer - 1)) % 2 != 0) {
      throw ValidationError("grid edge does not land on a butterfly pair");
    }
    const Gate2& g = grid.gate(e.dim, e.lower);
    placed[{layer, lo + 1}] = (bu < bv) ? g : Gate2(swap * g * swap);
  }

  std::vector<Gate2> gates;
  gates.reserve(arch.gate_count());
  for (const GatePlacement& p : arch.placements()) {
    auto it = placed.find({p.layer, p.mode_a});
    gates.push_back(it == placed.end() ? Gate2::Identity() : it->second);
  }
  return {std::move(perm), Circuit(std::move(arch), std::move(gates))};
}

GridEmbedding embed_grid_1d(const std::vector<Gate2>& chain) {
  const int modes = static_cast<int>(chain.size()) + 1;
  GridSpec grid({log2_exact(modes)});
  for (int s = 1; s < modes; ++s) grid.set_gate(1, s, chain[s - 1]);
  return embed_grid(grid);
}

double verify_embedding(const Matrix& target, const Permutation& perm,
                        const Circuit& circuit) {
  if (target.rows() != perm.size() || circuit.modes() != perm.size()) {
    throw DimensionError("verify_embedding: size mismatch");
  }
  const Matrix p = perm.matrix();
  return max_abs_diff(target, p * circuit_unitary(circuit).matrix() * p.transpose());
}

}  // namespace bosonlab
