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

#include "bosonlab/routing.hpp"

#include <map>

namespace bosonlab {
namespace {

// Switch settings keyed by (architecture layer index, 0-based lower mode).
using SwitchMap = std::map<std::pair<int, int>, bool>;

// Routes `local` on the 2^{n - level} modes r + x 2^level. The input column
// of this sub-network is B layer level+1 and the output column is the
// matching B* layer.
void route_level(int n, int level, int residue, const std::vector<int>& local,
                 SwitchMap& switches) {
  const int k = static_cast<int>(local.size());
  const int stride = 1 << level;
  const int in_layer = level;
  const int out_layer = 2 * n - 1 - level;

  if (k == 2) {
    switches[{in_layer, residue}] = (local[0] == 1);
    switches[{out_layer, residue}] = false;
    return;
  }

  std::vector<int> inv(k);
  for (int x = 0; x < k; ++x) inv[local[x]] = x;

  std::vector<int> subnet(k, -1);
  for (int start = 0; start < k; start += 2) {
    int x = start;
    while (subnet[x] == -1) {
      subnet[x] = 0;
      subnet[x ^ 1] = 1;
      // The partner of x^1's output has to arrive through subnet 0.
      x = inv[local[x ^ 1] ^ 1];
    }
  }

  std::vector<int> upper(k / 2), lower(k / 2);
  for (int x = 0; x < k; ++x) {
    (subnet[x] == 0 ? upper : lower)[x >> 1] = local[x] >> 1;
  }
  for (int i = 0; i < k / 2; ++i) {
    const int mode = residue + 2 * i * stride;
    switches[{in_layer, mode}] = (subnet[2 * i] == 1);
    switches[{out_layer, mode}] = (subnet[inv[2 * i]] == 1);
  }
  route_level(n, level + 1, residue, upper, switches);
  route_level(n, level + 1, residue + stride, lower, switches);
}

}  // namespace

Circuit route_permutation(const Permutation& perm) {
  const int modes = perm.size();
  const int n = log2_exact(modes);
  SwitchMap switches;
  route_level(n, 0, 0, perm.image(), switches);

  Architecture arch = build_kaleidoscope(modes, 1);
  Gate2 swap;
  swap << 0, 1, 1, 0;
  std::vector<Gate2> gates;
  gates.reserve(arch.gate_count());
  for (int l = 0; l < arch.depth(); ++l) {
    for (const GatePlacement& p : arch.layers()[l]) {
      gates.push_back(switches.at({l, p.mode_a - 1}) ? swap : Gate2::Identity());
    }
  }
  return Circuit(std::move(arch), std::move(gates));
}

RoutedPermutation sample_permutation_circuit(int modes, Rng& rng) {
  Permutation perm = sample_permutation(modes, rng);
  Circuit circuit = route_permutation(perm);
  return {std::move(perm), std::move(circuit)};
}

}  // namespace bosonlab
