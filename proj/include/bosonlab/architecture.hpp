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

#ifndef BOSONLAB_ARCHITECTURE_HPP_
#define BOSONLAB_ARCHITECTURE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bosonlab/lin_core.hpp"

namespace bosonlab {

// Two-mode gate slot. Modes are 1-based and mode_a < mode_b; the gate's first
// row and column act on mode_a.
struct GatePlacement {
  int layer = 0;
  int mode_a = 0;
  int mode_b = 0;

  bool operator==(const GatePlacement&) const = default;
};

enum class ArchKind { kButterfly, kInverseButterfly, kKaleidoscope };

struct ArchLabel {
  ArchKind kind = ArchKind::kButterfly;
  int reps = 1;  // q for (B B*)^q, 1 otherwise

  // "B", "B*", "BBstar" (q = 1) or "Kaleidoscope(q)".
  std::string str() const;
  static ArchLabel parse(std::string_view text);

  bool operator==(const ArchLabel&) const = default;
};

int log2_exact(int modes);

class Architecture {
 public:
  Architecture(int modes, ArchLabel label,
               std::vector<std::vector<GatePlacement>> layers);

  int modes() const { return modes_; }
  const ArchLabel& label() const { return label_; }
  int depth() const { return static_cast<int>(layers_.size()); }
  std::size_t gate_count() const;
  const std::vector<std::vector<GatePlacement>>& layers() const {
    return layers_;
  }
  // All placements in application order.
  std::vector<GatePlacement> placements() const;

  bool operator==(const Architecture&) const = default;

 private:
  int modes_;
  ArchLabel label_;
  std::vector<std::vector<GatePlacement>> layers_;
};

Architecture build_butterfly(int modes);
Architecture build_inverse_butterfly(int modes);
// (B B*)^q: B, then B*, repeated q times.
Architecture build_kaleidoscope(int modes, int reps);
Architecture build_from_label(int modes, const ArchLabel& label);

// Layers of `first` followed by layers of `second`. Both must be
// kaleidoscope-type; the result is labelled with the summed repetitions.
Architecture concatenate(const Architecture& first, const Architecture& second);

class Circuit {
 public:
  // gates[i] sits on placements()[i].
  Circuit(Architecture arch, std::vector<Gate2> gates);

  static Circuit identity(Architecture arch);

  const Architecture& architecture() const { return arch_; }
  const std::vector<Gate2>& gates() const { return gates_; }
  int modes() const { return arch_.modes(); }

 private:
  Architecture arch_;
  std::vector<Gate2> gates_;
};

// Circuit with independent Haar gates on every placement.
Circuit random_local_circuit(const Architecture& arch, Rng& rng);

// U = E_D ... E_1, each layer left-multiplying the product so far.
ComplexUnitary circuit_unitary(const Circuit& circuit);
// U x computed gate by gate, O(gates * cols).
Matrix apply_circuit(const Circuit& circuit, Matrix x);
// `first` is applied first.
Circuit concatenate(const Circuit& first, const Circuit& second);

nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& doc);

}  // namespace bosonlab

#endif  // BOSONLAB_ARCHITECTURE_HPP_
