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

#include "bosonlab/architecture.hpp"

#include <charconv>
#include <set>
#include <string>
#include <utility>

namespace bosonlab {

std::string ArchLabel::str() const {
  switch (kind) {
    case ArchKind::kButterfly:
      return "B";
    case ArchKind::kInverseButterfly:
      return "B*";
    case ArchKind::kKaleidoscope:
      if (reps == 1) return "BBstar";
      return "Kaleidoscope(" + std::to_string(reps) + ")";
  }
  return "?";
}

ArchLabel ArchLabel::parse(std::string_view text) {
  if (text == "B") return {ArchKind::kButterfly, 1};
  if (text == "B*") return {ArchKind::kInverseButterfly, 1};
  if (text == "BBstar") return {ArchKind::kKaleidoscope, 1};
  constexpr std::string_view prefix = "Kaleidoscope(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    const std::string_view digits =
        text.substr(prefix.size(), text.size() - prefix.size() - 1);
    int q = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && q >= 1) {
      return {ArchKind::kKaleidoscope, q};
    }
  }
  throw ValidationError("unknown architecture label '" + std::string(text) +
                        "'");
}

int log2_exact(int modes) {
  if (modes < 2 || (modes & (modes - 1)) != 0) {
    throw DimensionError("mode count must be a power of two >= 2, got " +
                         std::to_string(modes));
  }
  int n = 0;
  while ((1 << n) < modes) ++n;
  return n;
}

Architecture::Architecture(int modes, ArchLabel label,
                           std::vector<std::vector<GatePlacement>> layers)
    : modes_(modes), label_(label), layers_(std::move(layers)) {
  log2_exact(modes_);
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    std::vector<bool> used(static_cast<std::size_t>(modes_) + 1, false);
    for (const GatePlacement& p : layers_[l]) {
      if (p.layer != static_cast<int>(l) + 1) {
        throw ValidationError("placement layer index does not match its layer");
      }
      if (p.mode_a < 1 || p.mode_b > modes_ || p.mode_a >= p.mode_b) {
        throw ValidationError("placement modes out of range or unordered");
      }
      if (used[p.mode_a] || used[p.mode_b]) {
        throw ValidationError("gates within a layer must act on disjoint modes");
      }
      used[p.mode_a] = used[p.mode_b] = true;
    }
  }
}

std::size_t Architecture::gate_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers_) n += layer.size();
  return n;
}

std::vector<GatePlacement> Architecture::placements() const {
  std::vector<GatePlacement> out;
  out.reserve(gate_count());
  for (const auto& layer : layers_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

namespace {

// Butterfly layer L pairs 2^L (j-1) + k with 2^L (j-1) + k + 2^{L-1}.
std::vector<GatePlacement> butterfly_layer(int modes, int level, int index) {
  std::vector<GatePlacement> out;
  const int block = 1 << level;
  const int half = block >> 1;
  for (int base = 0; base < modes; base += block) {
    for (int k = 1; k <= half; ++k) {
      out.push_back({index, base + k, base + k + half});
    }
  }
  return out;
}

std::vector<std::vector<GatePlacement>> kaleidoscope_layers(int modes, int reps) {
  const int n = log2_exact(modes);
  std::vector<std::vector<GatePlacement>> layers;
  int index = 0;
  for (int r = 0; r < reps; ++r) {
    for (int level = 1; level <= n; ++level) {
      layers.push_back(butterfly_layer(modes, level, ++index));
    }
    for (int level = n; level >= 1; --level) {
      layers.push_back(butterfly_layer(modes, level, ++index));
    }
  }
  return layers;
}

}  // namespace

Architecture build_butterfly(int modes) {
  const int n = log2_exact(modes);
  std::vector<std::vector<GatePlacement>> layers;
  for (int level = 1; level <= n; ++level) {
    layers.push_back(butterfly_layer(modes, level, level));
  }
  return Architecture(modes, {ArchKind::kButterfly, 1}, std::move(layers));
}

Architecture build_inverse_butterfly(int modes) {
  const int n = log2_exact(modes);
  std::vector<std::vector<GatePlacement>> layers;
  for (int level = n; level >= 1; --level) {
    layers.push_back(butterfly_layer(modes, level, n - level + 1));
  }
  return Architecture(modes, {ArchKind::kInverseButterfly, 1},
                      std::move(layers));
}

Architecture build_kaleidoscope(int modes, int reps) {
  if (reps < 1) throw ValidationError("kaleidoscope repetitions must be >= 1");
  return Architecture(modes, {ArchKind::kKaleidoscope, reps},
                      kaleidoscope_layers(modes, reps));
}

Architecture build_from_label(int modes, const ArchLabel& label) {
  switch (label.kind) {
    case ArchKind::kButterfly:
      return build_butterfly(modes);
    case ArchKind::kInverseButterfly:
      return build_inverse_butterfly(modes);
    case ArchKind::kKaleidoscope:
      return build_kaleidoscope(modes, label.reps);
  }
  throw ValidationError("unknown architecture kind");
}

Architecture concatenate(const Architecture& first, const Architecture& second) {
  if (first.modes() != second.modes()) {
    throw DimensionError("concatenate: mode counts differ");
  }
  if (first.label().kind != ArchKind::kKaleidoscope ||
      second.label().kind != ArchKind::kKaleidoscope) {
    throw ValidationError("concatenate: only (B B*)^q architectures compose");
  }
  return build_kaleidoscope(first.modes(),
                            first.label().reps + second.label().reps);
}

Circuit::Circuit(Architecture arch, std::vector<Gate2> gates)
    : arch_(std::move(arch)), gates_(std::move(gates)) {
  if (gates_.size() != arch_.gate_count()) {
    throw DimensionError("circuit needs " + std::to_string(arch_.gate_count()) +
                         " gates, got " + std::to_string(gates_.size()));
  }
  for (const Gate2& g : gates_) require_unitary(g, "circuit gate");
}

Circuit Circuit::identity(Architecture arch) {
  std::vector<Gate2> gates(arch.gate_count(), Gate2::Identity());
  return Circuit(std::move(arch), std::move(gates));
}

Circuit random_local_circuit(const Architecture& arch, Rng& rng) {
  std::vector<Gate2> gates;
  gates.reserve(arch.gate_count());
  for (std::size_t i = 0; i < arch.gate_count(); ++i) gates.push_back(haar_gate(rng));
  return Circuit(arch, std::move(gates));
}

Matrix apply_circuit(const Circuit& circuit, Matrix x) {
  if (x.rows() != circuit.modes()) {
    throw DimensionError("apply_circuit: row count must equal mode count");
  }
  std::size_t g = 0;
  for (const auto& layer : circuit.architecture().layers()) {
    for (const GatePlacement& p : layer) {
      const Gate2& u = circuit.gates()[g++];
      const int a = p.mode_a - 1, b = p.mode_b - 1;
      for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const Complex xa = x(a, c), xb = x(b, c);
        x(a, c) = u(0, 0) * xa + u(0, 1) * xb;
        x(b, c) = u(1, 0) * xa + u(1, 1) * xb;
      }
    }
  }
  return x;
}

ComplexUnitary circuit_unitary(const Circuit& circuit) {
  const int m = circuit.modes();
  return ComplexUnitary(apply_circuit(circuit, Matrix::Identity(m, m)), 1e-9);
}

Circuit concatenate(const Circuit& first, const Circuit& second) {
  Architecture arch = concatenate(first.architecture(), second.architecture());
  std::vector<Gate2> gates = first.gates();
  gates.insert(gates.end(), second.gates().begin(), second.gates().end());
  return Circuit(std::move(arch), std::move(gates));
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  using nlohmann::json;
  const Architecture& arch = circuit.architecture();
  json layers = json::array();
  std::size_t g = 0;
  for (const auto& layer : arch.layers()) {
    json entries = json::array();
    for (const GatePlacement& p : layer) {
      const Gate2& u = circuit.gates()[g++];
      json gate = json::array();
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) gate.push_back({u(r, c).real(), u(r, c).imag()});
      }
      entries.push_back({{"a", p.mode_a}, {"b", p.mode_b}, {"gate", gate}});
    }
    layers.push_back(entries);
  }
  return {{"modes", arch.modes()}, {"label", arch.label().str()}, {"layers", layers}};
}

Circuit circuit_from_json(const nlohmann::json& doc) {
  try {
    const int modes = doc.at("modes").get<int>();
    const ArchLabel label = ArchLabel::parse(doc.at("label").get<std::string>());
    Architecture arch = build_from_label(modes, label);
    const auto& layers = doc.at("layers");
    if (!layers.is_array() || static_cast<int>(layers.size()) != arch.depth()) {
      throw ValidationError("circuit json: layer count does not match label");
    }
    std::vector<Gate2> gates;
    for (int l = 0; l < arch.depth(); ++l) {
      const auto& expected = arch.layers()[l];
      const auto& entries = layers[l];
      if (entries.size() != expected.size()) {
        throw ValidationError("circuit json: gate count mismatch in a layer");
      }
      for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& e = entries[i];
        if (e.at("a").get<int>() != expected[i].mode_a ||
            e.at("b").get<int>() != expected[i].mode_b) {
          throw ValidationError("circuit json: placement does not match label");
        }
        const auto& flat = e.at("gate");
        if (flat.size() != 4) throw ValidationError("circuit json: gate needs 4 entries");
        Gate2 u;
        for (int k = 0; k < 4; ++k) {
          u(k / 2, k % 2) = Complex(flat[k].at(0).get<double>(),
                                    flat[k].at(1).get<double>());
        }
        gates.push_back(u);
      }
    }
    return Circuit(std::move(arch), std::move(gates));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("circuit json: ") + e.what());
  }
}

}  // namespace bosonlab
