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

#include "bosonlab/gbs.hpp"

#include <cmath>
#include <map>

namespace bosonlab {

Gate2 tmsv_beam_splitter() {
  const double h = std::sqrt(0.5);
  Gate2 g;
  g << Complex(h, 0.0), Complex(0.0, h), Complex(0.0, h), Complex(h, 0.0);
  return g;
}

Circuit build_tmsv_embedding(const Circuit& c0) {
  const Architecture& a0 = c0.architecture();
  if (a0.label() != ArchLabel{ArchKind::kKaleidoscope, 1}) {
    throw ValidationError("tmsv embedding needs C0 on a single B B*");
  }
  const int m0 = a0.modes();
  Architecture arch = build_kaleidoscope(2 * m0, 1);

  // Layer l of C0 moves to layer l+1 on the doubled modes: a pair at
  // distance 2^{L-1} becomes a pair at distance 2^L between even modes.
  std::map<std::pair<int, int>, std::pair<int, Gate2>> placed;
  const std::vector<GatePlacement> p0 = a0.placements();
  for (std::size_t k = 0; k < p0.size(); ++k) {
    placed[{p0[k].layer + 1, 2 * p0[k].mode_a}] = {2 * p0[k].mode_b, c0.gates()[k]};
  }
  std::vector<Gate2> gates;
  std::size_t used = 0;
  for (const GatePlacement& p : arch.placements()) {
    if (p.layer == 1) {
      gates.push_back(tmsv_beam_splitter());
      continue;
    }
    auto it = placed.find({p.layer, p.mode_a});
    if (it != placed.end() && it->second.first == p.mode_b) {
      gates.push_back(it->second.second);
      ++used;
    } else {
      gates.push_back(Gate2::Identity());
    }
  }
  if (used != p0.size()) throw ValidationError("tmsv embedding: C0 placement mismatch");
  return Circuit(std::move(arch), std::move(gates));
}

Permutation herald_first_order(int m0) {
  std::vector<int> image(2 * m0);
  for (int y = 0; y < 2 * m0; ++y) image[y] = (y % 2) * m0 + y / 2;
  return Permutation(std::move(image));
}

GbsReductionCheck verify_gbs_reduction(const Circuit& c0, const OutcomeConfig& s0,
                                       double squeezing, std::optional<OutcomeConfig> t0) {
  const OutcomeConfig input = t0.value_or(s0);
  const int m0 = c0.modes();
  if (s0.modes() != m0 || input.modes() != m0) {
    throw DimensionError("verify_gbs_reduction: configuration length mismatch");
  }
  if (!s0.collision_free() || !input.collision_free()) {
    throw ValidationError("verify_gbs_reduction: s0 and t0 must be collision-free");
  }
  if (s0.total() != input.total()) throw ValidationError("verify_gbs_reduction: |s0| != |t0|");

  const Circuit c = build_tmsv_embedding(c0);
  GbsReductionCheck out;
  out.circuit_outcome = input.concat(s0).permuted(herald_first_order(m0).inverse());
  out.lhs = gbs_probability(circuit_unitary(c), out.circuit_outcome, GbsParams{squeezing});
  const int n0 = s0.total();
  out.rhs = std::pow(std::tanh(squeezing), 2 * n0) / std::pow(std::cosh(squeezing), 2 * m0) *
            output_probability(circuit_unitary(c0), s0, input);
  out.abs_diff = std::abs(out.lhs - out.rhs);
  return out;
}

namespace {

using Poly = std::map<std::vector<int>, Complex>;

// Multiplies by sum_j coeff_j y_j, dropping terms above max_degree.
Poly times_linear(const Poly& p, const std::vector<Complex>& coeff, int max_degree) {
  Poly out;
  for (const auto& [mono, c] : p) {
    int degree = 0;
    for (int e : mono) degree += e;
    if (degree + 1 > max_degree) continue;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      if (coeff[j] == Complex(0.0)) continue;
      std::vector<int> next = mono;
      ++next[j];
      out[next] += c * coeff[j];
    }
  }
  return out;
}

Poly multiply(const Poly& a, const Poly& b, int max_degree) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    int da = 0;
    for (int e : ma) da += e;
    for (const auto& [mb, cb] : b) {
      int db = 0;
      for (int e : mb) db += e;
      if (da + db > max_degree) continue;
      std::vector<int> mono = ma;
      for (std::size_t j = 0; j < mono.size(); ++j) mono[j] += mb[j];
      out[mono] += ca * cb;
    }
  }
  return out;
}

}  // namespace

FockGbsResult truncated_fock_gbs(const ComplexUnitary& c, double squeezing, int cutoff) {
  if (!(squeezing > 0.0)) throw ValidationError("truncated_fock_gbs: r must be > 0");
  if (cutoff < 0 || cutoff > 16) throw ValidationError("truncated_fock_gbs: cutoff in [0, 16]");
  const int m = c.dim();
  const double th = std::tanh(squeezing);
  const double norm = 1.0 / std::sqrt(std::cosh(squeezing));

  // Squeezed vacuum as a polynomial in the creation operator:
  // (1/sqrt(cosh r)) sum_k (tanh r / 2)^k / k! x^{2k}.
  std::vector<double> f_coeff;
  for (int k = 0; 2 * k <= cutoff; ++k) {
    f_coeff.push_back(norm * std::pow(th / 2.0, k) / std::tgamma(k + 1.0));
  }

  Poly total{{std::vector<int>(m, 0), Complex(1.0)}};
  for (int i = 0; i < m; ++i) {
    // a_i^dagger -> sum_j C_{ji} a_j^dagger
    std::vector<Complex> image(m);
    for (int j = 0; j < m; ++j) image[j] = c(j, i);
    Poly factor;
    Poly power{{std::vector<int>(m, 0), Complex(1.0)}};
    for (std::size_t k = 0; k < f_coeff.size(); ++k) {
      for (const auto& [mono, v] : power) factor[mono] += f_coeff[k] * v;
      power = times_linear(times_linear(power, image, cutoff), image, cutoff);
    }
    total = multiply(total, factor, cutoff);
  }

  FockGbsResult out;
  out.cutoff = cutoff;
  for (int n = 0; n <= cutoff; ++n) {
    for (const OutcomeConfig& s : enumerate_outcomes(m, n)) {
      auto it = total.find(s.occupation());
      double p = 0.0;
      if (it != total.end()) {
        double fact = 1.0;
        for (int v : s.occupation()) fact *= std::tgamma(v + 1.0);
        p = std::norm(it->second) * fact;
      }
      out.probabilities.emplace_back(s, p);
    }
  }
  double kept = 0.0;
  for (int k = 0; 2 * k <= cutoff; ++k) {
    // P(2k) = tanh^{2k} r (2k)! / (4^k (k!)^2 cosh r)
    kept += std::pow(th, 2 * k) * std::tgamma(2 * k + 1.0) /
            (std::pow(4.0, k) * std::pow(std::tgamma(k + 1.0), 2) * std::cosh(squeezing));
  }
  out.truncation_bound = std::max(0.0, 1.0 - kept);
  return out;
}

double fock_probability(const FockGbsResult& result, const OutcomeConfig& s) {
  if (s.total() > result.cutoff) {
    throw ValidationError("outcome has more photons than the Fock cutoff resolves exactly");
  }
  for (const auto& [cfg, p] : result.probabilities) {
    if (cfg == s) return p;
  }
  throw DimensionError("outcome does not match the simulated mode count");
}

BlowupFactor blowup_factor(int m0, int n0, double squeezing) {
  if (m0 < 1 || n0 < 0 || n0 > m0) throw ValidationError("blowup_factor: need 0 <= N0 <= M0");
  if (!(squeezing > 0.0)) throw ValidationError("blowup_factor: r must be > 0");
  BlowupFactor out;
  out.log2_value = 2.0 * m0 * std::log2(std::cosh(squeezing)) -
                   2.0 * n0 * std::log2(std::tanh(squeezing));
  out.value = std::exp2(out.log2_value);
  const double m = 2.0 * m0, n = 2.0 * n0;
  const double sh = std::sinh(squeezing);
  if (n0 > 0 && std::abs(m * sh * sh - n) <= 1e-10 * n) {
    out.closed_form = std::pow((m + n) / m, m0 + n0) * std::pow(m / n, n0);
  }
  return out;
}

}  // namespace bosonlab
