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

#include "bosonlab/noise.hpp"

#include <cmath>
#include <unordered_map>

namespace bosonlab {
namespace {

// All occupation vectors of M modes with at most N photons.
class FockSpace {
 public:
  FockSpace(int modes, int max_photons) : modes_(modes), base_(max_photons + 1) {
    if (binomial(modes + max_photons, max_photons) > 2e6) {
      throw CapacityError("Fock space above 2e6 states");
    }
    std::uint64_t w = 1;
    for (int i = 0; i < modes; ++i) {
      weights_.push_back(w);
      w *= static_cast<std::uint64_t>(base_);
    }
    std::vector<int> occ(modes, 0);
    fill(0, max_photons, occ);
  }

  std::size_t size() const { return states_.size(); }
  const std::vector<int>& state(std::size_t i) const { return states_[i]; }
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  std::uint64_t weight(int mode) const { return weights_[mode]; }
  std::size_t index(std::uint64_t code) const { return lookup_.at(code); }
  std::size_t index(const std::vector<int>& occ) const {
    std::uint64_t c = 0;
    for (int i = 0; i < modes_; ++i) c += weights_[i] * static_cast<std::uint64_t>(occ[i]);
    return index(c);
  }

 private:
  void fill(int mode, int remaining, std::vector<int>& occ) {
    if (mode == modes_) {
      std::uint64_t c = 0;
      for (int i = 0; i < modes_; ++i) c += weights_[i] * static_cast<std::uint64_t>(occ[i]);
      lookup_[c] = states_.size();
      states_.push_back(occ);
      codes_.push_back(c);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      occ[mode] = k;
      fill(mode + 1, remaining - k, occ);
    }
    occ[mode] = 0;
  }

  int modes_;
  int base_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::vector<int>> states_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

Complex ipow(Complex z, int n) {
  Complex out(1.0);
  for (int i = 0; i < n; ++i) out *= z;
  return out;
}

// T_k(m_a, n_a): amplitude for |n_a, k - n_a> -> |m_a, k - m_a> on a pair.
std::vector<Matrix> pair_transfers(const Gate2& u, int max_photons) {
  std::vector<Matrix> out;
  for (int k = 0; k <= max_photons; ++k) {
    Matrix t = Matrix::Zero(k + 1, k + 1);
    for (int na = 0; na <= k; ++na) {
      const int nb = k - na;
      // (u00 x + u10 y)^na (u01 x + u11 y)^nb, coefficient of x^ma y^(k-ma)
      for (int i = 0; i <= na; ++i) {
        const Complex left = binomial(na, i) * ipow(u(0, 0), i) * ipow(u(1, 0), na - i);
        for (int j = 0; j <= nb; ++j) {
          const Complex right =
              binomial(nb, j) * ipow(u(0, 1), j) * ipow(u(1, 1), nb - j);
          t(i + j, na) += left * right;
        }
      }
      for (int ma = 0; ma <= k; ++ma) {
        t(ma, na) *= std::sqrt(std::tgamma(ma + 1.0) * std::tgamma(k - ma + 1.0) /
                               (std::tgamma(na + 1.0) * std::tgamma(nb + 1.0)));
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

class Trajectory {
 public:
  Trajectory(const Circuit& circuit, const OutcomeConfig& t)
      : t_(t), space_(circuit.modes(), t.total()) {
    if (t.modes() != circuit.modes()) throw DimensionError("input has wrong length");
    placements_ = circuit.architecture().placements();
    for (const Gate2& g : circuit.gates()) transfers_.push_back(pair_transfers(g, t.total()));
  }

  LossySample run(const LossModel* loss, Rng& rng) const {
    std::vector<Complex> amp(space_.size(), Complex(0.0));
    amp[space_.index(t_.occupation())] = 1.0;
    bool no_loss = true;
    for (std::size_t g = 0; g < placements_.size(); ++g) {
      const int a = placements_[g].mode_a - 1, b = placements_[g].mode_b - 1;
      amp = apply_gate(amp, a, b, transfers_[g]);
      if (!loss) continue;
      for (int ch = 0; ch < 2; ++ch) {
        const double rho = loss->rates[2 * g + ch];
        if (rho <= 0.0) continue;
        if (rng.uniform() < rho) {
          no_loss = false;
          annihilate(amp, ch == 0 ? a : b);
        }
      }
    }
    const std::vector<int>& occ = space_.state(draw(amp, rng));
    LossySample out{OutcomeConfig(occ), 0, no_loss};
    out.lost_photons = t_.total() - out.outcome.total();
    return out;
  }

 private:
  std::vector<Complex> apply_gate(const std::vector<Complex>& amp, int a, int b,
                                  const std::vector<Matrix>& transfer) const {
    std::vector<Complex> out(amp.size(), Complex(0.0));
    const auto wa = static_cast<std::int64_t>(space_.weight(a));
    const auto wb = static_cast<std::int64_t>(space_.weight(b));
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (amp[i] == Complex(0.0)) continue;
      const std::vector<int>& occ = space_.state(i);
      const int na = occ[a], nb = occ[b], k = na + nb;
      const auto base = static_cast<std::int64_t>(space_.code(i)) - na * wa - nb * wb;
      for (int ma = 0; ma <= k; ++ma) {
        const Complex w = transfer[k](ma, na);
        if (w == Complex(0.0)) continue;
        const auto code = static_cast<std::uint64_t>(base + ma * wa + (k - ma) * wb);
        out[space_.index(code)] += w * amp[i];
      }
    }
    return out;
  }

  void annihilate(std::vector<Complex>& amp, int mode) const {
    std::vector<Complex> out(amp.size(), Complex(0.0));
    double norm = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
      const int n = space_.state(i)[mode];
      if (n == 0 || amp[i] == Complex(0.0)) continue;
      const std::size_t j = space_.index(space_.code(i) - space_.weight(mode));
      out[j] += std::sqrt(static_cast<double>(n)) * amp[i];
    }
    for (const Complex& z : out) norm += std::norm(z);
    if (norm == 0.0) return;
    const double scale = 1.0 / std::sqrt(norm);
    for (Complex& z : out) z *= scale;
    amp = std::move(out);
  }

  static std::size_t draw(const std::vector<Complex>& amp, Rng& rng) {
    double total = 0.0;
    for (const Complex& z : amp) total += std::norm(z);
    const double target = rng.uniform() * total;
    double running = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
      const double p = std::norm(amp[i]);
      if (p > 0.0) last = i;
      running += p;
      if (target < running) return i;
    }
    return last;
  }

  OutcomeConfig t_;
  FockSpace space_;
  std::vector<GatePlacement> placements_;
  std::vector<std::vector<Matrix>> transfers_;
};

}  // namespace

LossySample lossy_sample(const Circuit& circuit, const OutcomeConfig& t,
                         const LossModel& loss, Rng& rng) {
  loss.validate(circuit.gates().size());
  return Trajectory(circuit, t).run(&loss, rng);
}

OutcomeConfig sample_fock(const Circuit& circuit, const OutcomeConfig& t, Rng& rng) {
  return Trajectory(circuit, t).run(nullptr, rng).outcome;
}

namespace {

std::vector<LossySample> batch(const Circuit& circuit, const OutcomeConfig& t,
                               const LossModel& loss, int samples, const RngHandle& handle,
                               bool parallel) {
  loss.validate(circuit.gates().size());
  if (samples < 0) throw ValidationError("sample count must be non-negative");
  const Trajectory traj(circuit, t);
  std::vector<LossySample> out(samples, LossySample{OutcomeConfig(std::vector<int>{}), 0, true});
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < samples; ++i) {
    Rng rng(split(handle, static_cast<std::uint64_t>(i)));
    out[i] = traj.run(&loss, rng);
  }
  return out;
}

}  // namespace

std::vector<LossySample> lossy_sample_batch(const Circuit& circuit, const OutcomeConfig& t,
                                            const LossModel& loss, int samples,
                                            const RngHandle& handle) {
  return batch(circuit, t, loss, samples, handle, true);
}

std::vector<LossySample> lossy_sample_batch_serial(const Circuit& circuit,
                                                   const OutcomeConfig& t,
                                                   const LossModel& loss, int samples,
                                                   const RngHandle& handle) {
  return batch(circuit, t, loss, samples, handle, false);
}

double no_loss_probability(const LossModel& loss) { return loss.no_loss_probability(); }

double lossy_outcome_probability(const ComplexUnitary& c, const OutcomeConfig& s,
                                 const OutcomeConfig& t, const LossModel& loss) {
  if (s.total() != t.total()) {
    throw ValidationError("lossy_outcome_probability: |s| must equal |t|");
  }
  return output_probability(c, s, t) * loss.no_loss_probability();
}

}  // namespace bosonlab
