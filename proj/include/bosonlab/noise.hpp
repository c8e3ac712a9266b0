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

#ifndef BOSONLAB_NOISE_HPP_
#define BOSONLAB_NOISE_HPP_

#include <cstdint>
#include <vector>

#include "bosonlab/architecture.hpp"
#include "bosonlab/cayley.hpp"
#include "bosonlab/probability.hpp"

namespace bosonlab {

struct LossySample {
  OutcomeConfig outcome;
  int lost_photons = 0;
  bool no_loss = true;  // no channel fired
};

// Pure-state trajectory in Fock space. After each gate, its two channels
// fire in order (first on mode_a, then on mode_b); a channel with rate rho
// applies the normalised annihilation operator with probability rho. A
// channel that fires on an empty mode leaves the state alone but still
// clears the no-loss flag. Channels with rate 0 draw no random numbers, so
// a zero-loss model reproduces sample_fock exactly.
LossySample lossy_sample(const Circuit& circuit, const OutcomeConfig& t,
                         const LossModel& loss, Rng& rng);
// Ideal sampler on the same state-vector machinery.
OutcomeConfig sample_fock(const Circuit& circuit, const OutcomeConfig& t, Rng& rng);

// Sample i uses Rng(split(handle, i)); the parallel and serial versions give
// identical output.
std::vector<LossySample> lossy_sample_batch(const Circuit& circuit, const OutcomeConfig& t,
                                            const LossModel& loss, int samples,
                                            const RngHandle& handle);
std::vector<LossySample> lossy_sample_batch_serial(const Circuit& circuit,
                                                   const OutcomeConfig& t,
                                                   const LossModel& loss, int samples,
                                                   const RngHandle& handle);

// prod_i (1 - rho_i)
double no_loss_probability(const LossModel& loss);

// Pr[outcome s and no channel fired] = p_s(C) prod_i (1 - rho_i).
double lossy_outcome_probability(const ComplexUnitary& c, const OutcomeConfig& s,
                                 const OutcomeConfig& t, const LossModel& loss);

}  // namespace bosonlab

#endif  // BOSONLAB_NOISE_HPP_
