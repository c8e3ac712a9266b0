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

#ifndef BOSONLAB_SAMPLING_HPP_
#define BOSONLAB_SAMPLING_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bosonlab/architecture.hpp"
#include "bosonlab/probability.hpp"
#include "bosonlab/routing.hpp"
#include "bosonlab/stats.hpp"

namespace bosonlab {

enum class Ensemble { kLocalRandom, kLocalRandomTimesPermutation, kGlobalHaar };

// CLI names: "local", "localperm", "haar".
std::string ensemble_name(Ensemble e);
Ensemble parse_ensemble(const std::string& name);

struct EnsembleSpec {
  Ensemble kind = Ensemble::kLocalRandom;
  int modes = 0;
  int reps = 1;  // q of (B B*)^q for the local ensembles
};

// A draw from an ensemble. For kLocalRandomTimesPermutation the unitary is
// U(local) * P, with the permutation acting first.
struct SampledUnitary {
  ComplexUnitary unitary;
  std::optional<Circuit> local;
  std::optional<Permutation> permutation;
};

SampledUnitary sample_circuit(const EnsembleSpec& spec, Rng& rng);

// First k columns of a fresh ensemble draw; this is all the sampler needs.
Matrix sample_input_columns(const EnsembleSpec& spec, int k, Rng& rng);

// Uniformly random collision-free configuration with n photons.
OutcomeConfig sample_collision_free_outcome(int modes, int photons, Rng& rng);

// Exact sampling from the output distribution of `columns` (the columns of
// the unitary for the occupied input modes), Clifford-Clifford style: one
// photon at a time, with all column-deleted minor permanents taken from a
// single Gray-code sweep.
OutcomeConfig boson_sample_columns(const Matrix& columns, Rng& rng);
OutcomeConfig boson_sample(const ComplexUnitary& c, const OutcomeConfig& t, Rng& rng);

// Inverse-CDF draw from an explicit distribution.
OutcomeConfig sample_from_distribution(const Distribution& dist, Rng& rng);

struct ExperimentConfig {
  int modes = 64;
  std::vector<int> photons{4, 6, 8};
  std::vector<int> reps{1, 2, 3};
  std::vector<Ensemble> ensembles{Ensemble::kLocalRandom, Ensemble::kGlobalHaar};
  int circuits = 100;
  int samples = 200;
  std::uint64_t seed = 1;
};

struct ExperimentRecord {
  std::string ensemble;
  int modes = 0;
  int photons = 0;
  int reps = 0;  // 0 for the global Haar ensemble
  int circuit = 0;
  std::uint64_t seed = 0;
  int cf_count = 0;
  int samples = 0;
  double ratio = 0.0;
  double wall_seconds = 0.0;
};

// One task per (ensemble, q, circuit index), seeded with split(seed, task).
// Every photon number is sampled from the same circuit. Records are sorted
// by (ensemble, q, N, circuit).
std::vector<ExperimentRecord> collision_ratio_experiment(const ExperimentConfig& config);
std::vector<ExperimentRecord> collision_ratio_experiment_serial(
    const ExperimentConfig& config);

// ensemble,M,N,q,circuit,seed,cf_count,samples,ratio
void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

struct ExperimentSummary {
  std::string ensemble;
  int reps = 0;
  int photons = 0;
  MeanEstimate ratio;
};

std::vector<ExperimentSummary> summarize(const std::vector<ExperimentRecord>& records);

struct BirthdayCheck {
  double collision_probability = 0.0;
  double std_error = 0.0;
  double bound = 0.0;  // 2 N^2 / M
  bool passed = false;
};

// Collision frequency under U = V P with V local random on (B B*)^q and P a
// uniform permutation. Requires M >= 2 N^2.
BirthdayCheck birthday_bound_check(int modes, int photons, int circuits, int samples,
                                   int reps, Rng& rng);

// 1 - C(M,N)/C(M+N-1,N) < N^2/M, the same bound for uniform configurations.
bool uniform_collision_bound_holds(int modes, int photons);

struct BallsBinsReport {
  MeanEstimate singletons;
  double poisson_mean = 0.0;  // N e^{-N/M}
  double exact_mean = 0.0;    // N (1 - 1/M)^{N-1}
  double threshold = 0.0;
  double tail_empirical = 0.0;  // Pr[singletons <= threshold]
  double chernoff_bound = 1.0;
};

BallsBinsReport balls_bins_singletons(int modes, int balls, int trials,
                                      double threshold, Rng& rng);

}  // namespace bosonlab

#endif  // BOSONLAB_SAMPLING_HPP_
