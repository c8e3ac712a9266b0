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

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "bosonlab/parallel.hpp"
#include "bosonlab/sampling.hpp"

namespace bosonlab {
namespace {

std::vector<std::uint64_t> tally(const Distribution& dist,
                                 const std::vector<OutcomeConfig>& draws) {
  std::map<OutcomeConfig, std::size_t> index;
  for (std::size_t i = 0; i < dist.size(); ++i) index[dist[i].first] = i;
  std::vector<std::uint64_t> counts(dist.size(), 0);
  for (const auto& s : draws) ++counts.at(index.at(s));
  return counts;
}

std::vector<double> probs(const Distribution& dist) {
  std::vector<double> p;
  for (const auto& e : dist) p.push_back(e.second);
  return p;
}

TEST(Ensembles, NamesRoundTrip) {
  for (Ensemble e : {Ensemble::kLocalRandom, Ensemble::kLocalRandomTimesPermutation,
                     Ensemble::kGlobalHaar}) {
    EXPECT_EQ(parse_ensemble(ensemble_name(e)), e);
  }
  EXPECT_THROW(parse_ensemble("global"), ValidationError);
}

TEST(Ensembles, ShapesAndUnitarity) {
  Rng rng(1);
  SampledUnitary local = sample_circuit({Ensemble::kLocalRandom, 4, 1}, rng);
  ASSERT_TRUE(local.local.has_value());
  EXPECT_EQ(local.local->gates().size(), 8u);
  EXPECT_LE(unitarity_defect(local.unitary.matrix()), 1e-10);
  SampledUnitary haar = sample_circuit({Ensemble::kGlobalHaar, 4, 1}, rng);
  EXPECT_FALSE(haar.local.has_value());
  EXPECT_LE(unitarity_defect(haar.unitary.matrix()), 1e-10);
  SampledUnitary lp = sample_circuit({Ensemble::kLocalRandomTimesPermutation, 8, 2}, rng);
  ASSERT_TRUE(lp.permutation.has_value());
  EXPECT_LE(max_abs_diff(lp.unitary.matrix(),
                         circuit_unitary(*lp.local).matrix() * lp.permutation->matrix()),
            1e-12);
}

TEST(Ensembles, PermutationFactorIsUniform) {
  Rng rng(2);
  std::map<std::vector<int>, std::uint64_t> counts;
  for (int i = 0; i < 100000; ++i) {
    ++counts[sample_circuit({Ensemble::kLocalRandomTimesPermutation, 4, 1}, rng)
                 .permutation->image()];
  }
  ASSERT_EQ(counts.size(), 24u);
  std::vector<std::uint64_t> obs;
  for (const auto& [k, v] : counts) obs.push_back(v);
  EXPECT_GT(chi_square_gof(obs, std::vector<double>(24, 1.0 / 24)).p_value, 0.01);
}

TEST(Ensembles, InputColumnsMatchFullUnitary) {
  Rng a(3), b(3);
  EnsembleSpec spec{Ensemble::kLocalRandomTimesPermutation, 8, 1};
  Matrix cols = sample_input_columns(spec, 3, a);
  SampledUnitary u = sample_circuit(spec, b);
  EXPECT_LE(max_abs_diff(cols, u.unitary.matrix().leftCols(3)), 1e-12);
}

TEST(CollisionFreeOutcome, UniformOverSubsets) {
  Rng rng(4);
  std::map<OutcomeConfig, std::uint64_t> counts;
  for (int i = 0; i < 100000; ++i) {
    OutcomeConfig s = sample_collision_free_outcome(4, 2, rng);
    ASSERT_TRUE(s.collision_free());
    ASSERT_EQ(s.total(), 2);
    ++counts[s];
  }
  ASSERT_EQ(counts.size(), 6u);
  std::vector<std::uint64_t> obs;
  for (const auto& [k, v] : counts) obs.push_back(v);
  EXPECT_GT(chi_square_gof(obs, std::vector<double>(6, 1.0 / 6)).p_value, 0.01);
  EXPECT_EQ(sample_collision_free_outcome(5, 5, rng).str(), "1|1|1|1|1");
  EXPECT_THROW(sample_collision_free_outcome(3, 4, rng), ValidationError);
}

TEST(BosonSampler, PermutationCircuitIsDeterministic) {
  Rng rng(5);
  Permutation p = sample_permutation(8, rng);
  ComplexUnitary u(p.matrix());
  OutcomeConfig t = OutcomeConfig::first_modes(8, 3);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(boson_sample(u, t, rng), t.permuted(p));
  ComplexUnitary id = ComplexUnitary::identity(8);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(boson_sample(id, t, rng), t);
}

TEST(BosonSampler, MatchesExactDistribution) {
  Rng rng(6);
  for (auto [m, n] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 3}}) {
    for (int c = 0; c < 3; ++c) {
      ComplexUnitary u = haar_unitary_global(m, rng);
      OutcomeConfig t = OutcomeConfig::first_modes(m, n);
      Distribution dist = full_distribution(u, t);
      std::vector<OutcomeConfig> draws;
      for (int i = 0; i < 20000; ++i) draws.push_back(boson_sample(u, t, rng));
      EXPECT_GT(chi_square_gof(tally(dist, draws), probs(dist)).p_value, 1e-3)
          << "M = " << m << ", N = " << n;
    }
  }
}

TEST(BosonSampler, DistributionSamplerMatches) {
  Rng rng(7);
  ComplexUnitary u = haar_unitary_global(5, rng);
  Distribution dist = full_distribution(u, OutcomeConfig::first_modes(5, 2));
  std::vector<OutcomeConfig> draws;
  for (int i = 0; i < 20000; ++i) draws.push_back(sample_from_distribution(dist, rng));
  EXPECT_GT(chi_square_gof(tally(dist, draws), probs(dist)).p_value, 1e-3);
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.modes = 16;
  cfg.photons = {1, 2, 3};
  cfg.reps = {1, 2};
  cfg.ensembles = {Ensemble::kLocalRandom, Ensemble::kGlobalHaar,
                   Ensemble::kLocalRandomTimesPermutation};
  cfg.circuits = 6;
  cfg.samples = 40;
  cfg.seed = 99;
  return cfg;
}

std::string csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  write_experiment_csv(out, records);
  return out.str();
}

TEST(Experiment, HeaderAndOnePhotonRatio) {
  std::vector<ExperimentRecord> recs = collision_ratio_experiment(small_config());
  std::string text = csv(recs);
  EXPECT_EQ(text.substr(0, text.find('\n')), "ensemble,M,N,q,circuit,seed,cf_count,samples,ratio");
  // 6 circuits x 3 photon numbers x (2 local q + 1 haar + 2 localperm q).
  EXPECT_EQ(recs.size(), 6u * 3u * 5u);
  for (const auto& r : recs) {
    EXPECT_GE(r.ratio, 0.0);
    EXPECT_LE(r.ratio, 1.0);
    EXPECT_EQ(r.ratio, static_cast<double>(r.cf_count) / r.samples);
    if (r.photons == 1) EXPECT_EQ(r.ratio, 1.0);
    if (r.ensemble == "haar") EXPECT_EQ(r.reps, 0);
  }
}

TEST(Experiment, DeterministicAcrossThreadCounts) {
  ExperimentConfig cfg = small_config();
  const std::string serial = csv(collision_ratio_experiment_serial(cfg));
  for (int threads : {1, 2, 4}) {
    configure_threads(threads);
    EXPECT_EQ(csv(collision_ratio_experiment(cfg)), serial) << threads << " threads";
  }
  configure_threads(std::nullopt);
}

TEST(Experiment, SummaryGroupsRecords) {
  std::vector<ExperimentSummary> sums = summarize(collision_ratio_experiment(small_config()));
  EXPECT_EQ(sums.size(), 15u);
  for (const auto& s : sums) EXPECT_EQ(s.ratio.count, 6u);
}

TEST(Birthday, BoundHoldsAtThirtyTwoModes) {
  Rng rng(8);
  BirthdayCheck b = birthday_bound_check(32, 3, 60, 100, 1, rng);
  EXPECT_DOUBLE_EQ(b.bound, 0.5625);
  EXPECT_TRUE(b.passed);
  EXPECT_THROW(birthday_bound_check(16, 3, 10, 10, 1, rng), ValidationError);
}

// 1 - C(M,N) / C(M+N-1,N) < N^2 / M whenever M >= 2 N^2, evaluated with
// exact binomials rather than the running product inside the library.
TEST(Birthday, CombinatorialInequalityExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 2 * n * n; m <= 256; ++m) {
      const double lhs = 1.0 - binomial(m, n) / binomial(m + n - 1, n);
      ASSERT_LT(lhs, static_cast<double>(n) * n / m) << m << ' ' << n;
      ASSERT_TRUE(uniform_collision_bound_holds(m, n));
    }
  }
}

TEST(BallsBins, MeansAndTail) {
  Rng rng(9);
  BallsBinsReport one = balls_bins_singletons(16, 1, 1000, 0.0, rng);
  EXPECT_EQ(one.singletons.mean, 1.0);
  EXPECT_EQ(one.singletons.stddev, 0.0);

  BallsBinsReport r = balls_bins_singletons(256, 16, 10000, 4.0, rng);
  EXPECT_NEAR(r.poisson_mean, 16 * std::exp(-1.0 / 16), 1e-12);
  EXPECT_NEAR(r.singletons.mean, r.exact_mean, 4 * r.singletons.std_error);
  EXPECT_NEAR(r.singletons.mean, r.poisson_mean,
              3 * r.singletons.std_error + 16.0 / 256.0);

  BallsBinsReport t = balls_bins_singletons(32, 16, 10000, 4.0, rng);
  EXPECT_LE(t.tail_empirical, t.chernoff_bound);
}

}  // namespace
}  // namespace bosonlab
