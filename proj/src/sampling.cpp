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
#include <bit>
#include <numeric>

#include "bosonlab/sampling.hpp"

namespace bosonlab {

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::kLocalRandom:
      return "local";
    case Ensemble::kLocalRandomTimesPermutation:
      return "localperm";
    case Ensemble::kGlobalHaar:
      return "haar";
  }
  return "?";
}

Ensemble parse_ensemble(const std::string& name) {
  if (name == "local") return Ensemble::kLocalRandom;
  if (name == "localperm") return Ensemble::kLocalRandomTimesPermutation;
  if (name == "haar") return Ensemble::kGlobalHaar;
  throw ValidationError("unknown ensemble '" + name + "' (local, localperm, haar)");
}

SampledUnitary sample_circuit(const EnsembleSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case Ensemble::kLocalRandom: {
      Circuit c = random_local_circuit(build_kaleidoscope(spec.modes, spec.reps), rng);
      ComplexUnitary u = circuit_unitary(c);
      return {std::move(u), std::move(c), std::nullopt};
    }
    case Ensemble::kLocalRandomTimesPermutation: {
      Circuit c = random_local_circuit(build_kaleidoscope(spec.modes, spec.reps), rng);
      Permutation p = sample_permutation(spec.modes, rng);
      ComplexUnitary u(apply_circuit(c, p.matrix()), 1e-9);
      return {std::move(u), std::move(c), std::move(p)};
    }
    case Ensemble::kGlobalHaar:
      return {haar_unitary_global(spec.modes, rng), std::nullopt, std::nullopt};
  }
  throw ValidationError("unknown ensemble");
}

Matrix sample_input_columns(const EnsembleSpec& spec, int k, Rng& rng) {
  if (k < 0 || k > spec.modes) throw DimensionError("sample_input_columns: bad k");
  switch (spec.kind) {
    case Ensemble::kLocalRandom: {
      const Circuit c = random_local_circuit(build_kaleidoscope(spec.modes, spec.reps), rng);
      return apply_circuit(c, Matrix::Identity(spec.modes, k));
    }
    case Ensemble::kLocalRandomTimesPermutation: {
      const Circuit c = random_local_circuit(build_kaleidoscope(spec.modes, spec.reps), rng);
      const Permutation p = sample_permutation(spec.modes, rng);
      return apply_circuit(c, p.matrix().leftCols(k));
    }
    case Ensemble::kGlobalHaar:
      return haar_columns(spec.modes, k, rng);
  }
  throw ValidationError("unknown ensemble");
}

OutcomeConfig sample_collision_free_outcome(int modes, int photons, Rng& rng) {
  if (photons < 0 || photons > modes) {
    throw ValidationError("collision-free outcome needs 0 <= N <= M");
  }
  std::vector<int> pool(modes);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> occ(modes, 0);
  for (int i = 0; i < photons; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(modes - i)));
    std::swap(pool[i], pool[j]);
    occ[pool[i]] = 1;
  }
  return OutcomeConfig(std::move(occ));
}

namespace {

// Permanents of the k minors of the (k-1) x k matrix b obtained by deleting
// one column, from one Gray-code sweep over column subsets.
std::vector<Complex> column_deleted_permanents(const Matrix& b) {
  const int n = static_cast<int>(b.rows());
  const int k = static_cast<int>(b.cols());
  std::vector<Complex> acc(k, Complex(0.0));
  std::vector<Complex> rowsum(n, Complex(0.0));
  std::uint64_t subset = 0;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t step = 0; step < count; ++step) {
    if (step > 0) {
      const int j = std::countr_zero(step);
      const bool adding = ((subset >> j) & 1) == 0;
      subset ^= std::uint64_t{1} << j;
      for (int r = 0; r < n; ++r) rowsum[r] += adding ? b(r, j) : -b(r, j);
    }
    Complex prod(1.0);
    for (int r = 0; r < n; ++r) prod *= rowsum[r];
    if (std::popcount(subset) & 1) prod = -prod;
    for (int l = 0; l < k; ++l) {
      if (!((subset >> l) & 1)) acc[l] += prod;
    }
  }
  if (n & 1) {
    for (Complex& v : acc) v = -v;
  }
  return acc;
}

int draw_index(const std::vector<double>& weights, Rng& rng) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double target = rng.uniform() * total;
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    running += weights[i];
    if (target < running) return static_cast<int>(i);
  }
  // Rounding at the top end: fall back to the last non-zero weight.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return static_cast<int>(i);
  }
  return 0;
}

}  // namespace

OutcomeConfig boson_sample_columns(const Matrix& columns, Rng& rng) {
  const int modes = static_cast<int>(columns.rows());
  const int photons = static_cast<int>(columns.cols());
  if (photons > kMaxPermanentOrder) throw CapacityError("boson_sample: too many photons");
  if (modes > 512) throw CapacityError("boson_sample: at most 512 modes");

  // Photon labels are exchangeable; a random column order is what makes the
  // one-photon-at-a-time marginals come out right.
  std::vector<int> order(photons);
  std::iota(order.begin(), order.end(), 0);
  for (int i = photons - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  Matrix a(modes, photons);
  for (int j = 0; j < photons; ++j) a.col(j) = columns.col(order[j]);

  std::vector<int> rows;
  std::vector<double> weights(modes);
  for (int k = 1; k <= photons; ++k) {
    Matrix b(k - 1, k);
    for (int r = 0; r < k - 1; ++r) b.row(r) = a.row(rows[r]).head(k);
    const std::vector<Complex> minors = column_deleted_permanents(b);
    for (int i = 0; i < modes; ++i) {
      Complex amp(0.0);
      for (int l = 0; l < k; ++l) amp += a(i, l) * minors[l];
      weights[i] = std::norm(amp);
    }
    rows.push_back(draw_index(weights, rng));
  }
  std::vector<int> occ(modes, 0);
  for (int r : rows) ++occ[r];
  return OutcomeConfig(std::move(occ));
}

OutcomeConfig boson_sample(const ComplexUnitary& c, const OutcomeConfig& t, Rng& rng) {
  if (t.modes() != c.dim()) throw DimensionError("boson_sample: t has wrong length");
  if (!t.collision_free()) throw ValidationError("boson_sample: input must be collision-free");
  const std::vector<int> inputs = t.mode_list();
  Matrix cols(c.dim(), static_cast<Eigen::Index>(inputs.size()));
  for (std::size_t j = 0; j < inputs.size(); ++j) cols.col(j) = c.matrix().col(inputs[j]);
  return boson_sample_columns(cols, rng);
}

OutcomeConfig sample_from_distribution(const Distribution& dist, Rng& rng) {
  std::vector<double> weights;
  weights.reserve(dist.size());
  for (const auto& entry : dist) weights.push_back(entry.second);
  return dist[draw_index(weights, rng)].first;
}

BirthdayCheck birthday_bound_check(int modes, int photons, int circuits, int samples,
                                   int reps, Rng& rng) {
  if (modes < 2 * photons * photons) {
    throw ValidationError("birthday bound needs M >= 2 N^2");
  }
  if (circuits < 2 || samples < 1) throw ValidationError("birthday bound: too few draws");
  const Architecture arch = build_kaleidoscope(modes, reps);
  std::vector<double> freq;
  freq.reserve(circuits);
  for (int c = 0; c < circuits; ++c) {
    const Circuit v = random_local_circuit(arch, rng);
    const Permutation p = sample_permutation(modes, rng);
    const Matrix cols = apply_circuit(v, p.matrix().leftCols(photons));
    int collisions = 0;
    for (int s = 0; s < samples; ++s) {
      if (!boson_sample_columns(cols, rng).collision_free()) ++collisions;
    }
    freq.push_back(static_cast<double>(collisions) / samples);
  }
  const MeanEstimate est = estimate_mean(freq);
  BirthdayCheck out;
  out.collision_probability = est.mean;
  out.std_error = est.std_error;
  out.bound = 2.0 * photons * photons / modes;
  out.passed = est.mean <= out.bound + 3.0 * est.std_error;
  return out;
}

bool uniform_collision_bound_holds(int modes, int photons) {
  double free_fraction = 1.0;
  for (int k = 0; k < photons; ++k) {
    free_fraction *= static_cast<double>(modes - k) / (modes + photons - 1 - k);
  }
  return 1.0 - free_fraction < static_cast<double>(photons) * photons / modes;
}

BallsBinsReport balls_bins_singletons(int modes, int balls, int trials,
                                      double threshold, Rng& rng) {
  if (modes < 1 || balls < 0 || trials < 2) throw ValidationError("balls_bins: bad sizes");
  std::vector<double> singles;
  singles.reserve(trials);
  std::vector<int> bins(modes);
  int below = 0;
  for (int t = 0; t < trials; ++t) {
    std::fill(bins.begin(), bins.end(), 0);
    for (int b = 0; b < balls; ++b) ++bins[rng.below(static_cast<std::uint64_t>(modes))];
    int count = 0;
    for (int v : bins) count += (v == 1);
    singles.push_back(count);
    if (count <= threshold) ++below;
  }
  BallsBinsReport out;
  out.singletons = estimate_mean(singles);
  out.poisson_mean = balls * std::exp(-static_cast<double>(balls) / modes);
  out.exact_mean = balls * std::pow(1.0 - 1.0 / modes, balls - 1);
  out.threshold = threshold;
  out.tail_empirical = static_cast<double>(below) / trials;
  if (threshold < out.poisson_mean) {
    const double eps = 1.0 - threshold / out.poisson_mean;
    out.chernoff_bound = std::exp(-0.5 * eps * eps * out.poisson_mean);
  }
  return out;
}

}  // namespace bosonlab
