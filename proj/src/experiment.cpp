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
#include <chrono>
#include <iomanip>
#include <ostream>
#include <tuple>

#include "bosonlab/sampling.hpp"

namespace bosonlab {
namespace {

struct Task {
  int ensemble_rank;
  Ensemble kind;
  int reps;
  int circuit;
  std::uint64_t index;
};

std::vector<Task> plan(const ExperimentConfig& config) {
  if (config.photons.empty() || config.ensembles.empty()) {
    throw ValidationError("experiment needs photon numbers and ensembles");
  }
  for (int n : config.photons) {
    if (n < 1 || n > config.modes) throw ValidationError("photon number out of range");
  }
  if (config.circuits < 1 || config.samples < 1) {
    throw ValidationError("experiment needs at least one circuit and sample");
  }
  std::vector<Task> tasks;
  std::uint64_t index = 0;
  for (std::size_t e = 0; e < config.ensembles.size(); ++e) {
    const Ensemble kind = config.ensembles[e];
    std::vector<int> reps = config.reps;
    if (kind == Ensemble::kGlobalHaar) reps = {0};
    for (int q : reps) {
      if (kind != Ensemble::kGlobalHaar && q < 1) throw ValidationError("q must be >= 1");
      for (int c = 0; c < config.circuits; ++c) {
        tasks.push_back({static_cast<int>(e), kind, q, c, index++});
      }
    }
  }
  return tasks;
}

std::vector<ExperimentRecord> run_task(const ExperimentConfig& config, const Task& task) {
  const RngHandle handle = split(RngHandle{config.seed}, task.index);
  Rng rng(handle);
  const int max_photons = *std::max_element(config.photons.begin(), config.photons.end());

  const auto start = std::chrono::steady_clock::now();
  const Matrix columns = sample_input_columns(
      EnsembleSpec{task.kind, config.modes, std::max(task.reps, 1)}, max_photons, rng);
  std::vector<ExperimentRecord> out;
  for (int n : config.photons) {
    const Matrix cols = columns.leftCols(n);
    int cf = 0;
    for (int s = 0; s < config.samples; ++s) {
      if (boson_sample_columns(cols, rng).collision_free()) ++cf;
    }
    ExperimentRecord rec;
    rec.ensemble = ensemble_name(task.kind);
    rec.modes = config.modes;
    rec.photons = n;
    rec.reps = task.reps;
    rec.circuit = task.circuit;
    rec.seed = handle.seed;
    rec.cf_count = cf;
    rec.samples = config.samples;
    rec.ratio = static_cast<double>(cf) / config.samples;
    out.push_back(rec);
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& rec : out) rec.wall_seconds = elapsed;
  return out;
}

std::vector<ExperimentRecord> collect(const std::vector<Task>& tasks,
                                      std::vector<std::vector<ExperimentRecord>>& slots) {
  std::vector<std::tuple<int, int, int, int, ExperimentRecord>> keyed;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    for (const auto& rec : slots[t]) {
      keyed.emplace_back(tasks[t].ensemble_rank, tasks[t].reps, rec.photons, rec.circuit, rec);
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a), std::get<3>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b), std::get<3>(b));
  });
  std::vector<ExperimentRecord> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(std::get<4>(k)));
  return out;
}

}  // namespace

std::vector<ExperimentRecord> collision_ratio_experiment(const ExperimentConfig& config) {
  const std::vector<Task> tasks = plan(config);
  std::vector<std::vector<ExperimentRecord>> slots(tasks.size());
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < n; ++t) slots[t] = run_task(config, tasks[t]);
  return collect(tasks, slots);
}

std::vector<ExperimentRecord> collision_ratio_experiment_serial(
    const ExperimentConfig& config) {
  const std::vector<Task> tasks = plan(config);
  std::vector<std::vector<ExperimentRecord>> slots(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) slots[t] = run_task(config, tasks[t]);
  return collect(tasks, slots);
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "ensemble,M,N,q,circuit,seed,cf_count,samples,ratio\n";
  out << std::setprecision(10);
  for (const auto& r : records) {
    out << r.ensemble << ',' << r.modes << ',' << r.photons << ',' << r.reps << ','
        << r.circuit << ',' << r.seed << ',' << r.cf_count << ',' << r.samples << ','
        << r.ratio << '\n';
  }
}

std::vector<ExperimentSummary> summarize(const std::vector<ExperimentRecord>& records) {
  std::vector<ExperimentSummary> out;
  std::vector<double> values;
  for (std::size_t i = 0; i < records.size(); ++i) {
    values.push_back(records[i].ratio);
    const bool last = i + 1 == records.size() ||
                      records[i + 1].ensemble != records[i].ensemble ||
                      records[i + 1].reps != records[i].reps ||
                      records[i + 1].photons != records[i].photons;
    if (last) {
      out.push_back({records[i].ensemble, records[i].reps, records[i].photons,
                     estimate_mean(values)});
      values.clear();
    }
  }
  return out;
}

}  // namespace bosonlab
