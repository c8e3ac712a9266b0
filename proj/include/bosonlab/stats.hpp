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

#ifndef BOSONLAB_STATS_HPP_
#define BOSONLAB_STATS_HPP_

#include <cstdint>
#include <vector>

namespace bosonlab {

struct TestResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

// Pearson goodness of fit. Cells whose expected count is below min_expected
// are pooled into one cell before the statistic is formed.
TestResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                          const std::vector<double>& probabilities,
                          double min_expected = 5.0);

// Two-sample homogeneity test on a shared binning.
TestResult chi_square_homogeneity(const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b);

// One-sample Kolmogorov-Smirnov test against the uniform law on [lo, hi],
// with the asymptotic Kolmogorov distribution.
TestResult ks_uniform(std::vector<double> samples, double lo, double hi);

struct MeanEstimate {
  double mean = 0.0;
  double stddev = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

MeanEstimate estimate_mean(const std::vector<double>& values);

}  // namespace bosonlab

#endif  // BOSONLAB_STATS_HPP_
