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

#include "bosonlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "bosonlab/errors.hpp"

namespace bosonlab {
namespace {

double chi2_upper_tail(double statistic, double dof) {
  if (dof < 1.0) return 1.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

// Q_KS(x) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2)
double kolmogorov_tail(double x) {
  if (x < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

TestResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                          const std::vector<double>& probabilities,
                          double min_expected) {
  if (observed.size() != probabilities.size()) {
    throw DimensionError("chi_square_gof: size mismatch");
  }
  const double n = std::accumulate(observed.begin(), observed.end(), 0.0);
  const double mass = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  double stat = 0.0, pooled_obs = 0.0, pooled_exp = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = n * probabilities[i] / mass;
    if (e < min_expected) {
      pooled_obs += observed[i];
      pooled_exp += e;
      continue;
    }
    stat += (observed[i] - e) * (observed[i] - e) / e;
    ++cells;
  }
  if (pooled_exp > 0.0) {
    stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++cells;
  } else if (pooled_obs > 0.0) {
    // Counts where the model puts no mass at all.
    return {INFINITY, static_cast<double>(cells), 0.0};
  }
  const double dof = cells - 1;
  return {stat, dof, chi2_upper_tail(stat, dof)};
}

TestResult chi_square_homogeneity(const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) throw DimensionError("chi_square_homogeneity: size mismatch");
  const double na = std::accumulate(a.begin(), a.end(), 0.0);
  const double nb = std::accumulate(b.begin(), b.end(), 0.0);
  double stat = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i]) + static_cast<double>(b[i]);
    if (col == 0.0) continue;
    const double ea = col * na / (na + nb);
    const double eb = col * nb / (na + nb);
    stat += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
    ++cells;
  }
  const double dof = cells - 1;
  return {stat, dof, chi2_upper_tail(stat, dof)};
}

TestResult ks_uniform(std::vector<double> samples, double lo, double hi) {
  if (samples.empty()) throw ValidationError("ks_uniform: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = std::clamp((samples[i] - lo) / (hi - lo), 0.0, 1.0);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  const double sq = std::sqrt(n);
  // Stephens' small-sample correction to the asymptotic argument.
  const double x = (sq + 0.12 + 0.11 / sq) * d;
  return {d, 0.0, kolmogorov_tail(x)};
}

MeanEstimate estimate_mean(const std::vector<double>& values) {
  MeanEstimate out;
  out.count = values.size();
  if (values.empty()) return out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(ss / (values.size() - 1));
    out.std_error = out.stddev / std::sqrt(static_cast<double>(values.size()));
  }
  return out;
}

}  // namespace bosonlab
