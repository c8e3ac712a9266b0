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
#include <iomanip>
#include <ostream>

#include "bosonlab/probability.hpp"

namespace bosonlab {
namespace {

double factorial_product(const OutcomeConfig& s) {
  double out = 1.0;
  for (int v : s.occupation()) out *= std::tgamma(v + 1.0);
  return out;
}

Distribution distribution_impl(const ComplexUnitary& c, const OutcomeConfig& t,
                               bool parallel) {
  if (t.modes() != c.dim()) throw DimensionError("full_distribution: t has wrong length");
  const std::vector<OutcomeConfig> outcomes = enumerate_outcomes(c.dim(), t.total());
  // Only the input columns matter; drop the rest once.
  const std::vector<int> cols = t.mode_list();
  Matrix a(c.dim(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) a.col(j) = c.matrix().col(cols[j]);
  const double tfact = factorial_product(t);

  Distribution dist(outcomes.size(), {OutcomeConfig(std::vector<int>{}), 0.0});
  const auto n = static_cast<std::ptrdiff_t>(outcomes.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const OutcomeConfig& s = outcomes[k];
    const std::vector<int> rows = s.mode_list();
    Matrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) sub.row(i) = a.row(rows[i]);
    const double p = std::norm(permanent_serial(sub)) / (factorial_product(s) * tfact);
    dist[k] = {s, p};
  }
  return dist;
}

}  // namespace

Matrix submatrix_repeat(const Matrix& c, const OutcomeConfig& s,
                        const OutcomeConfig& t) {
  if (s.modes() != c.rows() || t.modes() != c.cols()) {
    throw DimensionError("submatrix_repeat: configuration length mismatch");
  }
  if (s.total() != t.total()) {
    throw ValidationError("submatrix_repeat: |s| != |t|");
  }
  const std::vector<int> rows = s.mode_list();
  const std::vector<int> cols = t.mode_list();
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = c(rows[i], cols[j]);
  }
  return out;
}

double output_probability(const Matrix& c, const OutcomeConfig& s,
                          const OutcomeConfig& t) {
  const Matrix sub = submatrix_repeat(c, s, t);
  return std::norm(permanent(sub)) / (factorial_product(s) * factorial_product(t));
}

double output_probability(const ComplexUnitary& c, const OutcomeConfig& s,
                          const OutcomeConfig& t) {
  return output_probability(c.matrix(), s, t);
}

Distribution full_distribution(const ComplexUnitary& c, const OutcomeConfig& t) {
  return distribution_impl(c, t, true);
}

Distribution full_distribution_serial(const ComplexUnitary& c, const OutcomeConfig& t) {
  return distribution_impl(c, t, false);
}

void write_distribution_csv(std::ostream& out, const Distribution& dist) {
  out << "outcome,probability\n";
  out << std::setprecision(17);
  for (const auto& [s, p] : dist) out << s.str() << ',' << p << '\n';
}

double GbsParams::mean_photons(int modes) const {
  const double sh = std::sinh(squeezing);
  return modes * sh * sh;
}

double gbs_probability(const ComplexUnitary& c, const OutcomeConfig& s,
                       const GbsParams& params) {
  if (s.modes() != c.dim()) throw DimensionError("gbs_probability: s has wrong length");
  if (!s.collision_free()) {
    throw ValidationError("gbs_probability: outcome must be collision-free");
  }
  const int n = s.total();
  if (n % 2 != 0) throw ValidationError("gbs_probability: photon number must be even");
  if (n > 12) throw CapacityError("gbs_probability: at most 12 photons");
  if (!(params.squeezing > 0.0)) throw ValidationError("gbs_probability: r must be > 0");

  const std::vector<int> idx = s.mode_list();
  Matrix rows(n, c.dim());
  for (int i = 0; i < n; ++i) rows.row(i) = c.matrix().row(idx[i]);
  const Matrix sub = rows * rows.transpose();
  const double r = params.squeezing;
  return std::pow(std::tanh(r), n) / std::pow(std::cosh(r), c.dim()) *
         std::norm(hafnian(sub));
}

}  // namespace bosonlab
