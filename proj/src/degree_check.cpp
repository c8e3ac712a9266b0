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
#include <cmath>
#include <numbers>

#include "bosonlab/cayley.hpp"
#include "detail/cayley_path.hpp"

namespace bosonlab {
namespace {

using Model = detail::PathModel<std::complex<double>>;

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Least-squares fit in the Chebyshev basis on [0, 1], then the largest
// deviation on the held-out points relative to the largest |F| there.
double chebyshev_fit_residual(const std::vector<double>& nodes,
                              const std::vector<double>& values,
                              const std::vector<double>& held_out,
                              const std::vector<double>& held_values, int degree) {
  auto basis = [degree](double theta) {
    const double x = 2.0 * theta - 1.0;
    Eigen::RowVectorXd row(degree + 1);
    row(0) = 1.0;
    if (degree >= 1) row(1) = x;
    for (int j = 2; j <= degree; ++j) row(j) = 2.0 * x * row(j - 1) - row(j - 2);
    return row;
  };
  Eigen::MatrixXd a(nodes.size(), degree + 1);
  Eigen::VectorXd b(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    a.row(k) = basis(nodes[k]);
    b(k) = values[k];
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
  double worst = 0.0;
  for (std::size_t k = 0; k < held_out.size(); ++k) {
    worst = std::max(worst, std::abs(basis(held_out[k]).dot(coef) - held_values[k]));
  }
  return worst / max_abs(held_values);
}

}  // namespace

DegreeCheckReport rational_degree_check(const PathInstance& inst) {
  const int d = inst.degree();
  if (d < 1) throw ValidationError("degree check needs at least one photon and gate");
  if (d > 128) {
    throw PrecisionError("degree " + std::to_string(d) +
                         " is beyond what double precision can resolve (limit 128)");
  }
  const Model forward(inst, false);
  const Model backward(inst, true);

  DegreeCheckReport out;
  out.degree = d;

  const int k_nodes = 2 * d + 1;
  std::vector<double> nodes, values;
  for (int k = 0; k < k_nodes; ++k) {
    const double x = std::cos((2 * k + 1) * std::numbers::pi / (2.0 * k_nodes));
    nodes.push_back(0.5 * (1.0 + x));
    values.push_back(forward.value(nodes.back()));
  }
  const int k_held = 4 * d + 2;
  std::vector<double> held, held_values;
  for (int k = 0; k < k_held; ++k) {
    held.push_back(static_cast<double>(k) / (k_held - 1));
    held_values.push_back(forward.value(held.back()));
  }
  out.interval_residual = chebyshev_fit_residual(nodes, values, held, held_values, d);
  out.interval_residual_lower =
      chebyshev_fit_residual(nodes, values, held, held_values, d - 1);

  // F(z) = A(z) conj(A(conj z)) is the polynomial that equals |A|^2 on the
  // real line. Sample it on a circle and read off scaled coefficients.
  const double radius = std::max(8.0, static_cast<double>(d));
  const int k_circle = 2 * (d + 1);
  std::vector<Complex> f(k_circle);
  double f_max = 0.0;
  for (int k = 0; k < k_circle; ++k) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * k / k_circle);
    f[k] = forward.amplitude(z) * backward.amplitude(z);
    f_max = std::max(f_max, std::abs(f[k]));
  }
  std::vector<Complex> coef(k_circle);
  for (int j = 0; j < k_circle; ++j) {
    Complex acc(0.0);
    for (int k = 0; k < k_circle; ++k) {
      acc += f[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / k_circle);
    }
    coef[j] = acc / static_cast<double>(k_circle);
  }
  out.circle_radius = radius;
  out.top_coefficient = std::abs(coef[d]) / f_max;
  for (int j = d + 1; j < k_circle; ++j) {
    out.excess_coefficient = std::max(out.excess_coefficient, std::abs(coef[j]) / f_max);
  }
  auto circle_residual = [&](int degree) {
    double worst = 0.0;
    for (int k = 0; k < k_circle; ++k) {
      Complex fit(0.0);
      for (int j = 0; j <= degree; ++j) {
        fit += coef[j] * std::polar(1.0, 2.0 * std::numbers::pi * j * k / k_circle);
      }
      worst = std::max(worst, std::abs(fit - f[k]));
    }
    return worst / f_max;
  };
  out.circle_residual = circle_residual(d);
  out.circle_residual_lower = circle_residual(d - 1);
  return out;
}

}  // namespace bosonlab
