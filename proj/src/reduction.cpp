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
#include <limits>

#include "bosonlab/cayley.hpp"
#include "bosonlab/sampling.hpp"
#include "detail/cayley_path.hpp"

namespace bosonlab {

std::string precision_name(Precision p) {
  switch (p) {
    case Precision::kDouble:
      return "double";
    case Precision::kExtended:
      return "extended";
    case Precision::kAuto:
      return "auto";
  }
  return "?";
}

Precision parse_precision(const std::string& name) {
  if (name == "double") return Precision::kDouble;
  if (name == "extended") return Precision::kExtended;
  if (name == "auto") return Precision::kAuto;
  throw ValidationError("precision must be double, extended or auto");
}

namespace {

constexpr int kExtendedBits =
    std::numeric_limits<detail::RealT<detail::ExtendedComplex>>::digits;

struct Setup {
  Circuit c0;
  OutcomeConfig s0;
  PathInstance inst;
};

Setup build(const ReductionOptions& o) {
  log2_exact(o.modes);
  if (o.photons < 1 || o.photons > o.modes) throw ValidationError("need 1 <= N <= M");
  if (o.reps < 1) throw ValidationError("q0 must be >= 1");
  if (!(o.delta > 0.0 && o.delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");

  Rng rng(o.seed);
  const Architecture arch0 = build_kaleidoscope(o.modes, o.reps);
  Circuit c0 = o.identity_worst_case ? Circuit::identity(arch0)
                                     : random_local_circuit(arch0, rng);
  const OutcomeConfig t = OutcomeConfig::first_modes(o.modes, o.photons);
  OutcomeConfig s0 = o.identity_worst_case
                         ? t
                         : sample_collision_free_outcome(o.modes, o.photons, rng);
  const Permutation p0 = sample_permutation(o.modes, rng);
  Permutation p1 = sample_permutation(o.modes, rng);

  // C' = P0 C0 P1^{-1}, applied right to left, lives on (B B*)^{q0+2}.
  Circuit cp = concatenate(concatenate(route_permutation(p1.inverse()), c0),
                           route_permutation(p0));
  OutcomeConfig s = s0.permuted(p0);
  std::vector<Gate2> haar;
  for (std::size_t i = 0; i < cp.gates().size(); ++i) haar.push_back(haar_gate(rng));
  std::vector<Eigen2> eig = eigen_all(haar);
  PathInstance inst{std::move(cp), std::move(eig), std::move(p1), std::move(s), t};
  return {std::move(c0), std::move(s0), std::move(inst)};
}

// log2 of sum_i |l_i(1)| for the nodes i delta / d.
double log2_lebesgue(int d, double delta) {
  std::vector<double> logs(d + 1);
  double top = -INFINITY;
  for (int i = 0; i <= d; ++i) {
    double acc = 0.0;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      acc += std::log2(1.0 - j * delta / d) - std::log2(std::abs(i - j) * delta / d);
    }
    logs[i] = acc;
    top = std::max(top, acc);
  }
  double sum = 0.0;
  for (double v : logs) sum += std::exp2(v - top);
  return top + std::log2(sum);
}

template <class Cx>
void run(const Setup& setup, const ReductionOptions& o, ReductionReport& report) {
  using Real = detail::RealT<Cx>;
  const int d = report.degree;
  const detail::PathModel<Cx> model(setup.inst, false);

  std::vector<Real> theta(d + 1), y(d + 1);
  for (int i = 0; i <= d; ++i) {
    theta[i] = Real(o.delta) * Real(i) / Real(d);
    y[i] = model.value(theta[i]);
  }
  Real extrapolated(0), lebesgue(0);
  for (int i = 0; i <= d; ++i) {
    Real l(1);
    for (int j = 0; j <= d; ++j) {
      if (j != i) l *= (Real(1) - theta[j]) / (theta[i] - theta[j]);
    }
    extrapolated += l * y[i];
    lebesgue += (l < 0 ? Real(-l) : l);
  }
  const Real q1 = model.big_q(Real(1));
  const Real estimate = extrapolated / q1;

  detail::Block<Cx> x = detail::input_columns<Cx>(o.modes, setup.inst.t, nullptr);
  x = detail::apply_gates(setup.c0, std::move(x));
  Real fact(1);
  for (int v : setup.s0.occupation()) {
    for (int k = 2; k <= v; ++k) fact *= k;
  }
  const Real direct = detail::abs2(detail::ryser(detail::select_rows(x, setup.s0))) / fact;

  report.extrapolated = static_cast<double>(estimate);
  report.direct = static_cast<double>(direct);
  report.abs_error = static_cast<double>(estimate > direct ? Real(estimate - direct)
                                                           : Real(direct - estimate));
  report.lagrange_amplification = static_cast<double>(lebesgue);
  report.q_at_one = static_cast<double>(q1);
}

}  // namespace

ReductionReport reduction_demo(const ReductionOptions& options) {
  const Setup setup = build(options);
  ReductionReport report;
  report.degree = setup.inst.degree();
  report.gates = static_cast<int>(setup.inst.worst.gates().size());
  report.delta = options.delta;
  report.amplification = std::pow(1.0 / options.delta, report.degree);
  report.s0 = setup.s0.str();
  report.t = setup.inst.t.str();

  // Rounding in each sample is amplified by the Lebesgue constant and by
  // 1/Q(1); the degree covers accumulation inside each evaluation.
  const double q1 = big_Q(setup.inst.haar, 1.0, options.photons);
  const double needed = log2_lebesgue(report.degree, options.delta) +
                        std::log2(static_cast<double>(report.degree)) - std::log2(q1) -
                        std::log2(options.tolerance) + 4.0;
  report.required_bits = static_cast<int>(std::ceil(needed));

  Precision p = options.precision;
  if (p == Precision::kAuto) {
    p = report.required_bits <= std::numeric_limits<double>::digits ? Precision::kDouble
                                                                    : Precision::kExtended;
  }
  report.precision = precision_name(p);
  if (p == Precision::kDouble) {
    if (report.required_bits > std::numeric_limits<double>::digits) {
      throw PrecisionError("reduction demo at degree " + std::to_string(report.degree) +
                           " needs about " + std::to_string(report.required_bits) +
                           " bits of working precision; double has 53. Use extended "
                           "precision (" + std::to_string(kExtendedBits) + " bits).");
    }
    run<std::complex<double>>(setup, options, report);
  } else {
    if (report.required_bits > kExtendedBits) {
      throw PrecisionError("reduction demo needs about " +
                           std::to_string(report.required_bits) +
                           " bits; extended precision provides " +
                           std::to_string(kExtendedBits));
    }
    run<detail::ExtendedComplex>(setup, options, report);
  }
  return report;
}

}  // namespace bosonlab
