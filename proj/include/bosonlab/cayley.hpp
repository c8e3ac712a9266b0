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

#ifndef BOSONLAB_CAYLEY_HPP_
#define BOSONLAB_CAYLEY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bosonlab/architecture.hpp"
#include "bosonlab/probability.hpp"
#include "bosonlab/routing.hpp"

namespace bosonlab {

// Path from a unitary H (theta = 0) to the identity (theta = 1):
//   H(theta) = ((2 - theta) H + theta I) (theta H + (2 - theta) I)^{-1}.
Gate2 cayley_direct(const Gate2& h, double theta);
// The same map written through the eigendecomposition of H,
//   H(theta) = (1/q) L diag(p_j) L^dagger,
// which stays finite when an eigenphase sits at pi.
Gate2 cayley_eigenform(const Eigen2& eig, double theta);
// Uses the eigenform when an eigenphase is within 1e-6 of pi.
Gate2 cayley_transform(const Gate2& h, double theta);

// q(theta) = prod_j (1 + i theta e^{i phi_j / 2} sin(phi_j / 2))
Complex q_factor(const Eigen2& eig, double theta);

// Q(theta) = (prod_i |q_i(theta)|^2)^N. Note |q|^2 = 1 - theta (2 - theta)
// sin^2(phi / 2), so Q never exceeds 1 on [0, 1].
double big_Q(const std::vector<Eigen2>& haar, double theta, int photons);

// cos^2((pi - zeta) / 2)^{2 m N}: the smallest Q(1) once every eigenphase
// has been kept at distance at least zeta from pi.
double q1_lower_bound(double zeta, int gates, int photons);
bool phases_within(const std::vector<Eigen2>& haar, double zeta);

std::vector<Eigen2> eigen_all(const std::vector<Gate2>& gates);

// Gates H_i(theta) G_i on the worst-case circuit's architecture.
Circuit perturb_circuit(const Circuit& worst, const std::vector<Eigen2>& haar,
                        double theta);

// One instance of the interpolation problem: p_s(V(theta) P1) Q(theta) for a
// worst-case circuit, Haar gates, an input permutation and s, t.
struct PathInstance {
  Circuit worst;
  std::vector<Eigen2> haar;
  Permutation p1;
  OutcomeConfig s;
  OutcomeConfig t;

  // 4 m N, the degree of p_s(V(theta) P1) Q(theta) in theta.
  int degree() const;
};

PathInstance random_path_instance(int modes, int photons, int reps, Rng& rng);

// p_s(V(theta) P1) Q(theta) through cayley_transform and output_probability.
double path_value(const PathInstance& inst, double theta);

struct DegreeCheckReport {
  int degree = 0;
  // Least-squares Chebyshev fits on 2d+1 nodes in [0, 1], residuals relative
  // to max |F| on held-out points.
  double interval_residual = 0.0;        // degree d
  double interval_residual_lower = 0.0;  // degree d - 1
  // The same polynomial sampled on |theta| = radius via its analytic
  // continuation. A degree d-1 fit cannot hide the top coefficient there.
  double circle_radius = 0.0;
  double circle_residual = 0.0;
  double circle_residual_lower = 0.0;
  double top_coefficient = 0.0;     // |c_d| R^d / max |F|
  double excess_coefficient = 0.0;  // largest |c_j| R^j / max |F| with j > d
};

// Throws PrecisionError above degree 128.
DegreeCheckReport rational_degree_check(const PathInstance& inst);

enum class Precision { kDouble, kExtended, kAuto };
std::string precision_name(Precision p);
Precision parse_precision(const std::string& name);

struct ReductionOptions {
  int modes = 2;
  int photons = 1;
  int reps = 1;          // q0 of the worst-case circuit
  double delta = 0.05;   // nodes theta_i = i delta / d, i = 0..d
  std::uint64_t seed = 1;
  Precision precision = Precision::kDouble;
  bool identity_worst_case = false;  // C0 = I and s0 = t
  double tolerance = 1e-6;           // target on |extrapolated - direct|
};

struct ReductionReport {
  double extrapolated = 0.0;
  double direct = 0.0;
  double abs_error = 0.0;
  double amplification = 0.0;         // (1/delta)^d
  double lagrange_amplification = 0.0;  // sum_i |l_i(1)|
  double q_at_one = 0.0;
  int degree = 0;
  int gates = 0;
  double delta = 0.0;
  int required_bits = 0;
  std::string precision;
  std::string s0;
  std::string t;
};

// Worst-case circuit C0 in (B B*)^{q0}, permutations P0 and P1 routed into
// B B*, Haar gates on (B B*)^{q0+2}; samples p_s(V(theta) P1) Q(theta) at
// d+1 nodes, extrapolates to theta = 1 and divides by Q(1).
// In double precision a PrecisionError names the number of bits required
// when the Lagrange amplification makes the target tolerance unreachable.
ReductionReport reduction_demo(const ReductionOptions& options);

inline constexpr double kCzSuccessProbability = 2.0 / 27.0;

struct PostselectionConstant {
  double value = 0.0;  // may underflow; log2_value is exact in range
  double log2_value = 0.0;
};

// c_Q = prod_k p_k^{Gamma_k}
PostselectionConstant postselection_constant(
    const std::map<std::string, int>& gate_counts,
    const std::map<std::string, double>& success_probabilities = {
        {"CZ", kCzSuccessProbability}});

// Per-channel loss rates, two channels per gate in circuit order. Every rate
// lies in [0, rho_max].
struct LossModel {
  std::vector<double> rates;
  double rho_max = 1.0;

  static LossModel uniform(std::size_t gates, double rho, double rho_max = 1.0);
  void validate(std::size_t gates) const;
  double no_loss_probability() const;
};

}  // namespace bosonlab

#endif  // BOSONLAB_CAYLEY_HPP_
