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

#include "bosonlab/cayley.hpp"

#include <cmath>
#include <numbers>

#include "bosonlab/sampling.hpp"

namespace bosonlab {
namespace {

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw ValidationError("theta must lie in [0, 1]");
  }
}

// 1 + i theta e^{i phi/2} sin(phi/2), with the real part written as
// (1 - theta) + theta cos^2(phi/2) so it stays accurate near phi = pi.
Complex q_single(double phi, double theta) {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  return {(1.0 - theta) + theta * c * c, theta * c * s};
}

}  // namespace

Gate2 cayley_direct(const Gate2& h, double theta) {
  check_theta(theta);
  require_unitary(h, "cayley_direct");
  const Gate2 id = Gate2::Identity();
  const Gate2 num = (2.0 - theta) * h + theta * id;
  const Gate2 den = theta * h + (2.0 - theta) * id;
  return num * den.inverse();
}

Gate2 cayley_eigenform(const Eigen2& eig, double theta) {
  check_theta(theta);
  Gate2 d = Gate2::Zero();
  for (int j = 0; j < 2; ++j) {
    const double phi = eig.phases[j];
    const Complex f = q_single(phi, theta);
    d(j, j) = std::polar(1.0, phi) * std::conj(f) / f;
  }
  return eig.basis * d * eig.basis.adjoint();
}

Gate2 cayley_transform(const Gate2& h, double theta) {
  const Eigen2 eig = eig_unitary2(h);
  for (double phi : eig.phases) {
    if (std::numbers::pi - std::abs(phi) < 1e-2) return cayley_eigenform(eig, theta);
  }
  return cayley_direct(h, theta);
}

Complex q_factor(const Eigen2& eig, double theta) {
  Complex q(1.0);
  for (double phi : eig.phases) q *= q_single(phi, theta);
  return q;
}

double big_Q(const std::vector<Eigen2>& haar, double theta, int photons) {
  check_theta(theta);
  double log_prod = 0.0;
  for (const Eigen2& eig : haar) log_prod += std::log(std::norm(q_factor(eig, theta)));
  return std::exp(photons * log_prod);
}

double q1_lower_bound(double zeta, int gates, int photons) {
  const double c = std::cos((std::numbers::pi - zeta) / 2);
  return std::pow(c * c, 2.0 * gates * photons);
}

bool phases_within(const std::vector<Eigen2>& haar, double zeta) {
  for (const Eigen2& eig : haar) {
    for (double phi : eig.phases) {
      if (std::abs(phi) > std::numbers::pi - zeta) return false;
    }
  }
  return true;
}

std::vector<Eigen2> eigen_all(const std::vector<Gate2>& gates) {
  std::vector<Eigen2> out;
  out.reserve(gates.size());
  for (const Gate2& g : gates) out.push_back(eig_unitary2(g));
  return out;
}

Circuit perturb_circuit(const Circuit& worst, const std::vector<Eigen2>& haar,
                        double theta) {
  if (haar.size() != worst.gates().size()) {
    throw DimensionError("perturb_circuit: need one Haar gate per placement");
  }
  std::vector<Gate2> gates;
  gates.reserve(haar.size());
  for (std::size_t i = 0; i < haar.size(); ++i) {
    gates.push_back(cayley_eigenform(haar[i], theta) * worst.gates()[i]);
  }
  return Circuit(worst.architecture(), std::move(gates));
}

int PathInstance::degree() const {
  return 4 * static_cast<int>(worst.gates().size()) * t.total();
}

PathInstance random_path_instance(int modes, int photons, int reps, Rng& rng) {
  Circuit worst = random_local_circuit(build_kaleidoscope(modes, reps), rng);
  std::vector<Gate2> haar;
  for (std::size_t i = 0; i < worst.gates().size(); ++i) haar.push_back(haar_gate(rng));
  Permutation p1 = sample_permutation(modes, rng);
  OutcomeConfig s = sample_collision_free_outcome(modes, photons, rng);
  return {std::move(worst), eigen_all(haar), std::move(p1), std::move(s),
          OutcomeConfig::first_modes(modes, photons)};
}

double path_value(const PathInstance& inst, double theta) {
  const Circuit v = perturb_circuit(inst.worst, inst.haar, theta);
  const Matrix u = apply_circuit(v, inst.p1.matrix());
  return output_probability(u, inst.s, inst.t) * big_Q(inst.haar, theta, inst.t.total());
}

PostselectionConstant postselection_constant(
    const std::map<std::string, int>& gate_counts,
    const std::map<std::string, double>& success_probabilities) {
  PostselectionConstant out;
  for (const auto& [name, count] : gate_counts) {
    auto it = success_probabilities.find(name);
    if (it == success_probabilities.end()) {
      throw ValidationError("no success probability for gate type '" + name + "'");
    }
    if (!(it->second > 0.0 && it->second <= 1.0) || count < 0) {
      throw ValidationError("success probabilities must lie in (0, 1]");
    }
    out.log2_value += count * std::log2(it->second);
  }
  out.value = std::exp2(out.log2_value);
  return out;
}

LossModel LossModel::uniform(std::size_t gates, double rho, double rho_max) {
  LossModel m{std::vector<double>(2 * gates, rho), rho_max};
  m.validate(gates);
  return m;
}

void LossModel::validate(std::size_t gates) const {
  if (rates.size() != 2 * gates) {
    throw DimensionError("loss model needs two rates per gate");
  }
  if (!(rho_max >= 0.0 && rho_max <= 1.0)) throw ValidationError("rho_max must lie in [0, 1]");
  for (double r : rates) {
    if (!(r >= 0.0 && r <= rho_max)) throw ValidationError("loss rate outside [0, rho_max]");
  }
}

double LossModel::no_loss_probability() const {
  double p = 1.0;
  for (double r : rates) p *= 1.0 - r;
  return p;
}

}  // namespace bosonlab
