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

#ifndef BOSONLAB_GBS_HPP_
#define BOSONLAB_GBS_HPP_

#include <optional>
#include <vector>

#include "bosonlab/architecture.hpp"
#include "bosonlab/probability.hpp"

namespace bosonlab {

// The balanced beam splitter [[1, i], [i, 1]] / sqrt(2). It turns two single
// mode squeezed vacua into a two-mode squeezed vacuum (U U^T is off-diagonal).
Gate2 tmsv_beam_splitter();

// Circuit on 2 M0 modes in B B*. Layer 1 of B puts the beam splitter on
// every pair (2k-1, 2k); C0 (on M0 modes in B B*) runs on the even modes
// through the remaining layers; the final layer is the identity. Odd modes
// are herald modes.
Circuit build_tmsv_embedding(const Circuit& c0);

// Mode relabelling y = 2x + b -> b M0 + x (0-based) from circuit order to
// the herald-first layout: herald modes 1..M0, signal modes M0+1..2M0, with
// the beam splitters pairing i with i + M0.
Permutation herald_first_order(int m0);

struct GbsReductionCheck {
  double lhs = 0.0;  // q_{t0 ++ s0}(C) from the hafnian
  double rhs = 0.0;  // tanh^{2 N0} r / cosh^{2 M0} r p_{s0}(C0; input t0)
  double abs_diff = 0.0;
  OutcomeConfig circuit_outcome{std::vector<int>{}};  // t0 ++ s0 in circuit order
};

// t0 defaults to s0.
GbsReductionCheck verify_gbs_reduction(const Circuit& c0, const OutcomeConfig& s0,
                                       double squeezing,
                                       std::optional<OutcomeConfig> t0 = std::nullopt);

struct FockGbsResult {
  Distribution probabilities;     // every outcome with total <= cutoff
  int cutoff = 0;
  double truncation_bound = 0.0;  // single-mode mass above the cutoff
};

// Truncated Fock-space simulation of squeezed vacuum in every mode followed
// by U. Each creation operator is replaced by its image under U, which is
// independent of any permanent or hafnian code. Amplitudes with total photon
// number <= cutoff are exact.
FockGbsResult truncated_fock_gbs(const ComplexUnitary& c, double squeezing, int cutoff);
// Throws ValidationError if s is beyond the exact range.
double fock_probability(const FockGbsResult& result, const OutcomeConfig& s);

struct BlowupFactor {
  double value = 0.0;  // cosh^{2 M0} r / tanh^{2 N0} r
  double log2_value = 0.0;
  // ((M+N)/M)^{M0+N0} (M/N)^{N0} with M = 2 M0, N = 2 N0, available when
  // N = M sinh^2 r to relative precision 1e-10.
  std::optional<double> closed_form;
};

BlowupFactor blowup_factor(int m0, int n0, double squeezing);

}  // namespace bosonlab

#endif  // BOSONLAB_GBS_HPP_
