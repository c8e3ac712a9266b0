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

#ifndef BOSONLAB_PROBABILITY_HPP_
#define BOSONLAB_PROBABILITY_HPP_

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bosonlab/lin_core.hpp"
#include "bosonlab/permutation.hpp"

namespace bosonlab {

// Photon occupation numbers, one per mode.
class OutcomeConfig {
 public:
  explicit OutcomeConfig(std::vector<int> occupation);

  // One photon in each of the first n of `modes` modes.
  static OutcomeConfig first_modes(int modes, int n);
  // One photon in each listed 0-based mode.
  static OutcomeConfig from_modes(int modes, const std::vector<int>& occupied);
  // "s1|s2|...|sM"
  static OutcomeConfig parse(const std::string& text);

  int modes() const { return static_cast<int>(occ_.size()); }
  int total() const;
  bool collision_free() const;
  int operator[](int i) const { return occ_[i]; }
  const std::vector<int>& occupation() const { return occ_; }
  // Occupied modes with multiplicity, ascending.
  std::vector<int> mode_list() const;
  std::string str() const;

  OutcomeConfig permuted(const Permutation& p) const;
  // Concatenation s ++ t over the disjoint union of modes.
  OutcomeConfig concat(const OutcomeConfig& tail) const;

  auto operator<=>(const OutcomeConfig&) const = default;

 private:
  std::vector<int> occ_;
};

// All configurations of n photons in m modes, ascending lexicographic order.
std::vector<OutcomeConfig> enumerate_outcomes(int modes, int photons);
double binomial(int n, int k);

inline constexpr int kMaxPermanentOrder = 20;
inline constexpr double kMaxEnumeration = 1e5;

// Ryser's formula with Gray-code updates. The default splits the Gray-code
// range across OpenMP threads for large orders; the serial variant is the
// reference.
Complex permanent(const Matrix& a);
Complex permanent_serial(const Matrix& a);
// Sum over all permutations. Orders up to 10.
Complex permanent_naive(const Matrix& a);

// Rows repeated s_i times and columns repeated t_j times.
Matrix submatrix_repeat(const Matrix& c, const OutcomeConfig& s,
                        const OutcomeConfig& t);

// |Per(C_{s,t})|^2 / (prod s_i! prod t_j!)
double output_probability(const Matrix& c, const OutcomeConfig& s,
                          const OutcomeConfig& t);
double output_probability(const ComplexUnitary& c, const OutcomeConfig& s,
                          const OutcomeConfig& t);

using Distribution = std::vector<std::pair<OutcomeConfig, double>>;

// Every output configuration with its probability, in lexicographic order.
Distribution full_distribution(const ComplexUnitary& c, const OutcomeConfig& t);
Distribution full_distribution_serial(const ComplexUnitary& c,
                                      const OutcomeConfig& t);
// Header "outcome,probability", outcome as "s1|...|sM".
void write_distribution_csv(std::ostream& out, const Distribution& dist);

// Hafnian of a symmetric matrix of even order, by recursive expansion along
// the first row. Orders up to 16.
Complex hafnian(const Matrix& s);
// Sum over permutations, keeping those that list a perfect matching in
// canonical order. Orders up to 10.
Complex hafnian_by_enumeration(const Matrix& s);

struct GbsParams {
  double squeezing = 0.0;  // r, shared by every mode
  double mean_photons(int modes) const;
};

// tanh^N r / cosh^M r |Haf((C C^T)_s)|^2 for collision-free s with even N.
double gbs_probability(const ComplexUnitary& c, const OutcomeConfig& s,
                       const GbsParams& params);

}  // namespace bosonlab

#endif  // BOSONLAB_PROBABILITY_HPP_
