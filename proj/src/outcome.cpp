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
#include <sstream>

#include "bosonlab/probability.hpp"

namespace bosonlab {

OutcomeConfig::OutcomeConfig(std::vector<int> occupation) : occ_(std::move(occupation)) {
  for (int v : occ_) {
    if (v < 0) throw ValidationError("occupation numbers must be non-negative");
  }
}

OutcomeConfig OutcomeConfig::first_modes(int modes, int n) {
  if (n < 0 || n > modes) throw ValidationError("first_modes: need 0 <= n <= modes");
  std::vector<int> occ(modes, 0);
  std::fill(occ.begin(), occ.begin() + n, 1);
  return OutcomeConfig(std::move(occ));
}

OutcomeConfig OutcomeConfig::from_modes(int modes, const std::vector<int>& occupied) {
  std::vector<int> occ(modes, 0);
  for (int m : occupied) {
    if (m < 0 || m >= modes) throw ValidationError("from_modes: mode out of range");
    ++occ[m];
  }
  return OutcomeConfig(std::move(occ));
}

OutcomeConfig OutcomeConfig::parse(const std::string& text) {
  std::vector<int> occ;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '|')) {
    try {
      std::size_t used = 0;
      occ.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("outcome: cannot parse '" + text + "'");
    }
  }
  return OutcomeConfig(std::move(occ));
}

int OutcomeConfig::total() const {
  int n = 0;
  for (int v : occ_) n += v;
  return n;
}

bool OutcomeConfig::collision_free() const {
  return std::all_of(occ_.begin(), occ_.end(), [](int v) { return v <= 1; });
}

std::vector<int> OutcomeConfig::mode_list() const {
  std::vector<int> out;
  for (int i = 0; i < modes(); ++i) {
    for (int k = 0; k < occ_[i]; ++k) out.push_back(i);
  }
  return out;
}

std::string OutcomeConfig::str() const {
  std::string out;
  for (int i = 0; i < modes(); ++i) {
    if (i) out += '|';
    out += std::to_string(occ_[i]);
  }
  return out;
}

OutcomeConfig OutcomeConfig::permuted(const Permutation& p) const {
  return OutcomeConfig(p.apply(occ_));
}

OutcomeConfig OutcomeConfig::concat(const OutcomeConfig& tail) const {
  std::vector<int> occ = occ_;
  occ.insert(occ.end(), tail.occ_.begin(), tail.occ_.end());
  return OutcomeConfig(std::move(occ));
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate_into(int mode, int remaining, std::vector<int>& occ,
                    std::vector<OutcomeConfig>& out) {
  if (mode + 1 == static_cast<int>(occ.size())) {
    occ[mode] = remaining;
    out.emplace_back(occ);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    occ[mode] = k;
    enumerate_into(mode + 1, remaining - k, occ, out);
  }
}

}  // namespace

std::vector<OutcomeConfig> enumerate_outcomes(int modes, int photons) {
  if (modes < 1 || photons < 0) throw ValidationError("enumerate_outcomes: bad sizes");
  if (binomial(modes + photons - 1, photons) > kMaxEnumeration) {
    throw CapacityError("enumerate_outcomes: more than 1e5 configurations");
  }
  std::vector<OutcomeConfig> out;
  std::vector<int> occ(modes, 0);
  enumerate_into(0, photons, occ, out);
  return out;
}

}  // namespace bosonlab
