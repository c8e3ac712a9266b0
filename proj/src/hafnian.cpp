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
#include <numeric>
#include <vector>

#include "bosonlab/probability.hpp"

namespace bosonlab {
namespace {

void check_symmetric(const Matrix& s, int limit, const char* what) {
  if (s.rows() != s.cols()) throw DimensionError(std::string(what) + ": matrix not square");
  if (s.rows() % 2 != 0) throw DimensionError(std::string(what) + ": odd order");
  if (s.rows() > limit) throw CapacityError(std::string(what) + ": order too large");
  if (s.size() > 0 && (s - s.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError(std::string(what) + ": matrix is not symmetric");
  }
}

// Pair the lowest remaining index with every other remaining index.
Complex expand(const Matrix& s, std::vector<int>& remaining) {
  if (remaining.empty()) return 1.0;
  const int first = remaining.back();
  remaining.pop_back();
  Complex total(0.0);
  for (std::size_t k = 0; k < remaining.size(); ++k) {
    const int partner = remaining[k];
    const Complex w = s(first, partner);
    if (w == Complex(0.0)) continue;
    remaining.erase(remaining.begin() + k);
    total += w * expand(s, remaining);
    remaining.insert(remaining.begin() + k, partner);
  }
  remaining.push_back(first);
  return total;
}

}  // namespace

Complex hafnian(const Matrix& s) {
  check_symmetric(s, 16, "hafnian");
  std::vector<int> remaining(s.rows());
  // Stored in reverse so that pop_back takes the lowest index.
  std::iota(remaining.rbegin(), remaining.rend(), 0);
  return expand(s, remaining);
}

Complex hafnian_by_enumeration(const Matrix& s) {
  check_symmetric(s, 10, "hafnian_by_enumeration");
  const int n = static_cast<int>(s.rows());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total(0.0);
  do {
    bool canonical = true;
    for (int k = 0; k + 1 < n && canonical; k += 2) {
      if (sigma[k] > sigma[k + 1]) canonical = false;
      if (k + 2 < n && sigma[k] > sigma[k + 2]) canonical = false;
    }
    if (!canonical) continue;
    Complex prod(1.0);
    for (int k = 0; k < n; k += 2) prod *= s(sigma[k], sigma[k + 1]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace bosonlab
