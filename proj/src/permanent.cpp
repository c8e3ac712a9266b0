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

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "bosonlab/probability.hpp"

namespace bosonlab {
namespace {

void check_order(const Matrix& a, int limit, const char* what) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(what) + ": matrix not square");
  if (a.rows() > limit) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(a.rows()) +
                        " exceeds " + std::to_string(limit));
  }
}

// Sum of (-1)^{|S|} prod_i rowsum_i(S) over Gray-code steps [begin, end).
// Step k visits the subset gray(k) = k ^ (k >> 1).
Complex ryser_range(const Matrix& a, std::uint64_t begin, std::uint64_t end) {
  const int n = static_cast<int>(a.rows());
  std::vector<Complex> rowsum(n, Complex(0.0));
  const std::uint64_t start = begin - 1;
  std::uint64_t subset = start ^ (start >> 1);
  for (int j = 0; j < n; ++j) {
    if ((subset >> j) & 1) {
      for (int i = 0; i < n; ++i) rowsum[i] += a(i, j);
    }
  }
  Complex total(0.0);
  for (std::uint64_t k = begin; k < end; ++k) {
    const int j = std::countr_zero(k);
    const bool adding = ((subset >> j) & 1) == 0;
    subset ^= std::uint64_t{1} << j;
    if (adding) {
      for (int i = 0; i < n; ++i) rowsum[i] += a(i, j);
    } else {
      for (int i = 0; i < n; ++i) rowsum[i] -= a(i, j);
    }
    Complex prod = rowsum[0];
    for (int i = 1; i < n; ++i) prod *= rowsum[i];
    total += (std::popcount(subset) & 1) ? -prod : prod;
  }
  return total;
}

Complex ryser_sign(int n, Complex sum) { return (n & 1) ? -sum : sum; }

}  // namespace

Complex permanent_serial(const Matrix& a) {
  check_order(a, kMaxPermanentOrder, "permanent");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  return ryser_sign(n, ryser_range(a, 1, std::uint64_t{1} << n));
}

Complex permanent(const Matrix& a) {
  check_order(a, kMaxPermanentOrder, "permanent");
  const int n = static_cast<int>(a.rows());
  if (n < 14) return permanent_serial(a);
  // A fixed chunk count keeps the summation order, and hence the rounding,
  // independent of the thread count.
  constexpr int kChunks = 64;
  const std::uint64_t steps = (std::uint64_t{1} << n) - 1;
  std::vector<Complex> partial(kChunks);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < kChunks; ++c) {
    const std::uint64_t lo = 1 + steps * c / kChunks;
    const std::uint64_t hi = 1 + steps * (c + 1) / kChunks;
    partial[c] = lo < hi ? ryser_range(a, lo, hi) : Complex(0.0);
  }
  return ryser_sign(n, std::accumulate(partial.begin(), partial.end(), Complex(0.0)));
}

Complex permanent_naive(const Matrix& a) {
  check_order(a, 10, "permanent_naive");
  const int n = static_cast<int>(a.rows());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total(0.0);
  do {
    Complex prod(1.0);
    for (int i = 0; i < n; ++i) prod *= a(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace bosonlab
