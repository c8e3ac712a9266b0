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

#include "bosonlab/permutation.hpp"

#include <sstream>

namespace bosonlab {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v]) {
      throw ValidationError("permutation image is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::parse_one_based(const std::string& text) {
  std::vector<int> image;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      image.push_back(v - 1);
    } catch (const std::exception&) {
      throw ValidationError("permutation: cannot parse '" + item + "'");
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw DimensionError("permutation size mismatch");
  std::vector<int> out(image_.size());
  for (int i = 0; i < size(); ++i) out[i] = image_[other[i]];
  return Permutation(std::move(out));
}

Matrix Permutation::matrix() const {
  Matrix p = Matrix::Zero(size(), size());
  for (int i = 0; i < size(); ++i) p(image_[i], i) = 1.0;
  return p;
}

std::vector<int> Permutation::apply(const std::vector<int>& values) const {
  if (static_cast<int>(values.size()) != size()) {
    throw DimensionError("permutation apply: size mismatch");
  }
  std::vector<int> out(values.size());
  for (int i = 0; i < size(); ++i) out[image_[i]] = values[i];
  return out;
}

std::string Permutation::str_one_based() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i] + 1);
  }
  return out;
}

Permutation sample_permutation(int n, Rng& rng) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(image[i], image[j]);
  }
  return Permutation(std::move(image));
}

}  // namespace bosonlab
