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

#ifndef BOSONLAB_PERMUTATION_HPP_
#define BOSONLAB_PERMUTATION_HPP_

#include <string>
#include <vector>

#include "bosonlab/lin_core.hpp"

namespace bosonlab {

// A mode permutation. image[i] is where a photon entering mode i leaves
// (0-based); the matrix satisfies P e_i = e_{image[i]}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  // Parses "3,1,2,4" style 1-based images.
  static Permutation parse_one_based(const std::string& text);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  // Matrix product this * other (other acts first).
  Permutation after(const Permutation& other) const;
  Matrix matrix() const;
  // Moves the entry at position i to position image[i].
  std::vector<int> apply(const std::vector<int>& values) const;
  std::string str_one_based() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// Uniform over all n! permutations (Fisher-Yates).
Permutation sample_permutation(int n, Rng& rng);

}  // namespace bosonlab

#endif  // BOSONLAB_PERMUTATION_HPP_
