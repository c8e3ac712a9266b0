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

#ifndef BOSONLAB_ERRORS_HPP_
#define BOSONLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bosonlab {

// Shape or size mismatch: non-power-of-two mode counts, wrong gate counts,
// matrices of the wrong order.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value violates a documented precondition (non-unitary input, collision
// in a configuration that must be collision-free, malformed permutation).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested computation exceeds what the chosen number type can deliver.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration or state space larger than the configured ceiling.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace bosonlab

#endif  // BOSONLAB_ERRORS_HPP_
