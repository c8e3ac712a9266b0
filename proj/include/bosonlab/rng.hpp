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

#ifndef BOSONLAB_RNG_HPP_
#define BOSONLAB_RNG_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <string>

namespace bosonlab {

// Serializable description of a random stream.
struct RngHandle {
  std::uint64_t seed = 0;
  std::string algorithm = "xoshiro256**";
};

// Derive the handle for an independent task: the task index is XORed into
// the seed, and seeding runs the result through splitmix64, so neighbouring
// indices still give unrelated streams.
RngHandle split(const RngHandle& parent, std::uint64_t task_index);

// xoshiro256** with splitmix64 seeding. The integer stream is fully specified,
// and the real-valued helpers below avoid std:: distributions so results do
// not depend on the standard library implementation.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);
  explicit Rng(const RngHandle& handle);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();
  // Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  const RngHandle& handle() const { return handle_; }

 private:
  RngHandle handle_;
  std::array<std::uint64_t, 4> s_{};
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bosonlab

#endif  // BOSONLAB_RNG_HPP_
