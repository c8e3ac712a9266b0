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

#include "bosonlab/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "bosonlab/errors.hpp"

namespace bosonlab {

int configure_threads(std::optional<int> requested) {
  if (!requested) {
    if (const char* env = std::getenv("BOSONLAB_THREADS"); env && *env) {
      try {
        requested = std::stoi(env);
      } catch (const std::exception&) {
        throw ValidationError("BOSONLAB_THREADS must be a positive integer");
      }
    }
  }
  if (requested) {
    if (*requested < 1) throw ValidationError("thread count must be >= 1");
    omp_set_num_threads(*requested);
  }
  return omp_get_max_threads();
}

}  // namespace bosonlab
