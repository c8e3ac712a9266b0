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

#ifndef BOSONLAB_PARALLEL_HPP_
#define BOSONLAB_PARALLEL_HPP_

#include <optional>

namespace bosonlab {

// Sets the OpenMP thread count from `requested`, falling back to the
// BOSONLAB_THREADS environment variable. Returns the count now in effect.
int configure_threads(std::optional<int> requested);

}  // namespace bosonlab

#endif  // BOSONLAB_PARALLEL_HPP_
