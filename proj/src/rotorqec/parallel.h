// Copyright 2026 The rotorqec Authors
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

#ifndef ROTORQEC_PARALLEL_H
#define ROTORQEC_PARALLEL_H

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rotorqec {

/// Worker count: hardware concurrency, capped by ROTORQEC_THREADS when set.
size_t default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers. Results must be
/// written by index so that output does not depend on scheduling. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(size_t n, size_t threads, const std::function<void(size_t)> &body);

}  // namespace rotorqec

#endif
