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

#include "rotorqec/parallel.h"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace rotorqec {

size_t default_thread_count() {
    size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("ROTORQEC_THREADS")) {
        try {
            long cap = std::stol(env);
            if (cap >= 1) {
                hw = std::min(hw, (size_t)cap);
            }
        } catch (const std::exception &) {
            // Unparseable values leave the default in place.
        }
    }
    return hw;
}

void parallel_for(size_t n, size_t threads, const std::function<void(size_t)> &body) {
    threads = std::max<size_t>(1, std::min(threads, n));
    if (threads <= 1) {
        for (size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_lock);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(n);
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace rotorqec
