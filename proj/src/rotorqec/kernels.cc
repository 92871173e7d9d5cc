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

#include "rotorqec/kernels.h"

#include <atomic>
#include <cstdlib>
#include <string>

namespace rotorqec::kernels {

namespace {

void axpy_scalar(cplx a, const cplx *x, cplx *y, size_t n) {
    for (size_t i = 0; i < n; i++) {
        y[i] += a * x[i];
    }
}

cplx dotu_scalar(const cplx *x, const cplx *y, size_t n) {
    cplx acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc += x[i] * y[i];
    }
    return acc;
}

cplx dotc_scalar(const cplx *x, const cplx *y, size_t n) {
    cplx acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

void mul_scalar(const cplx *x, const cplx *y, cplx *out, size_t n) {
    for (size_t i = 0; i < n; i++) {
        out[i] = x[i] * y[i];
    }
}

void abs2_diff_acc_scalar(const cplx *a, const cplx *b, double *acc, size_t n) {
    for (size_t i = 0; i < n; i++) {
        acc[i] += std::norm(a[i] - b[i]);
    }
}

const KernelTable SCALAR{
    "scalar", axpy_scalar, dotu_scalar, dotc_scalar, mul_scalar, abs2_diff_acc_scalar,
};

const KernelTable *pick_default() {
    const char *env = std::getenv("ROTORQEC_SIMD");
    if (env != nullptr && std::string(env) == "scalar") {
        return &SCALAR;
    }
    if (const KernelTable *t = avx2_table()) {
        return t;
    }
    return &SCALAR;
}

std::atomic<const KernelTable *> &current() {
    static std::atomic<const KernelTable *> table{pick_default()};
    return table;
}

}  // namespace

const KernelTable &scalar_table() {
    return SCALAR;
}

const KernelTable &active() {
    return *current().load(std::memory_order_acquire);
}

bool select(std::string_view name) {
    if (name == "scalar") {
        current().store(&SCALAR, std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        const KernelTable *t = avx2_table();
        if (t == nullptr) {
            return false;
        }
        current().store(t, std::memory_order_release);
        return true;
    }
    return false;
}

}  // namespace rotorqec::kernels
