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

#ifndef ROTORQEC_KERNELS_H
#define ROTORQEC_KERNELS_H

#include <complex>
#include <cstddef>
#include <string_view>

namespace rotorqec {

using cplx = std::complex<double>;

namespace kernels {

/// Inner loops shared by every dense operator routine.
///
/// Each entry has a scalar reference implementation. Vector variants are
/// chosen once at startup from the CPU feature bits, and can be forced back to
/// scalar with ROTORQEC_SIMD=scalar.
struct KernelTable {
    const char *name;
    /// y[i] += a * x[i]
    void (*axpy)(cplx a, const cplx *x, cplx *y, size_t n);
    /// sum x[i] * y[i]
    cplx (*dotu)(const cplx *x, const cplx *y, size_t n);
    /// sum conj(x[i]) * y[i]
    cplx (*dotc)(const cplx *x, const cplx *y, size_t n);
    /// out[i] = x[i] * y[i]; out may alias x or y.
    void (*mul)(const cplx *x, const cplx *y, cplx *out, size_t n);
    /// acc[i] += |a[i] - b[i]|^2
    void (*abs2_diff_acc)(const cplx *a, const cplx *b, double *acc, size_t n);
};

const KernelTable &scalar_table();
/// Null when the build or the CPU lacks AVX2+FMA.
const KernelTable *avx2_table();

/// The table used by the library. Thread-safe.
const KernelTable &active();
/// Overrides the active table ("scalar" or "avx2"). Returns false if unavailable.
bool select(std::string_view name);

inline void axpy(cplx a, const cplx *x, cplx *y, size_t n) {
    active().axpy(a, x, y, n);
}
inline cplx dotu(const cplx *x, const cplx *y, size_t n) {
    return active().dotu(x, y, n);
}
inline cplx dotc(const cplx *x, const cplx *y, size_t n) {
    return active().dotc(x, y, n);
}
inline void mul(const cplx *x, const cplx *y, cplx *out, size_t n) {
    active().mul(x, y, out, n);
}
inline void abs2_diff_acc(const cplx *a, const cplx *b, double *acc, size_t n) {
    active().abs2_diff_acc(a, b, acc, n);
}

}  // namespace kernels
}  // namespace rotorqec

#endif
