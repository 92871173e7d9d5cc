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

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define ROTORQEC_HAVE_AVX2_BUILD 1
#endif

namespace rotorqec::kernels {

#ifdef ROTORQEC_HAVE_AVX2_BUILD

#define AVX2_FN __attribute__((target("avx2,fma")))

namespace {

// A __m256d holds two complex numbers laid out as [re0, im0, re1, im1].

AVX2_FN inline __m256d cmul2(__m256d x, __m256d y) {
    __m256d xr = _mm256_movedup_pd(x);
    __m256d xi = _mm256_permute_pd(x, 0xF);
    __m256d ys = _mm256_permute_pd(y, 0x5);
    return _mm256_fmaddsub_pd(xr, y, _mm256_mul_pd(xi, ys));
}

AVX2_FN void axpy_avx2(cplx a, const cplx *x, cplx *y, size_t n) {
    const double *xp = reinterpret_cast<const double *>(x);
    double *yp = reinterpret_cast<double *>(y);
    __m256d ar = _mm256_set1_pd(a.real());
    __m256d ai = _mm256_set1_pd(a.imag());
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d xs = _mm256_permute_pd(xv, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, prod));
    }
    for (; i < n; i++) {
        y[i] += a * x[i];
    }
}

// Accumulates A += re(x)*y and B += im(x)*swap(y); the caller combines lanes.
AVX2_FN inline void dot_accumulate(const cplx *x, const cplx *y, size_t n, __m256d &A, __m256d &B) {
    const double *xp = reinterpret_cast<const double *>(x);
    const double *yp = reinterpret_cast<const double *>(y);
    for (size_t i = 0; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        A = _mm256_fmadd_pd(_mm256_movedup_pd(xv), yv, A);
        B = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0xF), _mm256_permute_pd(yv, 0x5), B);
    }
}

AVX2_FN inline void lanes(__m256d v, double out[4]) {
    _mm256_storeu_pd(out, v);
}

AVX2_FN cplx dotu_avx2(const cplx *x, const cplx *y, size_t n) {
    __m256d A = _mm256_setzero_pd();
    __m256d B = _mm256_setzero_pd();
    dot_accumulate(x, y, n, A, B);
    double a[4], b[4];
    lanes(A, a);
    lanes(B, b);
    cplx acc((a[0] - b[0]) + (a[2] - b[2]), (a[1] + b[1]) + (a[3] + b[3]));
    if (n % 2 == 1) {
        acc += x[n - 1] * y[n - 1];
    }
    return acc;
}

AVX2_FN cplx dotc_avx2(const cplx *x, const cplx *y, size_t n) {
    __m256d A = _mm256_setzero_pd();
    __m256d B = _mm256_setzero_pd();
    dot_accumulate(x, y, n, A, B);
    double a[4], b[4];
    lanes(A, a);
    lanes(B, b);
    cplx acc((a[0] + b[0]) + (a[2] + b[2]), (a[1] - b[1]) + (a[3] - b[3]));
    if (n % 2 == 1) {
        acc += std::conj(x[n - 1]) * y[n - 1];
    }
    return acc;
}

AVX2_FN void mul_avx2(const cplx *x, const cplx *y, cplx *out, size_t n) {
    const double *xp = reinterpret_cast<const double *>(x);
    const double *yp = reinterpret_cast<const double *>(y);
    double *op = reinterpret_cast<double *>(out);
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d r = cmul2(_mm256_loadu_pd(xp + 2 * i), _mm256_loadu_pd(yp + 2 * i));
        _mm256_storeu_pd(op + 2 * i, r);
    }
    for (; i < n; i++) {
        out[i] = x[i] * y[i];
    }
}

AVX2_FN void abs2_diff_acc_avx2(const cplx *a, const cplx *b, double *acc, size_t n) {
    const double *ap = reinterpret_cast<const double *>(a);
    const double *bp = reinterpret_cast<const double *>(b);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i), _mm256_loadu_pd(bp + 2 * i));
        __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i + 4), _mm256_loadu_pd(bp + 2 * i + 4));
        // hadd gives [s0, s2, s1, s3]; reorder to [s0, s1, s2, s3].
        __m256d h = _mm256_hadd_pd(_mm256_mul_pd(d0, d0), _mm256_mul_pd(d1, d1));
        h = _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0));
        _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), h));
    }
    for (; i < n; i++) {
        acc[i] += std::norm(a[i] - b[i]);
    }
}

const KernelTable AVX2{
    "avx2", axpy_avx2, dotu_avx2, dotc_avx2, mul_avx2, abs2_diff_acc_avx2,
};

}  // namespace

const KernelTable *avx2_table() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? &AVX2 : nullptr;
}

#else

const KernelTable *avx2_table() {
    return nullptr;
}

#endif

}  // namespace rotorqec::kernels
