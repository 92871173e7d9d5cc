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

#include "rotorqec/fock.h"

#include <algorithm>
#include <cmath>

namespace rotorqec {

Dim::Dim(size_t d) : d_(d) {
    if (d < 2) {
        throw DimensionError("dimension must be at least 2, got " + std::to_string(d));
    }
}

size_t total_size(const std::vector<size_t> &mode_dims) {
    size_t n = 1;
    for (size_t d : mode_dims) {
        n *= d;
    }
    return n;
}

size_t flat_index(const std::vector<size_t> &mode_dims, const std::vector<size_t> &digits) {
    size_t idx = 0;
    for (size_t m = 0; m < mode_dims.size(); m++) {
        idx = idx * mode_dims[m] + digits[m];
    }
    return idx;
}

std::vector<size_t> mode_digits(const std::vector<size_t> &mode_dims, size_t index) {
    std::vector<size_t> out(mode_dims.size());
    for (size_t m = mode_dims.size(); m-- > 0;) {
        out[m] = index % mode_dims[m];
        index /= mode_dims[m];
    }
    return out;
}

// ---- Ket ----

Ket::Ket(Dim d) : dims_{d.value()}, amps_(d.value()) {
}

Ket::Ket(std::vector<size_t> mode_dims) : dims_(std::move(mode_dims)), amps_(total_size(dims_)) {
}

Ket::Ket(std::vector<size_t> mode_dims, std::vector<cplx> amplitudes)
    : dims_(std::move(mode_dims)), amps_(std::move(amplitudes)) {
    if (amps_.size() != total_size(dims_)) {
        throw DimensionError("ket amplitude count does not match mode dims");
    }
}

double Ket::norm() const {
    return std::sqrt(kernels::dotc(amps_.data(), amps_.data(), amps_.size()).real());
}

Ket Ket::normalized() const {
    double n = norm();
    if (!(n > 0)) {
        throw std::domain_error("cannot normalize a zero ket");
    }
    return *this * cplx(1.0 / n);
}

cplx Ket::inner(const Ket &other) const {
    if (other.size() != size()) {
        throw DimensionError("ket size mismatch in inner product");
    }
    return kernels::dotc(amps_.data(), other.amps_.data(), amps_.size());
}

Ket Ket::operator+(const Ket &o) const {
    if (o.size() != size()) {
        throw DimensionError("ket size mismatch in sum");
    }
    Ket out = *this;
    kernels::axpy(1.0, o.amps_.data(), out.amps_.data(), size());
    return out;
}

Ket Ket::operator-(const Ket &o) const {
    if (o.size() != size()) {
        throw DimensionError("ket size mismatch in difference");
    }
    Ket out = *this;
    kernels::axpy(-1.0, o.amps_.data(), out.amps_.data(), size());
    return out;
}

Ket Ket::operator*(cplx s) const {
    Ket out = *this;
    for (auto &a : out.amps_) {
        a *= s;
    }
    return out;
}

Ket kron(const Ket &a, const Ket &b) {
    std::vector<size_t> dims = a.mode_dims();
    dims.insert(dims.end(), b.mode_dims().begin(), b.mode_dims().end());
    Ket out(dims);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == cplx(0)) {
            continue;
        }
        kernels::axpy(a[i], b.amplitudes().data(), out.amplitudes().data() + i * b.size(), b.size());
    }
    return out;
}

Ket fock_state(size_t n, Dim d) {
    if (n >= d.value()) {
        throw DimensionError("Fock state " + std::to_string(n) + " outside dimension " + std::to_string(d.value()));
    }
    Ket k(d);
    k[n] = 1;
    return k;
}

// ---- Operator ----

Operator::Operator(Dim d, std::string label)
    : dims_{d.value()}, n_(d.value()), a_(n_ * n_), label_(std::move(label)) {
}

Operator::Operator(std::vector<size_t> mode_dims, std::string label)
    : dims_(std::move(mode_dims)), n_(total_size(dims_)), a_(n_ * n_), label_(std::move(label)) {
}

Operator Operator::identity(Dim d) {
    return identity(std::vector<size_t>{d.value()});
}

Operator Operator::identity(const std::vector<size_t> &mode_dims) {
    Operator out(mode_dims, "I");
    for (size_t i = 0; i < out.n_; i++) {
        out(i, i) = 1;
    }
    return out;
}

Operator Operator::diagonal(const std::vector<size_t> &mode_dims, const std::vector<cplx> &diag, std::string label) {
    Operator out(mode_dims, std::move(label));
    if (diag.size() != out.n_) {
        throw DimensionError("diagonal length does not match operator size");
    }
    for (size_t i = 0; i < out.n_; i++) {
        out(i, i) = diag[i];
    }
    return out;
}

Operator Operator::adjoint() const {
    Operator out(dims_, label_.empty() ? label_ : "(" + label_ + ")^dag");
    for (size_t r = 0; r < n_; r++) {
        for (size_t c = 0; c < n_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Operator Operator::operator*(const Operator &o) const {
    if (o.n_ != n_) {
        throw DimensionError("operator size mismatch in product");
    }
    Operator out(dims_);
    // i-k-j order with zero skipping: shift and phase operators have about one
    // non-zero per row, so this stays O(n^2) for them.
    for (size_t i = 0; i < n_; i++) {
        const cplx *ar = row(i);
        cplx *dst = out.row(i);
        for (size_t k = 0; k < n_; k++) {
            if (ar[k] != cplx(0)) {
                kernels::axpy(ar[k], o.row(k), dst, n_);
            }
        }
    }
    return out;
}

Operator Operator::operator+(const Operator &o) const {
    if (o.n_ != n_) {
        throw DimensionError("operator size mismatch in sum");
    }
    Operator out = *this;
    kernels::axpy(1.0, o.a_.data(), out.a_.data(), a_.size());
    out.label_.clear();
    return out;
}

Operator Operator::operator-(const Operator &o) const {
    if (o.n_ != n_) {
        throw DimensionError("operator size mismatch in difference");
    }
    Operator out = *this;
    kernels::axpy(-1.0, o.a_.data(), out.a_.data(), a_.size());
    out.label_.clear();
    return out;
}

Operator Operator::operator*(cplx s) const {
    Operator out = *this;
    for (auto &v : out.a_) {
        v *= s;
    }
    return out;
}

Ket Operator::apply(const Ket &k) const {
    if (k.size() != n_) {
        throw DimensionError("ket size does not match operator");
    }
    Ket out(dims_);
    for (size_t r = 0; r < n_; r++) {
        out[r] = kernels::dotu(row(r), k.amplitudes().data(), n_);
    }
    return out;
}

bool Operator::is_diagonal() const {
    for (size_t r = 0; r < n_; r++) {
        for (size_t c = 0; c < n_; c++) {
            if (r != c && (*this)(r, c) != cplx(0)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<cplx> Operator::diagonal_entries() const {
    std::vector<cplx> out(n_);
    for (size_t i = 0; i < n_; i++) {
        out[i] = (*this)(i, i);
    }
    return out;
}

bool Operator::all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](cplx v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

double Operator::frobenius_norm() const {
    return std::sqrt(kernels::dotc(a_.data(), a_.data(), a_.size()).real());
}

Operator Operator::restricted(size_t keep) const {
    std::vector<size_t> kept;
    for (size_t i = 0; i < n_; i++) {
        auto dig = mode_digits(dims_, i);
        if (std::all_of(dig.begin(), dig.end(), [&](size_t v) {
                return v < keep;
            })) {
            kept.push_back(i);
        }
    }
    Operator out(std::vector<size_t>(dims_.size(), keep), label_);
    for (size_t r = 0; r < kept.size(); r++) {
        for (size_t c = 0; c < kept.size(); c++) {
            out(r, c) = (*this)(kept[r], kept[c]);
        }
    }
    return out;
}

Operator kron(const Operator &a, const Operator &b) {
    std::vector<size_t> dims = a.mode_dims();
    dims.insert(dims.end(), b.mode_dims().begin(), b.mode_dims().end());
    Operator out(dims);
    size_t nb = b.size();
    for (size_t ar = 0; ar < a.size(); ar++) {
        for (size_t ac = 0; ac < a.size(); ac++) {
            cplx v = a(ar, ac);
            if (v == cplx(0)) {
                continue;
            }
            for (size_t br = 0; br < nb; br++) {
                kernels::axpy(v, b.row(br), out.row(ar * nb + br) + ac * nb, nb);
            }
        }
    }
    return out;
}

Operator embed(const Operator &single, const std::vector<size_t> &mode_dims, size_t mode) {
    if (mode >= mode_dims.size() || single.size() != mode_dims[mode]) {
        throw DimensionError("single-mode operator does not match the target mode");
    }
    Operator out = mode == 0 ? single : Operator::identity(Dim(mode_dims[0]));
    for (size_t m = 1; m < mode_dims.size(); m++) {
        out = kron(out, m == mode ? single : Operator::identity(Dim(mode_dims[m])));
    }
    return out;
}

Operator make_number_op(Dim d) {
    Operator out(d, "n");
    for (size_t i = 0; i < d.value(); i++) {
        out(i, i) = (double)i;
    }
    return out;
}

Operator make_sigma(int k, Dim d) {
    size_t a = (size_t)std::abs(k);
    if (a >= d.value()) {
        throw DimensionError("shift |k| = " + std::to_string(a) + " not below dimension " + std::to_string(d.value()));
    }
    Operator out(d, k >= 0 ? "Sigma+_" + std::to_string(a) : "Sigma-_" + std::to_string(a));
    for (size_t n = 0; n + a < d.value(); n++) {
        if (k >= 0) {
            out(n + a, n) = 1;
        } else {
            out(n, n + a) = 1;
        }
    }
    return out;
}

Operator make_rotation(double theta, Dim d) {
    Operator out(d, "R(" + std::to_string(theta) + ")");
    for (size_t n = 0; n < d.value(); n++) {
        out(n, n) = std::polar(1.0, theta * (double)n);
    }
    return out;
}

Operator projector_first(size_t k, Dim d) {
    if (k > d.value()) {
        throw DimensionError("projector rank exceeds dimension");
    }
    Operator out(d, "P_" + std::to_string(k));
    for (size_t n = 0; n < k; n++) {
        out(n, n) = 1;
    }
    return out;
}

namespace {

double residual_impl(const Operator &a, const Operator &b, const std::vector<size_t> &pads) {
    if (a.size() != b.size() || a.mode_dims() != b.mode_dims()) {
        throw DimensionError("residual needs operators on the same space");
    }
    const auto &dims = a.mode_dims();
    if (pads.size() != dims.size()) {
        throw DimensionError("one pad per mode is required");
    }
    for (size_t m = 0; m < dims.size(); m++) {
        if (pads[m] >= dims[m]) {
            throw DimensionError("pad " + std::to_string(pads[m]) + " leaves no safe states in dimension " +
                                 std::to_string(dims[m]));
        }
    }
    size_t n = a.size();
    std::vector<double> col(n, 0.0);
    for (size_t r = 0; r < n; r++) {
        kernels::abs2_diff_acc(a.row(r), b.row(r), col.data(), n);
    }
    double worst = 0;
    for (size_t c = 0; c < n; c++) {
        auto dig = mode_digits(dims, c);
        bool safe = true;
        for (size_t m = 0; m < dims.size(); m++) {
            safe &= dig[m] < dims[m] - pads[m];
        }
        if (safe) {
            worst = std::max(worst, col[c]);
        }
    }
    return std::sqrt(worst);
}

}  // namespace

double residual_on_safe_subspace(const Operator &a, const Operator &b, size_t pad) {
    return residual_impl(a, b, std::vector<size_t>(a.mode_dims().size(), pad));
}

double residual_on_safe_subspace(const Operator &a, const Operator &b, const std::vector<size_t> &pads) {
    return residual_impl(a, b, pads);
}

}  // namespace rotorqec
