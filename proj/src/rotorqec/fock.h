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

#ifndef ROTORQEC_FOCK_H
#define ROTORQEC_FOCK_H

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotorqec/kernels.h"

namespace rotorqec {

/// Raised when a requested object does not fit in the truncated space.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Truncation dimension of one mode; Fock states 0..d-1.
class Dim {
   public:
    explicit Dim(size_t d);
    size_t value() const {
        return d_;
    }
    bool operator==(const Dim &o) const = default;

   private:
    size_t d_;
};

/// Row-major index of a multi-mode basis state; mode 0 is the most significant digit.
size_t flat_index(const std::vector<size_t> &mode_dims, const std::vector<size_t> &digits);
std::vector<size_t> mode_digits(const std::vector<size_t> &mode_dims, size_t index);
size_t total_size(const std::vector<size_t> &mode_dims);

class Ket {
   public:
    Ket() = default;
    explicit Ket(Dim d);
    explicit Ket(std::vector<size_t> mode_dims);
    Ket(std::vector<size_t> mode_dims, std::vector<cplx> amplitudes);

    size_t size() const {
        return amps_.size();
    }
    const std::vector<size_t> &mode_dims() const {
        return dims_;
    }
    cplx &operator[](size_t i) {
        return amps_[i];
    }
    cplx operator[](size_t i) const {
        return amps_[i];
    }
    const std::vector<cplx> &amplitudes() const {
        return amps_;
    }
    std::vector<cplx> &amplitudes() {
        return amps_;
    }

    double norm() const;
    /// Throws std::domain_error on a zero vector.
    Ket normalized() const;
    /// <this|other>
    cplx inner(const Ket &other) const;

    Ket operator+(const Ket &o) const;
    Ket operator-(const Ket &o) const;
    Ket operator*(cplx s) const;

   private:
    std::vector<size_t> dims_;
    std::vector<cplx> amps_;
};

Ket kron(const Ket &a, const Ket &b);
Ket fock_state(size_t n, Dim d);

/// Dense square matrix over a (possibly multi-mode) truncated Fock space.
class Operator {
   public:
    Operator() = default;
    explicit Operator(Dim d, std::string label = {});
    explicit Operator(std::vector<size_t> mode_dims, std::string label = {});

    static Operator identity(Dim d);
    static Operator identity(const std::vector<size_t> &mode_dims);
    static Operator diagonal(const std::vector<size_t> &mode_dims, const std::vector<cplx> &diag,
                             std::string label = {});

    size_t size() const {
        return n_;
    }
    const std::vector<size_t> &mode_dims() const {
        return dims_;
    }
    cplx &operator()(size_t r, size_t c) {
        return a_[r * n_ + c];
    }
    cplx operator()(size_t r, size_t c) const {
        return a_[r * n_ + c];
    }
    const cplx *row(size_t r) const {
        return a_.data() + r * n_;
    }
    cplx *row(size_t r) {
        return a_.data() + r * n_;
    }
    const std::vector<cplx> &entries() const {
        return a_;
    }
    const std::string &label() const {
        return label_;
    }
    Operator &set_label(std::string label) {
        label_ = std::move(label);
        return *this;
    }

    Operator adjoint() const;
    Operator operator*(const Operator &o) const;
    Operator operator+(const Operator &o) const;
    Operator operator-(const Operator &o) const;
    Operator operator*(cplx s) const;
    Ket apply(const Ket &k) const;

    bool is_diagonal() const;
    std::vector<cplx> diagonal_entries() const;
    bool all_finite() const;
    double frobenius_norm() const;
    /// Top-left block over the basis states whose every mode digit is < keep.
    Operator restricted(size_t keep) const;

   private:
    std::vector<size_t> dims_;
    size_t n_ = 0;
    std::vector<cplx> a_;
    std::string label_;
};

Operator kron(const Operator &a, const Operator &b);
/// Operator on the full space from a single-mode operator acting on `mode`.
Operator embed(const Operator &single, const std::vector<size_t> &mode_dims, size_t mode);

Operator make_number_op(Dim d);
/// Sigma^+_k for k > 0, Sigma^-_{|k|} for k < 0, identity for k = 0.
Operator make_sigma(int k, Dim d);
Operator make_rotation(double theta, Dim d);
Operator projector_first(size_t k, Dim d);

/// max over basis states |n> with n < d - pad of ||(A - B)|n>||.
double residual_on_safe_subspace(const Operator &a, const Operator &b, size_t pad);
/// Multi-mode variant: a column is safe when every mode digit n_i < d_i - pad_i.
double residual_on_safe_subspace(const Operator &a, const Operator &b, const std::vector<size_t> &pads);

}  // namespace rotorqec

#endif
