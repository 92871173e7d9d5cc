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

#include "rotorqec/error_basis.h"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rotorqec {

double canonical_angle(double theta) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double t = std::fmod(theta + std::numbers::pi, two_pi);
    if (t < 0) {
        t += two_pi;
    }
    t -= std::numbers::pi;
    if (t >= std::numbers::pi) {
        t -= two_pi;
    }
    return t;
}

ErrorLabel::ErrorLabel(int k, double theta) : k_(k), theta_(canonical_angle(theta)) {
}

std::string ErrorLabel::str() const {
    std::ostringstream out;
    out << "E_" << k_ << "(" << theta_ << ")";
    return out.str();
}

Operator make_error(const ErrorLabel &label, Dim d) {
    int k = label.k();
    size_t a = (size_t)std::abs(k);
    if (a >= d.value()) {
        throw DimensionError("error shift |k| = " + std::to_string(a) + " not below dimension " +
                             std::to_string(d.value()));
    }
    Operator out(d, label.str());
    for (size_t n = 0; n + a < d.value(); n++) {
        if (k >= 0) {
            // Sigma^+_k e^{i theta n}: |n> -> e^{i theta n} |n + k>
            out(n + a, n) = std::polar(1.0, label.theta() * (double)n);
        } else {
            // e^{i theta n} Sigma^-_k: |n + k> -> e^{i theta n} |n>
            out(n, n + a) = std::polar(1.0, label.theta() * (double)n);
        }
    }
    return out;
}

Ket apply_error(const ErrorLabel &label, const Ket &state) {
    if (state.mode_dims().size() != 1) {
        throw DimensionError("apply_error acts on a single mode");
    }
    const long d = (long)state.size();
    const long k = label.k();
    Ket out(Dim((size_t)d));
    for (long src = std::max(0L, -k); src < d && src + k < d; src++) {
        long lower = std::min(src, src + k);
        out[(size_t)(src + k)] = std::polar(1.0, label.theta() * (double)lower) * state[(size_t)src];
    }
    return out;
}

Operator make_qubit_error(int k, double theta) {
    if (k < -1 || k > 1) {
        throw std::invalid_argument("qubit error shift must be -1, 0 or 1");
    }
    Operator out(Dim(2), "Q_" + std::to_string(k));
    if (k == -1) {
        out(0, 1) = 1;
    } else if (k == 1) {
        out(1, 0) = 1;
    } else {
        out(0, 0) = 1;
        out(1, 1) = std::polar(1.0, theta);
    }
    return out;
}

namespace {

void check_modular_args(int m, int order) {
    if (order < 1) {
        throw std::invalid_argument("code order must be positive");
    }
    if (m < 0 || m >= 2 * order) {
        throw std::invalid_argument("residue m must lie in [0, 2N)");
    }
}

}  // namespace

Operator make_modular_error(const ErrorLabel &label, int m, int order, Dim d) {
    check_modular_args(m, order);
    Operator e = make_error(label, d);
    Operator out(d, "Etilde^" + std::to_string(m) + "_" + label.str());
    size_t period = 2 * (size_t)order;
    for (size_t r = (size_t)m; r < d.value(); r += period) {
        for (size_t c = 0; c < d.value(); c++) {
            out(r, c) = e(r, c);
        }
    }
    return out;
}

Operator make_modular_error_fourier(const ErrorLabel &label, int m, int order, Dim d) {
    check_modular_args(m, order);
    int k = label.k();
    Operator out(d);
    for (int j = 0; j < 2 * order; j++) {
        double shift = std::numbers::pi * j / order;
        cplx w = std::polar(1.0 / (2 * order), -shift * (m - k * heaviside(k)));
        out = out + make_error(ErrorLabel(k, label.theta() + shift), d) * w;
    }
    out.set_label("Etilde^" + std::to_string(m) + "_" + label.str() + "[fourier]");
    return out;
}

int basis_span_rank(int theta_grid_size, int k_max, Dim d) {
    if (theta_grid_size < 1 || k_max < 0) {
        throw std::invalid_argument("grid size must be positive and k_max non-negative");
    }
    size_t dd = d.value();
    int kk = std::min<int>(k_max, (int)dd - 1);
    Eigen::Index rows = (Eigen::Index)((2 * kk + 1) * theta_grid_size);
    Eigen::MatrixXcd m(rows, (Eigen::Index)(dd * dd));
    Eigen::Index r = 0;
    for (int k = -kk; k <= kk; k++) {
        for (int j = 0; j < theta_grid_size; j++) {
            double theta = -std::numbers::pi + 2 * std::numbers::pi * j / theta_grid_size;
            Operator e = make_error(ErrorLabel(k, theta), d);
            for (size_t i = 0; i < dd * dd; i++) {
                m(r, (Eigen::Index)i) = e.entries()[i];
            }
            r++;
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto &s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0) {
        return 0;
    }
    double tol = s(0) * 1e-10 * (double)std::max<Eigen::Index>(m.rows(), m.cols());
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); i++) {
        rank += s(i) > tol;
    }
    return rank;
}

}  // namespace rotorqec
