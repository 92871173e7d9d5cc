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

#ifndef ROTORQEC_ERROR_BASIS_H
#define ROTORQEC_ERROR_BASIS_H

#include "rotorqec/fock.h"

namespace rotorqec {

/// Wraps an angle into [-pi, pi).
double canonical_angle(double theta);

/// Heaviside step with the convention H(0) = 1.
inline int heaviside(int x) {
    return x >= 0 ? 1 : 0;
}

/// Index (k, theta) of a basis error: a k-fold number shift combined with a
/// rotation by theta. theta is canonicalized on construction.
class ErrorLabel {
   public:
    ErrorLabel() = default;
    ErrorLabel(int k, double theta);

    int k() const {
        return k_;
    }
    double theta() const {
        return theta_;
    }
    std::string str() const;

   private:
    int k_ = 0;
    double theta_ = 0;
};

/// e^{i theta n} Sigma^-_{|k|} for k < 0 and Sigma^+_k e^{i theta n} for k >= 0.
Operator make_error(const ErrorLabel &label, Dim d);

/// Two-level analog: sigma_- for k = -1, e^{i theta N} for k = 0, sigma_+ for k = 1.
/// Applies make_error(label, d) to a single-mode ket without forming the matrix.
Ket apply_error(const ErrorLabel &label, const Ket &state);

Operator make_qubit_error(int k, double theta);

/// Basis error projected onto output Fock states congruent to m modulo 2N.
Operator make_modular_error(const ErrorLabel &label, int m, int order, Dim d);
/// Same operator assembled as a weighted sum of 2N rotated basis errors.
Operator make_modular_error_fourier(const ErrorLabel &label, int m, int order, Dim d);

/// Numerical rank of {vec E_k(theta_j)} for |k| <= k_max and theta_j on a uniform grid of G points.
int basis_span_rank(int theta_grid_size, int k_max, Dim d);

}  // namespace rotorqec

#endif
