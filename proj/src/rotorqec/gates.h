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

#ifndef ROTORQEC_GATES_H
#define ROTORQEC_GATES_H

#include <string>
#include <vector>

#include "rotorqec/codes.h"
#include "rotorqec/fock.h"
#include "rotorqec/rational.h"

namespace rotorqec {

enum class GateKind { Z, X, XPrime, S, T, TPrime, Rl, RlPrime, P, CROT, CCROT, StabZ, StabX };

std::string gate_name(GateKind kind);
/// Case-insensitive parse of gate_name output. Throws std::invalid_argument.
GateKind parse_gate_kind(const std::string &name);
/// Number of modes the gate acts on (1, 2 or 3).
int gate_arity(GateKind kind);

struct GateSpec {
    GateKind kind = GateKind::Z;
    /// One order per mode: (N), (N, M) or (N, M, O).
    std::vector<int> orders{1};
    /// Level for Rl / RlPrime.
    int ell = 0;
    /// Angle for P.
    double phi = 0;

    void validate() const;
    std::string str() const;
};

GateSpec single_mode_gate(GateKind kind, int order, int ell = 0, double phi = 0);

/// Rotation polynomial of level l: unit(k) = sum_{i=1}^{l+1} (-2)^{i-1} binom(k, i), and the
/// gate exp(i pi unit(n/N) / 2^l).
struct PolynomialSpec {
    int ell = 0;
    int degree = 0;
    RationalPoly unit;
    /// unit / 2^l, in the variable x = n/N, in units of pi.
    RationalPoly phase;
};

PolynomialSpec discrete_rotation_polynomial(int ell);

/// Phase polynomial in n (units of pi) of a polynomial diagonal gate. Throws for other kinds.
RationalPoly gate_phase_poly(const GateSpec &spec);
bool is_diagonal_gate(GateKind kind);

/// Diagonal entries of a diagonal gate over the given mode dims.
std::vector<cplx> gate_diagonal(const GateSpec &spec, const std::vector<size_t> &mode_dims);

Operator make_gate(const GateSpec &spec, Dim d);
/// Multi-mode gates take one dim per mode. Dense operators above 8192 states are rejected.
Operator make_gate(const GateSpec &spec, const std::vector<size_t> &mode_dims);

struct LogicalAction {
    /// Logical dimension 2^modes; row-major matrices.
    size_t dim = 2;
    std::vector<cplx> matrix;
    std::vector<cplx> expected;
    /// ||(1 - P_L) G P_L|| (spectral).
    double leakage = 0;
    /// ||(G P_L)^dag (G P_L) - P_L|| on the logical space (Frobenius).
    double isometry_defect = 0;
    /// min over global phase of ||matrix - e^{i chi} expected|| (Frobenius).
    double deviation = 0;
};

/// Logical matrix <a_L|G|b_L> of the gate on `code` (tensor copies of it for multi-mode gates).
LogicalAction verify_logical_action(const GateSpec &spec, const RotationCode &code);

}  // namespace rotorqec

#endif
