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

#ifndef ROTORQEC_PROPAGATION_H
#define ROTORQEC_PROPAGATION_H

#include <optional>
#include <string>
#include <vector>

#include "rotorqec/error_basis.h"
#include "rotorqec/gates.h"
#include "rotorqec/table_io.h"

namespace rotorqec {

/// One weighted basis error on a mode. A residue >= 0 selects the projected
/// error Etilde^residue (output states congruent to residue mod 2N).
struct ModeTerm {
    cplx weight{1};
    ErrorLabel label;
    int residue = -1;
    int order = 1;
};

/// Diagonal operator left over after pulling a gate through an error.
struct DiagonalFactor {
    enum class Kind { Identity, PhasePoly, ZExponent, CrossKerr };
    Kind kind = Kind::Identity;
    /// PhasePoly: exp(i pi poly(n)) on `modes[0]`.
    RationalPoly poly;
    /// ZExponent: exp(coefficient * e^{i pi n / order}) on `modes[0]`.
    cplx coefficient{0};
    int order = 1;
    /// CrossKerr: exp(i pi cross n_a n_b) on modes (modes[0], modes[1]).
    Rational cross;
    std::vector<size_t> modes;

    std::vector<cplx> diagonal(const std::vector<size_t> &mode_dims) const;
};

/// weight * P_rank E(label), added after the gate (only the X shift gate has one).
struct ExtraTerm {
    cplx weight{1};
    size_t projector_rank = 0;
    ErrorLabel label;
    size_t mode = 0;
};

/// G E = global_phase * F * (tensor over modes of sum of terms) * G (+ extra).
struct PropagationPrediction {
    cplx global_phase{1};
    std::vector<std::vector<ModeTerm>> out_labels;
    DiagonalFactor residual_factor;
    std::optional<ExtraTerm> extra_term;
};

/// Exact split of Delta(n) = p(n) - p(n - k) (units of pi) into a constant,
/// a linear coefficient and the degree >= 2 remainder.
struct PhaseSplit {
    Rational constant;
    Rational linear;
    RationalPoly nonlinear;
};
PhaseSplit split_conjugation_phase(const RationalPoly &phase_in_n, int k);

/// G E G^dag; diagonal G takes an O(n^2) path.
Operator conjugate(const Operator &g, const Operator &e);

/// One label per gate mode; clean modes carry (0, 0). CCROT supports one corrupted mode.
PropagationPrediction predict(const GateSpec &spec, const std::vector<ErrorLabel> &labels);
PropagationPrediction predict(const GateSpec &spec, const ErrorLabel &label);

/// global_phase * F * (tensor of mode sums), without the gate and extra term.
Operator materialize(const PropagationPrediction &pred, const std::vector<size_t> &mode_dims);
Operator extra_operator(const PropagationPrediction &pred, const std::vector<size_t> &mode_dims);

/// |k| + N * (grid shifts of the gate) + 2.
size_t default_pad(GateKind kind, int k, int order);

/// Safe-subspace residual between G E and the materialized prediction.
double verify(const GateSpec &spec, const std::vector<ErrorLabel> &labels, const std::vector<size_t> &mode_dims,
              const std::vector<size_t> &pads);
double verify(const GateSpec &spec, const ErrorLabel &label, Dim d, size_t pad);

/// Residual of e^{i pi f(n)} E = e^{i pi [f(n) - f(n-k)]} E e^{i pi f(n)} for a polynomial f in units of pi.
double verify_appendix_a(const RationalPoly &f_over_pi, const ErrorLabel &label, Dim d, size_t pad);
/// Residual of e^{i phi n} E_k(theta) = e^{i phi k H(k)} E_k(theta + phi).
double verify_linear_modification(double phi, const ErrorLabel &label, Dim d);

enum class QubitGate { Z, X, S, T, CZ, CCZ };
std::string qubit_gate_name(QubitGate g);
Operator make_qubit_gate(QubitGate g);
/// Residual of the two-level propagation rule for gate g and error Q_k(theta).
double verify_qubit(QubitGate g, int k, double theta);
/// Residual between the N = 1 bosonic prediction restricted to {|0>, |1>} per mode and the two-level rule.
/// kind is one of Z, X, XPrime, S, T, CROT, CCROT.
double compare_qubit_restriction(GateKind kind, int k, double theta);

struct SweepOptions {
    std::vector<GateKind> kinds{GateKind::Z,  GateKind::X,      GateKind::XPrime, GateKind::S,
                                GateKind::T,  GateKind::TPrime, GateKind::Rl,     GateKind::RlPrime,
                                GateKind::P,  GateKind::CROT,   GateKind::CCROT};
    std::vector<int> orders{1, 2, 3, 4};
    int k_max = 3;
    int theta_samples = 8;
    std::vector<int> ells{0, 1, 2, 3};
    std::vector<double> p_angles{0.7, 2.3};
    size_t dim = 48;
    size_t crot_dim = 16;
    size_t ccrot_dim = 12;
    /// Forced pad; 0 selects default_pad.
    size_t pad = 0;
};

struct PropagationCase {
    GateSpec gate;
    std::vector<ErrorLabel> labels;
    std::vector<size_t> dims;
    std::vector<size_t> pads;
};

struct PropagationRow {
    std::string gate;
    int order = 1;
    int k = 0;
    double theta = 0;
    size_t dim = 0;
    size_t pad = 0;
    double residual = 0;
};

/// Angles spread over [-pi, pi) with an irrational offset.
std::vector<double> sample_thetas(int count);
std::vector<PropagationCase> build_sweep(const SweepOptions &options);
std::vector<PropagationRow> run_sweep(const std::vector<PropagationCase> &cases, size_t threads);
CsvTable propagation_table(const std::vector<PropagationRow> &rows);

}  // namespace rotorqec

#endif
