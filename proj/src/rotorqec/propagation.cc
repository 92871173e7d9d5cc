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

#include "rotorqec/propagation.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rotorqec/parallel.h"

namespace rotorqec {

namespace {

constexpr double PI = std::numbers::pi;

void scale_rows(Operator &op, const std::vector<cplx> &diag) {
    for (size_t r = 0; r < op.size(); r++) {
        cplx s = diag[r];
        cplx *row = op.row(r);
        for (size_t c = 0; c < op.size(); c++) {
            row[c] *= s;
        }
    }
}

void scale_cols(Operator &op, const std::vector<cplx> &diag) {
    for (size_t r = 0; r < op.size(); r++) {
        kernels::mul(op.row(r), diag.data(), op.row(r), op.size());
    }
}

ModeTerm plain(const ErrorLabel &label, int order) {
    return ModeTerm{cplx(1), label, -1, order};
}

std::vector<ModeTerm> clean_mode() {
    return {plain(ErrorLabel(0, 0), 1)};
}

DiagonalFactor poly_factor(RationalPoly poly, size_t mode = 0) {
    DiagonalFactor f;
    if (poly.degree() < 0) {
        return f;
    }
    f.kind = DiagonalFactor::Kind::PhasePoly;
    f.poly = std::move(poly);
    f.modes = {mode};
    return f;
}

// Rotation shift pi * linear applied to theta.
double shifted_theta(double theta, const Rational &linear) {
    return theta + PI * linear.to_double();
}

PropagationPrediction predict_from_split(const RationalPoly &gate_poly, const ErrorLabel &e, int order) {
    int k = e.k();
    PhaseSplit s = split_conjugation_phase(gate_poly, k);
    PropagationPrediction p;
    p.global_phase = exp_i_pi(s.constant + s.linear * Rational(k * heaviside(k)));
    p.out_labels = {{plain(ErrorLabel(k, shifted_theta(e.theta(), s.linear)), order)}};
    p.residual_factor = poly_factor(s.nonlinear);
    return p;
}

PropagationPrediction predict_single(const GateSpec &spec, const ErrorLabel &e) {
    const int n = spec.orders[0];
    const int k = e.k();
    const double theta = e.theta();
    const int hk = heaviside(k);
    const Rational N(n);
    const Rational K(k);
    PropagationPrediction p;
    switch (spec.kind) {
        case GateKind::Z:
            p.global_phase = exp_i_pi(K / N);
            p.out_labels = {{plain(e, n)}};
            return p;
        case GateKind::StabZ:
            p.global_phase = exp_i_pi(Rational(2) * K / N);
            p.out_labels = {{plain(e, n)}};
            return p;
        case GateKind::X: {
            p.global_phase = std::polar(1.0, theta * n);
            p.out_labels = {{plain(e, n)}};
            if (k > 0) {
                ExtraTerm x;
                x.weight = std::polar(1.0, theta * (n - k) * heaviside(n - k));
                x.projector_rank = (size_t)k;
                x.label = ErrorLabel(k - n, theta);
                p.extra_term = x;
            }
            return p;
        }
        case GateKind::XPrime: {
            int two_n = 2 * n;
            int r = ((k % two_n) + two_n) % two_n;
            std::vector<ModeTerm> terms;
            for (int l = 0; l < n; l++) {
                int x = (std::max(r - n, 0) <= l && l < std::min(r, n)) ? two_n : 0;
                int p_plus = n - k * hk + (k - x) * heaviside(k - x);
                int p_minus = -n - k * hk + (k + x) * heaviside(k + x);
                terms.push_back(ModeTerm{std::polar(1.0, theta * p_plus), ErrorLabel(k - x, theta), l, n});
                terms.push_back(ModeTerm{std::polar(1.0, theta * p_minus), ErrorLabel(k + x, theta), l + n, n});
            }
            p.out_labels = {terms};
            return p;
        }
        case GateKind::S: {
            // phi_S = pi k^2 / N^2 (H(k) - 1/2), theta' = theta + pi k / N^2
            Rational k2n2 = K * K / (N * N);
            p.global_phase = exp_i_pi(k2n2 * (Rational(hk) - Rational(1, 2)));
            p.out_labels = {{plain(ErrorLabel(k, shifted_theta(theta, K / (N * N))), n)}};
            return p;
        }
        case GateKind::T: {
            // phi_T = pi k^4 / N^4 (H(k) - 1/4), F = exp[i pi/(4N^4) (4k n^3 - 6k^2 n^2)], theta' = theta + pi k^3/N^4
            Rational n4 = pow(N, 4);
            p.global_phase = exp_i_pi(pow(K, 4) / n4 * (Rational(hk) - Rational(1, 4)));
            p.out_labels = {{plain(ErrorLabel(k, shifted_theta(theta, pow(K, 3) / n4)), n)}};
            p.residual_factor = poly_factor(RationalPoly({Rational(0), Rational(0), Rational(-6) * K * K / (Rational(4) * n4),
                                                          Rational(4) * K / (Rational(4) * n4)}));
            return p;
        }
        case GateKind::TPrime: {
            // phi'_T = pi/4 [2k^3/N^3 - k^2/N^2 - 2k/N + (2k^2/N^2 - 6k^3/N^3) H(k)]
            // F' = exp[i 3 pi k n^2 / (2 N^3)], theta' = theta + pi k/(2N^2) - 3 pi k^2/(2N^3)
            Rational n2 = N * N, n3 = N * N * N;
            Rational phase = Rational(1, 4) * (Rational(2) * pow(K, 3) / n3 - K * K / n2 - Rational(2) * K / N +
                                               (Rational(2) * K * K / n2 - Rational(6) * pow(K, 3) / n3) * Rational(hk));
            p.global_phase = exp_i_pi(phase);
            Rational lin = K / (Rational(2) * n2) - Rational(3) * K * K / (Rational(2) * n3);
            p.out_labels = {{plain(ErrorLabel(k, shifted_theta(theta, lin)), n)}};
            p.residual_factor = poly_factor(RationalPoly::monomial(Rational(3) * K / (Rational(2) * n3), 2));
            return p;
        }
        case GateKind::Rl:
        case GateKind::RlPrime:
            return predict_from_split(gate_phase_poly(spec), e, n);
        case GateKind::P: {
            // exp[i phi/2 (e^{-i pi k/N} - 1) Z_N]
            p.out_labels = {{plain(e, n)}};
            p.residual_factor.kind = DiagonalFactor::Kind::ZExponent;
            p.residual_factor.coefficient = cplx(0, spec.phi / 2) * (exp_i_pi(-K / N) - 1.0);
            p.residual_factor.order = n;
            p.residual_factor.modes = {0};
            return p;
        }
        case GateKind::StabX: {
            // Sigma^-_{2N} E_k(theta) = e^{i 2N theta} E_k(theta) Sigma^-_{2N} + e^{i theta (2N-k) H(2N-k)} P_k E_{k-2N}(theta)
            p.global_phase = std::polar(1.0, theta * 2 * n);
            p.out_labels = {{plain(e, n)}};
            if (k > 0) {
                ExtraTerm x;
                x.weight = std::polar(1.0, theta * (2 * n - k) * heaviside(2 * n - k));
                x.projector_rank = (size_t)k;
                x.label = ErrorLabel(k - 2 * n, theta);
                p.extra_term = x;
            }
            return p;
        }
        default:
            throw std::invalid_argument("not a single-mode gate");
    }
}

PropagationPrediction predict_crot(const GateSpec &spec, const std::vector<ErrorLabel> &labels) {
    const Rational nm(spec.orders[0] * spec.orders[1]);
    const int k1 = labels[0].k(), k2 = labels[1].k();
    const double t1 = labels[0].theta(), t2 = labels[1].theta();
    PropagationPrediction p;
    // e^{+i pi k1 k2 (H(k2) - H(-k1)) / NM}; both rotations pick up the other mode's shift.
    p.global_phase = exp_i_pi(Rational(k1) * Rational(k2) * Rational(heaviside(k2) - heaviside(-k1)) / nm);
    p.out_labels = {{plain(ErrorLabel(k1, shifted_theta(t1, Rational(k2) / nm)), spec.orders[0])},
                    {plain(ErrorLabel(k2, shifted_theta(t2, Rational(k1) / nm)), spec.orders[1])}};
    return p;
}

PropagationPrediction predict_ccrot(const GateSpec &spec, const std::vector<ErrorLabel> &labels) {
    size_t hit = 3;
    for (size_t m = 0; m < 3; m++) {
        if (labels[m].k() != 0 || labels[m].theta() != 0) {
            if (hit != 3) {
                throw std::invalid_argument("CCROT prediction supports an error on a single mode");
            }
            hit = m;
        }
    }
    PropagationPrediction p;
    p.out_labels = {clean_mode(), clean_mode(), clean_mode()};
    if (hit == 3) {
        return p;
    }
    p.out_labels[hit] = {plain(labels[hit], spec.orders[hit])};
    int k = labels[hit].k();
    if (k != 0) {
        std::vector<size_t> others;
        for (size_t m = 0; m < 3; m++) {
            if (m != hit) {
                others.push_back(m);
            }
        }
        p.residual_factor.kind = DiagonalFactor::Kind::CrossKerr;
        p.residual_factor.cross = Rational(k) / Rational(spec.orders[0] * spec.orders[1] * spec.orders[2]);
        p.residual_factor.modes = others;
    }
    return p;
}

Operator mode_sum(const std::vector<ModeTerm> &terms, Dim d) {
    Operator out(d);
    for (const auto &t : terms) {
        Operator e = t.residue >= 0 ? make_modular_error(t.label, t.residue, t.order, d) : make_error(t.label, d);
        out = out + e * t.weight;
    }
    return out;
}

}  // namespace

std::vector<cplx> DiagonalFactor::diagonal(const std::vector<size_t> &mode_dims) const {
    size_t total = total_size(mode_dims);
    std::vector<cplx> out(total, cplx(1));
    if (kind == Kind::Identity) {
        return out;
    }
    for (size_t i = 0; i < total; i++) {
        auto dig = mode_digits(mode_dims, i);
        switch (kind) {
            case Kind::PhasePoly:
                out[i] = exp_i_pi(poly.eval_mod2((int64_t)dig[modes[0]]));
                break;
            case Kind::ZExponent:
                out[i] = std::exp(coefficient * exp_i_pi(Rational((int64_t)dig[modes[0]], order)));
                break;
            case Kind::CrossKerr:
                out[i] = exp_i_pi(cross * Rational((int64_t)(dig[modes[0]] * dig[modes[1]])));
                break;
            case Kind::Identity:
                break;
        }
    }
    return out;
}

PhaseSplit split_conjugation_phase(const RationalPoly &phase_in_n, int k) {
    RationalPoly delta = phase_in_n - phase_in_n.shifted(Rational(k));
    return PhaseSplit{delta.coefficient(0), delta.coefficient(1), delta.band(2, std::max(2, delta.degree()))};
}

Operator conjugate(const Operator &g, const Operator &e) {
    if (g.size() != e.size()) {
        throw DimensionError("conjugation needs operators of equal size");
    }
    if (g.is_diagonal()) {
        std::vector<cplx> gd = g.diagonal_entries();
        std::vector<cplx> gc(gd.size());
        for (size_t i = 0; i < gd.size(); i++) {
            gc[i] = std::conj(gd[i]);
        }
        Operator out = e;
        scale_rows(out, gd);
        scale_cols(out, gc);
        return out;
    }
    return g * e * g.adjoint();
}

PropagationPrediction predict(const GateSpec &spec, const std::vector<ErrorLabel> &labels) {
    spec.validate();
    if ((int)labels.size() != gate_arity(spec.kind)) {
        throw std::invalid_argument(gate_name(spec.kind) + " needs one error label per mode");
    }
    switch (spec.kind) {
        case GateKind::CROT:
            return predict_crot(spec, labels);
        case GateKind::CCROT:
            return predict_ccrot(spec, labels);
        default:
            return predict_single(spec, labels[0]);
    }
}

PropagationPrediction predict(const GateSpec &spec, const ErrorLabel &label) {
    std::vector<ErrorLabel> labels((size_t)gate_arity(spec.kind), ErrorLabel(0, 0));
    labels[0] = label;
    return predict(spec, labels);
}

Operator materialize(const PropagationPrediction &pred, const std::vector<size_t> &mode_dims) {
    if (pred.out_labels.size() != mode_dims.size()) {
        throw DimensionError("prediction mode count does not match dims");
    }
    Operator out = mode_sum(pred.out_labels[0], Dim(mode_dims[0]));
    for (size_t m = 1; m < mode_dims.size(); m++) {
        out = kron(out, mode_sum(pred.out_labels[m], Dim(mode_dims[m])));
    }
    std::vector<cplx> f = pred.residual_factor.diagonal(mode_dims);
    for (auto &v : f) {
        v *= pred.global_phase;
    }
    scale_rows(out, f);
    return out;
}

Operator extra_operator(const PropagationPrediction &pred, const std::vector<size_t> &mode_dims) {
    Operator out(mode_dims);
    if (!pred.extra_term) {
        return out;
    }
    const ExtraTerm &x = *pred.extra_term;
    Dim d(mode_dims[x.mode]);
    Operator single = projector_first(std::min(x.projector_rank, d.value()), d) * make_error(x.label, d) * x.weight;
    return embed(single, mode_dims, x.mode);
}

size_t default_pad(GateKind kind, int k, int order) {
    size_t shifts = 0;
    if (kind == GateKind::X) {
        shifts = 1;
    } else if (kind == GateKind::XPrime || kind == GateKind::StabX) {
        shifts = 2;
    }
    return (size_t)std::abs(k) + (size_t)order * shifts + 2;
}

double verify(const GateSpec &spec, const std::vector<ErrorLabel> &labels, const std::vector<size_t> &mode_dims,
              const std::vector<size_t> &pads) {
    PropagationPrediction pred = predict(spec, labels);
    Operator e_in = make_error(labels[0], Dim(mode_dims[0]));
    for (size_t m = 1; m < mode_dims.size(); m++) {
        e_in = kron(e_in, make_error(labels[m], Dim(mode_dims[m])));
    }
    Operator rhs = materialize(pred, mode_dims);
    Operator lhs;
    if (is_diagonal_gate(spec.kind)) {
        std::vector<cplx> g = gate_diagonal(spec, mode_dims);
        lhs = e_in;
        scale_rows(lhs, g);
        scale_cols(rhs, g);
    } else {
        Operator g = make_gate(spec, mode_dims);
        lhs = g * e_in;
        rhs = rhs * g;
    }
    if (pred.extra_term) {
        rhs = rhs + extra_operator(pred, mode_dims);
    }
    return residual_on_safe_subspace(lhs, rhs, pads);
}

double verify(const GateSpec &spec, const ErrorLabel &label, Dim d, size_t pad) {
    std::vector<ErrorLabel> labels((size_t)gate_arity(spec.kind), ErrorLabel(0, 0));
    labels[0] = label;
    std::vector<size_t> dims((size_t)gate_arity(spec.kind), d.value());
    std::vector<size_t> pads(dims.size(), pad);
    return verify(spec, labels, dims, pads);
}

double verify_appendix_a(const RationalPoly &f_over_pi, const ErrorLabel &label, Dim d, size_t pad) {
    size_t n = d.value();
    std::vector<cplx> gate(n), delta(n);
    RationalPoly diff = f_over_pi - f_over_pi.shifted(Rational(label.k()));
    for (size_t i = 0; i < n; i++) {
        gate[i] = exp_i_pi(f_over_pi.eval_mod2((int64_t)i));
        delta[i] = exp_i_pi(diff.eval_mod2((int64_t)i));
    }
    Operator e = make_error(label, d);
    Operator lhs = e;
    scale_rows(lhs, gate);
    Operator rhs = e;
    scale_rows(rhs, delta);
    scale_cols(rhs, gate);
    return residual_on_safe_subspace(lhs, rhs, pad);
}

double verify_linear_modification(double phi, const ErrorLabel &label, Dim d) {
    Operator lhs = make_rotation(phi, d) * make_error(label, d);
    int k = label.k();
    Operator rhs = make_error(ErrorLabel(k, label.theta() + phi), d) * std::polar(1.0, phi * k * heaviside(k));
    return residual_on_safe_subspace(lhs, rhs, (size_t)std::abs(k));
}

std::string qubit_gate_name(QubitGate g) {
    switch (g) {
        case QubitGate::Z:
            return "Z";
        case QubitGate::X:
            return "X";
        case QubitGate::S:
            return "S";
        case QubitGate::T:
            return "T";
        case QubitGate::CZ:
            return "CZ";
        case QubitGate::CCZ:
            return "CCZ";
    }
    return "?";
}

Operator make_qubit_gate(QubitGate g) {
    Dim two(2);
    switch (g) {
        case QubitGate::Z:
            return Operator::diagonal({2}, {1, -1}, "Z");
        case QubitGate::X: {
            Operator x(two, "X");
            x(0, 1) = 1;
            x(1, 0) = 1;
            return x;
        }
        case QubitGate::S:
            return Operator::diagonal({2}, {1, cplx(0, 1)}, "S");
        case QubitGate::T:
            return Operator::diagonal({2}, {1, exp_i_pi(Rational(1, 4))}, "T");
        case QubitGate::CZ:
            return Operator::diagonal({2, 2}, {1, 1, 1, -1}, "CZ");
        case QubitGate::CCZ:
            return Operator::diagonal({2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, -1}, "CCZ");
    }
    throw std::invalid_argument("unknown qubit gate");
}

namespace {

// The propagated error of the two-level rules, without the trailing gate.
Operator qubit_rule(QubitGate g, int k, double theta) {
    Operator q = make_qubit_error(k, theta);
    switch (g) {
        case QubitGate::Z:
            return q * exp_i_pi(Rational(k));
        case QubitGate::X:
            return make_qubit_error(-k, -theta) * std::polar(1.0, k == 0 ? theta : 0.0);
        case QubitGate::S:
            return q * exp_i_pi(Rational(k, 2));
        case QubitGate::T:
            return q * exp_i_pi(Rational(k, 4));
        case QubitGate::CZ:
            return kron(q, make_qubit_error(0, k * PI));
        case QubitGate::CCZ:
            return kron(q, Operator::diagonal({2, 2}, {1, 1, 1, exp_i_pi(Rational(-k))}));
    }
    throw std::invalid_argument("unknown qubit gate");
}

}  // namespace

double verify_qubit(QubitGate g, int k, double theta) {
    Operator gate = make_qubit_gate(g);
    Operator e = make_qubit_error(k, theta);
    size_t modes = gate.mode_dims().size();
    for (size_t m = 1; m < modes; m++) {
        e = kron(e, Operator::identity(Dim(2)));
    }
    Operator lhs = gate * e;
    Operator rhs = qubit_rule(g, k, theta) * gate;
    return residual_on_safe_subspace(lhs, rhs, std::vector<size_t>(modes, 0));
}

double compare_qubit_restriction(GateKind kind, int k, double theta) {
    if (k < -1 || k > 1) {
        throw std::invalid_argument("two-level comparison needs k in {-1, 0, 1}");
    }
    GateSpec spec;
    spec.kind = kind;
    spec.orders.assign((size_t)gate_arity(kind), 1);
    const size_t d = gate_arity(kind) == 1 ? 8 : 6;
    std::vector<size_t> dims(spec.orders.size(), d);
    PropagationPrediction pred = predict(spec, ErrorLabel(k, theta));
    Operator bos = materialize(pred, dims);

    auto diff = [](const Operator &a, const Operator &b) {
        return residual_on_safe_subspace(a, b, std::vector<size_t>(a.mode_dims().size(), 0));
    };
    switch (kind) {
        case GateKind::Z:
            return diff(bos.restricted(2), qubit_rule(QubitGate::Z, k, theta));
        case GateKind::S:
            return diff(bos.restricted(2), qubit_rule(QubitGate::S, k, theta));
        case GateKind::T:
            return diff(bos.restricted(2), qubit_rule(QubitGate::T, k, theta));
        case GateKind::XPrime:
            return diff(bos.restricted(2), qubit_rule(QubitGate::X, k, theta));
        case GateKind::CROT:
            return diff(bos.restricted(2), qubit_rule(QubitGate::CZ, k, theta));
        case GateKind::CCROT:
            return diff(bos.restricted(2), qubit_rule(QubitGate::CCZ, k, theta));
        case GateKind::X: {
            // e^{i theta} Q_k sigma_- + [k > 0] e^{i theta (1-k) H(1-k)} P_k Q_{k-1}
            Operator sm(Dim(2));
            sm(0, 1) = 1;
            Operator q = make_qubit_error(k, theta);
            Operator rule = q * sm * std::polar(1.0, theta);
            if (k > 0) {
                rule = rule + projector_first((size_t)k, Dim(2)) * make_qubit_error(k - 1, theta) *
                                  std::polar(1.0, theta * (1 - k) * heaviside(1 - k));
            }
            Operator full = bos * make_gate(spec, Dim(d)) + extra_operator(pred, dims);
            return diff(full.restricted(2), rule);
        }
        default:
            throw std::invalid_argument(gate_name(kind) + " has no two-level analog");
    }
}

std::vector<double> sample_thetas(int count) {
    const double offset = (std::sqrt(5.0) - 1) / 2;
    std::vector<double> out;
    for (int j = 0; j < count; j++) {
        out.push_back(canonical_angle(-PI + 2 * PI * (j + offset) / count));
    }
    return out;
}

std::vector<PropagationCase> build_sweep(const SweepOptions &o) {
    std::vector<PropagationCase> cases;
    std::vector<double> thetas = sample_thetas(o.theta_samples);
    for (GateKind kind : o.kinds) {
        for (int n : o.orders) {
            std::vector<GateSpec> specs;
            GateSpec base;
            base.kind = kind;
            base.orders.assign((size_t)gate_arity(kind), n);
            if (kind == GateKind::Rl || kind == GateKind::RlPrime) {
                for (int l : o.ells) {
                    base.ell = l;
                    specs.push_back(base);
                }
            } else if (kind == GateKind::P) {
                for (double a : o.p_angles) {
                    base.phi = a;
                    specs.push_back(base);
                }
            } else {
                specs.push_back(base);
            }
            size_t d = kind == GateKind::CROT ? o.crot_dim : kind == GateKind::CCROT ? o.ccrot_dim : o.dim;
            for (const auto &spec : specs) {
                for (int k = -o.k_max; k <= o.k_max; k++) {
                    for (double t : thetas) {
                        PropagationCase c;
                        c.gate = spec;
                        c.labels.assign(spec.orders.size(), ErrorLabel(0, 0));
                        c.labels[0] = ErrorLabel(k, t);
                        c.dims.assign(spec.orders.size(), d);
                        for (size_t m = 0; m < spec.orders.size(); m++) {
                            c.pads.push_back(o.pad ? o.pad : default_pad(kind, c.labels[m].k(), n));
                        }
                        cases.push_back(std::move(c));
                    }
                }
            }
        }
    }
    return cases;
}

namespace {

std::string gate_tag(const GateSpec &g) {
    std::ostringstream out;
    out << gate_name(g.kind);
    if (g.kind == GateKind::Rl || g.kind == GateKind::RlPrime) {
        out << "(l=" << g.ell << ")";
    } else if (g.kind == GateKind::P) {
        out << "(phi=" << format_double(g.phi) << ")";
    }
    return out.str();
}

}  // namespace

std::vector<PropagationRow> run_sweep(const std::vector<PropagationCase> &cases, size_t threads) {
    std::vector<PropagationRow> rows(cases.size());
    parallel_for(cases.size(), threads, [&](size_t i) {
        const auto &c = cases[i];
        PropagationRow r;
        r.gate = gate_tag(c.gate);
        r.order = c.gate.orders[0];
        r.k = c.labels[0].k();
        r.theta = c.labels[0].theta();
        r.dim = c.dims[0];
        r.pad = c.pads[0];
        r.residual = verify(c.gate, c.labels, c.dims, c.pads);
        rows[i] = r;
    });
    return rows;
}

CsvTable propagation_table(const std::vector<PropagationRow> &rows) {
    CsvTable t;
    t.schema = "propagation";
    t.columns = {"gate", "N", "k", "theta", "d", "pad", "residual"};
    for (const auto &r : rows) {
        t.add_row({r.gate, std::to_string(r.order), std::to_string(r.k), format_double(r.theta), std::to_string(r.dim),
                   std::to_string(r.pad), format_double(r.residual)});
    }
    return t;
}

}  // namespace rotorqec
