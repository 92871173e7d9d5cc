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

#include "rotorqec/gates.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rotorqec {

namespace {

constexpr size_t MAX_DENSE_STATES = 8192;

struct KindName {
    GateKind kind;
    const char *name;
};

constexpr KindName KIND_NAMES[] = {
    {GateKind::Z, "Z"},         {GateKind::X, "X"},         {GateKind::XPrime, "XPrime"},
    {GateKind::S, "S"},         {GateKind::T, "T"},         {GateKind::TPrime, "TPrime"},
    {GateKind::Rl, "Rl"},       {GateKind::RlPrime, "RlPrime"}, {GateKind::P, "P"},
    {GateKind::CROT, "CROT"},   {GateKind::CCROT, "CCROT"}, {GateKind::StabZ, "StabZ"},
    {GateKind::StabX, "StabX"},
};

std::string lower(std::string s) {
    for (auto &c : s) {
        c = (char)std::tolower((unsigned char)c);
    }
    return s;
}

}  // namespace

std::string gate_name(GateKind kind) {
    for (const auto &kn : KIND_NAMES) {
        if (kn.kind == kind) {
            return kn.name;
        }
    }
    return "?";
}

GateKind parse_gate_kind(const std::string &name) {
    for (const auto &kn : KIND_NAMES) {
        if (lower(kn.name) == lower(name)) {
            return kn.kind;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + name + "'");
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CROT:
            return 2;
        case GateKind::CCROT:
            return 3;
        default:
            return 1;
    }
}

bool is_diagonal_gate(GateKind kind) {
    return kind != GateKind::X && kind != GateKind::XPrime && kind != GateKind::StabX;
}

void GateSpec::validate() const {
    if ((int)orders.size() != gate_arity(kind)) {
        throw std::invalid_argument(gate_name(kind) + " needs " + std::to_string(gate_arity(kind)) + " orders, got " +
                                    std::to_string(orders.size()));
    }
    for (int o : orders) {
        if (o < 1) {
            throw std::invalid_argument("gate orders must be positive");
        }
    }
    if (ell < 0) {
        throw std::invalid_argument("rotation level l must be non-negative");
    }
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase angle must be finite");
    }
}

std::string GateSpec::str() const {
    std::ostringstream out;
    out << gate_name(kind) << "[";
    for (size_t i = 0; i < orders.size(); i++) {
        out << (i ? "," : "") << orders[i];
    }
    out << "]";
    if (kind == GateKind::Rl || kind == GateKind::RlPrime) {
        out << "(l=" << ell << ")";
    }
    if (kind == GateKind::P) {
        out << "(phi=" << phi << ")";
    }
    return out.str();
}

GateSpec single_mode_gate(GateKind kind, int order, int ell, double phi) {
    GateSpec g;
    g.kind = kind;
    g.orders = {order};
    g.ell = ell;
    g.phi = phi;
    g.validate();
    return g;
}

PolynomialSpec discrete_rotation_polynomial(int ell) {
    if (ell < 0) {
        throw std::invalid_argument("rotation level l must be non-negative");
    }
    RationalPoly unit;
    // binom(k, i) = k (k-1) ... (k-i+1) / i!
    RationalPoly falling({Rational(1)});
    for (int i = 1; i <= ell + 1; i++) {
        // falling *= (k - (i-1))
        std::vector<Rational> next((size_t)falling.degree() + 2, Rational(0));
        for (int j = 0; j <= falling.degree(); j++) {
            next[(size_t)j + 1] += falling.coefficient(j);
            next[(size_t)j] -= falling.coefficient(j) * Rational(i - 1);
        }
        falling = RationalPoly(next);
        Rational weight = pow(Rational(-2), i - 1);
        Rational fact(1);
        for (int t = 2; t <= i; t++) {
            fact *= Rational(t);
        }
        unit = unit + falling * (weight / fact);
    }
    PolynomialSpec spec;
    spec.ell = ell;
    spec.degree = unit.degree();
    spec.unit = unit;
    spec.phase = unit * (Rational(1) / pow(Rational(2), ell));
    return spec;
}

RationalPoly gate_phase_poly(const GateSpec &spec) {
    spec.validate();
    if (gate_arity(spec.kind) != 1) {
        throw std::invalid_argument("phase polynomial is defined for single-mode gates only");
    }
    Rational n_inv(1, spec.orders[0]);
    switch (spec.kind) {
        case GateKind::Z:
            return RationalPoly::monomial(n_inv, 1);
        case GateKind::S:
            return RationalPoly::monomial(Rational(1, 2) * pow(n_inv, 2), 2);
        case GateKind::T:
            return RationalPoly::monomial(Rational(1, 4) * pow(n_inv, 4), 4);
        case GateKind::TPrime:
            return RationalPoly({Rational(0), Rational(-2, 4), Rational(1, 4), Rational(2, 4)}).rescaled(n_inv);
        case GateKind::Rl: {
            int deg = 1 << spec.ell;
            return RationalPoly::monomial(Rational(1) / pow(Rational(2), spec.ell), deg).rescaled(n_inv);
        }
        case GateKind::RlPrime:
            return discrete_rotation_polynomial(spec.ell).phase.rescaled(n_inv);
        case GateKind::StabZ:
            return RationalPoly::monomial(n_inv * Rational(2), 1);
        default:
            throw std::invalid_argument(gate_name(spec.kind) + " is not a polynomial phase gate");
    }
}

std::vector<cplx> gate_diagonal(const GateSpec &spec, const std::vector<size_t> &mode_dims) {
    spec.validate();
    if (!is_diagonal_gate(spec.kind)) {
        throw std::invalid_argument(gate_name(spec.kind) + " is not diagonal");
    }
    if ((int)mode_dims.size() != gate_arity(spec.kind)) {
        throw DimensionError("mode count does not match gate arity");
    }
    size_t total = total_size(mode_dims);
    std::vector<cplx> diag(total);
    if (spec.kind == GateKind::CROT || spec.kind == GateKind::CCROT) {
        int64_t den = 1;
        for (int o : spec.orders) {
            den *= o;
        }
        for (size_t i = 0; i < total; i++) {
            auto dig = mode_digits(mode_dims, i);
            int64_t prod = 1;
            for (size_t v : dig) {
                prod *= (int64_t)v;
            }
            diag[i] = exp_i_pi(Rational(prod, den));
        }
        return diag;
    }
    if (spec.kind == GateKind::P) {
        int n_order = spec.orders[0];
        for (size_t n = 0; n < total; n++) {
            cplx z = exp_i_pi(Rational((int64_t)n, n_order));
            diag[n] = std::exp(cplx(0, spec.phi / 2) * (1.0 - z));
        }
        return diag;
    }
    RationalPoly poly = gate_phase_poly(spec);
    for (size_t n = 0; n < total; n++) {
        diag[n] = exp_i_pi(poly.eval_mod2((int64_t)n));
    }
    return diag;
}

Operator make_gate(const GateSpec &spec, Dim d) {
    return make_gate(spec, std::vector<size_t>((size_t)gate_arity(spec.kind), d.value()));
}

Operator make_gate(const GateSpec &spec, const std::vector<size_t> &mode_dims) {
    spec.validate();
    if ((int)mode_dims.size() != gate_arity(spec.kind)) {
        throw DimensionError(gate_name(spec.kind) + " acts on " + std::to_string(gate_arity(spec.kind)) + " modes");
    }
    for (size_t dm : mode_dims) {
        Dim check(dm);
        (void)check;
    }
    size_t total = total_size(mode_dims);
    if (total > MAX_DENSE_STATES) {
        throw DimensionError("dense operator on " + std::to_string(total) + " states exceeds the memory guard");
    }
    if (is_diagonal_gate(spec.kind)) {
        return Operator::diagonal(mode_dims, gate_diagonal(spec, mode_dims), spec.str());
    }
    Dim d(mode_dims[0]);
    size_t n = (size_t)spec.orders[0];
    switch (spec.kind) {
        case GateKind::X:
            if (n >= d.value()) {
                throw DimensionError("X shift exceeds dimension");
            }
            return make_sigma(-(int)n, d).set_label(spec.str());
        case GateKind::StabX:
            if (2 * n >= d.value()) {
                throw DimensionError("phase stabilizer shift exceeds dimension");
            }
            return make_sigma(-2 * (int)n, d).set_label(spec.str());
        case GateKind::XPrime: {
            // Swap |2jN + l> with |(2j+1)N + l>; states whose partner is truncated stay fixed.
            Operator out(d, spec.str());
            for (size_t s = 0; s < d.value(); s++) {
                size_t bin = s / n;
                size_t partner = bin % 2 == 0 ? s + n : s - n;
                if (partner >= d.value()) {
                    partner = s;
                }
                out(partner, s) = 1;
            }
            return out;
        }
        default:
            throw std::invalid_argument("unsupported gate kind");
    }
}

namespace {

std::vector<cplx> expected_logical(const GateSpec &spec) {
    auto diag = [](std::vector<cplx> d) {
        size_t n = d.size();
        std::vector<cplx> m(n * n);
        for (size_t i = 0; i < n; i++) {
            m[i * n + i] = d[i];
        }
        return m;
    };
    switch (spec.kind) {
        case GateKind::Z:
            return diag({1, -1});
        case GateKind::X:
        case GateKind::XPrime:
            return {0, 1, 1, 0};
        case GateKind::S:
            return diag({1, cplx(0, 1)});
        case GateKind::T:
        case GateKind::TPrime:
            return diag({1, exp_i_pi(Rational(1, 4))});
        case GateKind::Rl:
        case GateKind::RlPrime:
            return diag({1, exp_i_pi(Rational(1) / pow(Rational(2), spec.ell))});
        case GateKind::P:
            return diag({1, std::polar(1.0, spec.phi)});
        case GateKind::StabZ:
        case GateKind::StabX:
            return diag({1, 1});
        case GateKind::CROT:
            return diag({1, 1, 1, -1});
        case GateKind::CCROT:
            return diag({1, 1, 1, 1, 1, 1, 1, -1});
    }
    return {};
}

double spectral_norm_of_gram(const Eigen::MatrixXcd &gram) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

}  // namespace

LogicalAction verify_logical_action(const GateSpec &spec, const RotationCode &code) {
    spec.validate();
    for (int o : spec.orders) {
        if (o != code.order) {
            throw std::invalid_argument("gate order " + std::to_string(o) + " does not match code order " +
                                        std::to_string(code.order));
        }
    }
    Codewords w = make_codewords(code);
    size_t modes = (size_t)gate_arity(spec.kind);
    std::vector<size_t> dims(modes, code.dim.value());
    if (total_size(dims) > 1000000) {
        throw DimensionError("logical-action check exceeds 10^6 amplitudes");
    }
    std::vector<cplx> diag;
    Operator g;
    if (is_diagonal_gate(spec.kind)) {
        diag = gate_diagonal(spec, dims);
    } else {
        g = make_gate(spec, dims);
    }
    auto apply_gate = [&](const Ket &k) {
        if (diag.empty()) {
            return g.apply(k);
        }
        Ket out = k;
        kernels::mul(diag.data(), k.amplitudes().data(), out.amplitudes().data(), k.size());
        return out;
    };

    size_t ldim = (size_t)1 << modes;
    std::vector<Ket> basis;
    for (size_t b = 0; b < ldim; b++) {
        Ket k = ((b >> (modes - 1)) & 1) ? w.one : w.zero;
        for (size_t m = 1; m < modes; m++) {
            k = kron(k, ((b >> (modes - 1 - m)) & 1) ? w.one : w.zero);
        }
        basis.push_back(k);
    }

    LogicalAction out;
    out.dim = ldim;
    out.matrix.assign(ldim * ldim, 0);
    out.expected = expected_logical(spec);
    std::vector<Ket> images;
    for (size_t b = 0; b < ldim; b++) {
        images.push_back(apply_gate(basis[b]));
    }
    Eigen::MatrixXcd leak_gram(ldim, ldim), gram(ldim, ldim);
    for (size_t a = 0; a < ldim; a++) {
        for (size_t b = 0; b < ldim; b++) {
            out.matrix[a * ldim + b] = basis[a].inner(images[b]);
        }
    }
    // Leaked part of G|b>: G|b> - sum_a |a><a|G|b>.
    std::vector<Ket> leaked;
    for (size_t b = 0; b < ldim; b++) {
        Ket r = images[b];
        for (size_t a = 0; a < ldim; a++) {
            r = r - basis[a] * out.matrix[a * ldim + b];
        }
        leaked.push_back(r);
    }
    for (size_t a = 0; a < ldim; a++) {
        for (size_t b = 0; b < ldim; b++) {
            leak_gram((Eigen::Index)a, (Eigen::Index)b) = leaked[a].inner(leaked[b]);
            gram((Eigen::Index)a, (Eigen::Index)b) = images[a].inner(images[b]) - (a == b ? 1.0 : 0.0);
        }
    }
    out.leakage = spectral_norm_of_gram(leak_gram);
    out.isometry_defect = gram.norm();

    cplx overlap = 0;
    for (size_t i = 0; i < out.matrix.size(); i++) {
        overlap += std::conj(out.expected[i]) * out.matrix[i];
    }
    cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1);
    double dev = 0;
    for (size_t i = 0; i < out.matrix.size(); i++) {
        dev += std::norm(out.matrix[i] - phase * out.expected[i]);
    }
    out.deviation = std::sqrt(dev);
    return out;
}

}  // namespace rotorqec
