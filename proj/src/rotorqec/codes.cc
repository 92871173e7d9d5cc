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

#include "rotorqec/codes.h"

#include <cmath>
#include <numbers>

#include "rotorqec/table_io.h"

namespace rotorqec {

namespace {

void check_order(int order) {
    if (order < 1) {
        throw std::invalid_argument("code order N must be positive, got " + std::to_string(order));
    }
}

void normalize_total(std::vector<cplx> &v) {
    double s = 0;
    for (auto x : v) {
        s += std::norm(x);
    }
    if (!(s > 0)) {
        throw std::invalid_argument("amplitude profile is identically zero");
    }
    double inv = 1 / std::sqrt(s);
    for (auto &x : v) {
        x *= inv;
    }
}

size_t grid_capacity(int order, Dim d) {
    // Grid points j with j*N + 2N < d.
    size_t n = (size_t)order;
    if (d.value() <= 2 * n) {
        return 0;
    }
    return (d.value() - 2 * n - 1) / n + 1;
}

}  // namespace

AmplitudeProfile make_ideal_profile(int order, int grid_points) {
    check_order(order);
    if (grid_points < 2) {
        throw std::invalid_argument("ideal profile needs at least 2 grid points so that |1> is populated");
    }
    std::vector<cplx> v((size_t)grid_points, 1.0);
    normalize_total(v);
    return {order, std::move(v), "ideal(M=" + std::to_string(grid_points) + ")"};
}

AmplitudeProfile make_cat_profile(int order, cplx alpha, Dim d) {
    check_order(order);
    double r2 = std::norm(alpha);
    if (!(r2 > 0)) {
        throw std::invalid_argument("cat amplitude alpha must be non-zero");
    }
    size_t cap = grid_capacity(order, d);
    if (cap < 2) {
        throw DimensionError("dimension too small for a cat code of this order");
    }
    // Weight of the coherent state captured below the guard band.
    size_t levels = (cap - 1) * (size_t)order + 1;
    double captured = 0;
    for (size_t n = 0; n < levels; n++) {
        captured += std::exp(-r2 + (double)n * std::log(r2) - std::lgamma((double)n + 1));
    }
    if (captured < 1 - 1e-8) {
        throw DimensionError("truncation keeps only " + std::to_string(captured) +
                             " of the coherent-state weight; increase the dimension");
    }
    double log_r = std::log(std::sqrt(r2));
    double arg = std::arg(alpha);
    std::vector<cplx> v;
    double peak = -INFINITY;
    std::vector<double> logs(cap);
    for (size_t j = 0; j < cap; j++) {
        double n = (double)(j * (size_t)order);
        logs[j] = n * log_r - 0.5 * std::lgamma(n + 1);
        peak = std::max(peak, logs[j]);
    }
    for (size_t j = 0; j < cap; j++) {
        double n = (double)(j * (size_t)order);
        v.push_back(std::polar(std::exp(logs[j] - peak), arg * n));
    }
    while (v.size() > 2 && std::norm(v.back()) < 1e-32) {
        v.pop_back();
    }
    normalize_total(v);
    return {order, std::move(v), "cat(alpha=" + format_double(alpha.real()) + "+" + format_double(alpha.imag()) + "i)"};
}

AmplitudeProfile make_binomial_profile(int order, int k_binomial, Dim d) {
    check_order(order);
    if (k_binomial < 1) {
        throw std::invalid_argument("binomial code needs K >= 1");
    }
    if ((size_t)k_binomial >= grid_capacity(order, d)) {
        throw DimensionError("binomial grid K=" + std::to_string(k_binomial) + " exceeds dimension " +
                             std::to_string(d.value()));
    }
    std::vector<cplx> v;
    for (int j = 0; j <= k_binomial; j++) {
        double lb = std::lgamma(k_binomial + 1.0) - std::lgamma(j + 1.0) - std::lgamma(k_binomial - j + 1.0);
        v.push_back(std::exp(0.5 * lb));
    }
    normalize_total(v);
    return {order, std::move(v), "binomial(K=" + std::to_string(k_binomial) + ", literature amplitudes)"};
}

AmplitudeProfile make_custom_profile(int order, std::vector<cplx> values, std::string provenance) {
    check_order(order);
    normalize_total(values);
    return {order, std::move(values), std::move(provenance)};
}

size_t RotationCode::top_level() const {
    size_t last = 0;
    for (size_t j = 0; j < profile.values.size(); j++) {
        if (profile.values[j] != cplx(0)) {
            last = j;
        }
    }
    return ((size_t)offset + last) * (size_t)order;
}

void RotationCode::validate() const {
    check_order(order);
    if (profile.order != order) {
        throw std::invalid_argument("profile order does not match code order");
    }
    if (offset < 0) {
        throw std::invalid_argument("grid offset k0 must be non-negative");
    }
    if (profile.values.empty()) {
        throw std::invalid_argument("empty amplitude profile");
    }
    if (top_level() + (size_t)guard() >= dim.value()) {
        throw DimensionError("code support reaches Fock level " + std::to_string(top_level()) +
                             " which leaves fewer than " + std::to_string(guard()) + " guard levels below d=" +
                             std::to_string(dim.value()));
    }
}

RotationCode make_code(AmplitudeProfile profile, int offset, Dim d) {
    RotationCode code{profile.order, offset, std::move(profile), d};
    code.validate();
    return code;
}

namespace {

Ket parity_ket(const RotationCode &code, int parity) {
    Ket k(code.dim);
    for (size_t j = 0; j < code.profile.values.size(); j++) {
        size_t m = (size_t)code.offset + j;
        if ((int)(m % 2) == parity) {
            k[m * (size_t)code.order] = code.profile.values[j];
        }
    }
    if (!(k.norm() > 0)) {
        throw std::invalid_argument(std::string("logical |") + (parity ? "1" : "0") + "> has no support");
    }
    return k.normalized();
}

}  // namespace

Codewords make_codewords(const RotationCode &code) {
    code.validate();
    Codewords w;
    w.zero = parity_ket(code, 0);
    w.one = parity_ket(code, 1);
    double s = 1 / std::sqrt(2.0);
    w.plus = (w.zero + w.one) * s;
    w.minus = (w.zero - w.one) * s;
    return w;
}

cplx grid_amplitude(const RotationCode &code, int m) {
    Codewords w = make_codewords(code);
    size_t idx = (size_t)m * (size_t)code.order;
    if (m < 0 || idx >= code.dim.value()) {
        return 0;
    }
    return (m % 2 == 0 ? w.zero : w.one)[idx];
}

Operator codespace_projector(const RotationCode &code) {
    Codewords w = make_codewords(code);
    size_t d = code.dim.value();
    Operator p(code.dim, "P_L");
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            p(r, c) = w.zero[r] * std::conj(w.zero[c]) + w.one[r] * std::conj(w.one[c]);
        }
    }
    return p;
}

Operator codespace_projector_from_profile(const RotationCode &code) {
    Codewords w = make_codewords(code);
    size_t n = (size_t)code.order;
    size_t grid = (code.dim.value() - 1) / n + 1;
    Operator p(code.dim, "P_L[profile]");
    for (size_t r = 0; r < grid; r++) {
        for (size_t s = 0; s < grid; s++) {
            cplx fr = (r % 2 == 0 ? w.zero : w.one)[r * n];
            cplx fs = (s % 2 == 0 ? w.zero : w.one)[s * n];
            double parity = (r + s) % 2 == 0 ? 2.0 : 0.0;
            p(r * n, s * n) = 0.5 * fr * std::conj(fs) * parity;
        }
    }
    return p;
}

cplx phase_expectation(const RotationCode &code, double phi) {
    Codewords w = make_codewords(code);
    size_t n = (size_t)code.order;
    cplx acc = 0;
    for (size_t m = 0; m * n < code.dim.value(); m++) {
        double weight = std::norm(w.plus[m * n]);
        if (weight != 0) {
            acc += weight * std::polar(1.0, (phi * (double)n + std::numbers::pi) * (double)m);
        }
    }
    return acc;
}

double modular_phase_variance(const RotationCode &code) {
    Codewords w = make_codewords(code);
    Ket shifted = make_sigma(-code.order, code.dim).apply(w.plus);
    double mag = std::abs(w.plus.inner(shifted));
    if (!(mag > 0)) {
        return INFINITY;
    }
    return 1 / (mag * mag) - 1;
}

void write_profile_csv(std::ostream &out, const AmplitudeProfile &profile) {
    CsvTable t;
    t.schema = "profile";
    t.columns = {"k", "re", "im"};
    for (size_t j = 0; j < profile.values.size(); j++) {
        t.add_row({std::to_string(j), format_double(profile.values[j].real()), format_double(profile.values[j].imag())});
    }
    t.write(out);
}

AmplitudeProfile read_profile_csv(std::istream &in, int order) {
    CsvTable t = CsvTable::read(in);
    if (t.schema != "profile") {
        throw std::runtime_error("expected a profile table, got schema " + t.schema);
    }
    size_t ck = t.column("k"), cr = t.column("re"), ci = t.column("im");
    std::vector<cplx> v;
    for (const auto &row : t.rows) {
        size_t k = (size_t)std::stoul(row[ck]);
        if (k >= v.size()) {
            v.resize(k + 1);
        }
        v[k] = cplx(parse_double(row[cr]), parse_double(row[ci]));
    }
    return make_custom_profile(order, std::move(v), "csv");
}

}  // namespace rotorqec
