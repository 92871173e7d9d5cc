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

#include "rotorqec/distance.h"

#include <cmath>
#include <numbers>

#include "rotorqec/gates.h"
#include "rotorqec/parallel.h"

namespace rotorqec {

namespace {

constexpr double PI = std::numbers::pi;

double frob(const Block2 &b) {
    double s = 0;
    for (cplx v : b) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

// Largest singular value of a 2x2 matrix, from the eigenvalues of B B^dag written
// without the t^2 - 4 det cancellation.
double spectral(const Block2 &b) {
    double p = std::norm(b[0]) + std::norm(b[1]);
    double q = std::norm(b[2]) + std::norm(b[3]);
    cplx x = b[0] * std::conj(b[2]) + b[1] * std::conj(b[3]);
    double h = (p - q) / 2;
    return std::sqrt((p + q) / 2 + std::sqrt(h * h + std::norm(x)));
}

bool scaled_unitary(const Block2 &b, double tol) {
    // B^dag B = s I with s = ||B||_F^2 / 2.
    cplx g00 = std::conj(b[0]) * b[0] + std::conj(b[2]) * b[2];
    cplx g11 = std::conj(b[1]) * b[1] + std::conj(b[3]) * b[3];
    cplx g01 = std::conj(b[0]) * b[1] + std::conj(b[2]) * b[3];
    double s = (g00.real() + g11.real()) / 2;
    if (s < 1e-6) {
        return false;
    }
    double off = std::sqrt(std::norm(g00 - s) + std::norm(g11 - s) + 2 * std::norm(g01));
    return off < tol * s;
}

size_t ideal_dim(int order, int grid_points) {
    return (size_t)(grid_points + 3) * (size_t)order + 1;
}

RotationCode ideal_code(int order, int grid_points) {
    return make_code(make_ideal_profile(order, grid_points), 0, Dim(ideal_dim(order, grid_points)));
}

}  // namespace

KLBlock kl_block(const Codewords &bra, const Codewords &ket, const ErrorLabel &a, const ErrorLabel &b) {
    const Ket *bras[2] = {&bra.zero, &bra.one};
    const Ket *kets[2] = {&ket.zero, &ket.one};
    Ket ea[2] = {apply_error(a, *bras[0]), apply_error(a, *bras[1])};
    Ket eb[2] = {apply_error(b, *kets[0]), apply_error(b, *kets[1])};
    KLBlock out;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out.matrix[(size_t)(2 * i + j)] = ea[i].inner(eb[j]);
        }
    }
    out.alpha = (out.matrix[0] + out.matrix[3]) / 2.0;
    Block2 r = out.matrix;
    r[0] -= out.alpha;
    r[3] -= out.alpha;
    out.proportionality_deviation = spectral(r);
    out.norm = spectral(out.matrix);
    return out;
}

KLBlock kl_block(const RotationCode &code, const ErrorLabel &a, const ErrorLabel &b) {
    Codewords w = make_codewords(code);
    return kl_block(w, w, a, b);
}

double hermiticity_check(const RotationCode &code, const std::vector<ErrorLabel> &errors) {
    Codewords w = make_codewords(code);
    double worst = 0;
    for (size_t i = 0; i < errors.size(); i++) {
        for (size_t j = 0; j < errors.size(); j++) {
            if (errors[i].k() != errors[j].k()) {
                continue;
            }
            cplx ab = kl_block(w, w, errors[i], errors[j]).alpha;
            cplx ba = kl_block(w, w, errors[j], errors[i]).alpha;
            worst = std::max(worst, std::abs(ab - std::conj(ba)));
        }
    }
    return worst;
}

std::vector<double> theta_grid(int order, int per_window) {
    std::vector<double> out;
    for (int j = 0; j <= 2 * per_window; j++) {
        out.push_back(-PI / order + j * PI / (per_window * (double)order));
    }
    return out;
}

DetectabilityGrid detectability_grid(const RotationCode &code, int k_min, int k_max,
                                     const std::vector<double> &thetas, double tol, size_t threads) {
    if (k_min > k_max) {
        throw std::invalid_argument("empty k range");
    }
    Codewords w = make_codewords(code);
    DetectabilityGrid g;
    g.code_id = code.profile.provenance + " N=" + std::to_string(code.order) + " k0=" + std::to_string(code.offset);
    g.k_min = k_min;
    g.k_max = k_max;
    g.thetas = thetas;
    g.tol = tol;
    const size_t nt = thetas.size();
    g.cells.resize((size_t)(k_max - k_min + 1) * nt);
    const double half = PI / (2 * code.order);
    parallel_for(g.cells.size(), threads, [&](size_t idx) {
        GridCell c;
        c.k = k_min + (int)(idx / nt);
        c.theta = thetas[idx % nt];
        KLBlock b = kl_block(w, w, ErrorLabel(0, 0), ErrorLabel(c.k, c.theta));
        c.deviation = b.proportionality_deviation;
        c.block_norm = b.norm;
        c.compatible = c.deviation < tol;
        c.boundary = std::abs(c.k) == code.order || std::abs(std::abs(c.theta) - half) < 1e-12;
        c.logical = !c.compatible && scaled_unitary(b.matrix, 1e-6);
        g.cells[idx] = c;
    });
    return g;
}

CsvTable grid_table(const DetectabilityGrid &grid) {
    CsvTable t;
    t.schema = "detectability";
    t.columns = {"k", "theta", "deviation", "block_norm", "compatible", "boundary", "logical"};
    for (const auto &c : grid.cells) {
        t.add_row({std::to_string(c.k), format_double(c.theta), format_double(c.deviation),
                   format_double(c.block_norm), c.compatible ? "1" : "0", c.boundary ? "1" : "0",
                   c.logical ? "1" : "0"});
    }
    return t;
}

int number_distance(const RotationCode &code, double tol) {
    Codewords w = make_codewords(code);
    const int cap = 8 * code.order + 8;
    for (int len = 1; len <= cap; len++) {
        // Extending {0..len-2} by len-1 only adds pairs with the new element.
        int b = len - 1;
        for (int a = 0; a <= b; a++) {
            if (kl_block(w, w, ErrorLabel(a, 0), ErrorLabel(b, 0)).proportionality_deviation >= tol) {
                return len - 1;
            }
        }
    }
    return cap;
}

double phase_distance(const RotationCode &code, int per_window) {
    for (int j = 1; j <= 2 * per_window; j++) {
        double phi = j * PI / (per_window * (double)code.order);
        if (std::abs(phase_expectation(code, phi)) >= 1 - 1e-8) {
            return phi;
        }
    }
    return 2 * PI / code.order;
}

double window_deviation(const RotationCode &code, int per_window) {
    Codewords w = make_codewords(code);
    const int n = code.order;
    double worst = 0;
    for (int k = -(n - 1) / 2; 2 * k <= n; k++) {
        for (int j = -per_window / 2 + 1; j < per_window / 2; j++) {
            double theta = j * PI / (per_window * (double)n);
            KLBlock b = kl_block(w, w, ErrorLabel(0, 0), ErrorLabel(k, theta));
            worst = std::max(worst, b.proportionality_deviation);
        }
    }
    return worst;
}

TradeoffRow measure_tradeoff(const RotationCode &code, const std::string &code_id, int per_window) {
    TradeoffRow r;
    r.order = code.order;
    r.code_id = code_id;
    r.d_n = number_distance(code);
    r.d_theta = phase_distance(code, per_window);
    r.product = r.d_n * r.d_theta;
    r.approximation = window_deviation(code, per_window);
    return r;
}

std::vector<TradeoffRow> verify_tradeoff(const std::vector<int> &orders, int grid_points, int per_window) {
    std::vector<TradeoffRow> rows;
    for (int n : orders) {
        rows.push_back(measure_tradeoff(ideal_code(n, grid_points), "ideal(M=" + std::to_string(grid_points) + ")",
                                        per_window));
    }
    return rows;
}

CsvTable tradeoff_table(const std::vector<TradeoffRow> &rows) {
    CsvTable t;
    t.schema = "tradeoff";
    t.columns = {"code", "N", "d_n", "d_theta", "product", "approximation"};
    for (const auto &r : rows) {
        t.add_row({r.code_id, std::to_string(r.order), std::to_string(r.d_n), format_double(r.d_theta),
                   format_double(r.product), format_double(r.approximation)});
    }
    return t;
}

Block2 shift_law_form(int order, int j, double theta, double phi) {
    double p = phi - theta;
    cplx pre = std::polar(1.0, p * (j + order / 2.0));
    double c = std::cos(p * order / 2), s = std::sin(p * order / 2);
    // cos X - sin Y = [[0, cos + i sin], [cos - i sin, 0]]
    return {0, pre * cplx(c, s), pre * cplx(c, -s), 0};
}

double scalar_fit_residual(const Block2 &block, const Block2 &form) {
    cplx num = 0;
    double den = 0;
    for (size_t i = 0; i < 4; i++) {
        num += std::conj(form[i]) * block[i];
        den += std::norm(form[i]);
    }
    cplx s = num / den;
    Block2 r;
    for (size_t i = 0; i < 4; i++) {
        r[i] = block[i] - s * form[i];
    }
    double bn = frob(block);
    return bn > 0 ? frob(r) / bn : frob(r);
}

ShiftLawCheck shift_law(int order, int grid_points, int j, double theta, double phi) {
    if (j < 0) {
        throw std::invalid_argument("shift law is checked for j >= 0");
    }
    const int extra = 3;
    Dim d(ideal_dim(order, grid_points + 2 * extra) + (size_t)(j + order));
    RotationCode ket = make_code(make_ideal_profile(order, grid_points), 0, d);
    RotationCode bra = make_code(make_ideal_profile(order, grid_points + 2 * extra), 0, d);
    Codewords wk = make_codewords(ket);
    Codewords wb = make_codewords(bra);
    ErrorLabel a(j, theta), b(j + order, phi);
    Block2 form = shift_law_form(order, j, a.theta(), b.theta());
    ShiftLawCheck out;
    out.bulk_residual = scalar_fit_residual(kl_block(wb, wk, a, b).matrix, form);
    out.edge_residual = scalar_fit_residual(kl_block(wk, wk, a, b).matrix, form);
    return out;
}

AmplitudeProfile contrived_profile(int order, int periods) {
    static const cplx pattern[8] = {1, {0, 1}, {0, 1}, 1, -1, {0, 1}, {0, 1}, -1};
    if (periods < 1) {
        throw std::invalid_argument("contrived profile needs at least one period");
    }
    std::vector<cplx> v;
    for (int m = 0; m <= 8 * periods; m++) {
        v.push_back(pattern[m % 8]);
    }
    return make_custom_profile(order, std::move(v), "contrived(p=" + std::to_string(periods) + ")");
}

ContrivedReport contrived_code_check(int order, int periods) {
    ContrivedReport r;
    r.order = order;
    r.periods = periods;
    size_t d = (size_t)(8 * periods + 4) * (size_t)order + 1;
    RotationCode code = make_code(contrived_profile(order, periods), 0, Dim(d));
    Codewords w = make_codewords(code);
    r.x_overlap = w.zero.inner(apply_error(ErrorLabel(-order, 0), w.one));
    for (int k = 0; k < 2 * order; k++) {
        r.shifts.push_back(k);
        KLBlock b = kl_block(w, w, ErrorLabel(k, 0), ErrorLabel(k + order, 0));
        r.pair_deviation.push_back(std::max(b.proportionality_deviation, b.norm));
    }
    r.logical_x_deviation = verify_logical_action(single_mode_gate(GateKind::X, order), code).deviation;
    return r;
}

std::vector<ConvergenceRow> finite_m_convergence(int order, const std::vector<int> &grid_points, int per_window) {
    std::vector<ConvergenceRow> rows;
    for (int m : grid_points) {
        rows.push_back({m, window_deviation(ideal_code(order, m), per_window)});
    }
    return rows;
}

std::vector<CatSweepRow> cat_alpha_sweep(int order, const std::vector<double> &alphas, int per_window) {
    std::vector<CatSweepRow> rows;
    for (double a : alphas) {
        size_t d = (size_t)std::ceil(a * a + 12 * a + 30) + 4 * (size_t)order;
        AmplitudeProfile p = make_cat_profile(order, a, Dim(d));
        RotationCode code = make_code(p, 0, Dim(d + 2 * (size_t)order + 1));
        TradeoffRow t = measure_tradeoff(code, p.provenance, per_window);
        rows.push_back({a, t.approximation, t.product});
    }
    return rows;
}

}  // namespace rotorqec
