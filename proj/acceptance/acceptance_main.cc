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

// Acceptance checks. Prints one line per criterion and exits 1 if any fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rotorqec/codes.h"
#include "rotorqec/distance.h"
#include "rotorqec/error_basis.h"
#include "rotorqec/gates.h"
#include "rotorqec/parallel.h"
#include "rotorqec/propagation.h"
#include "rotorqec/qec.h"
#include "rotorqec/rational.h"

using namespace rotorqec;

namespace {

constexpr double PI = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

RotationCode ideal(int order, int points, int offset, size_t d) {
    return make_code(make_ideal_profile(order, points), offset, Dim(d));
}

Outcome propagation_suite() {
    SweepOptions o;
    std::vector<PropagationRow> rows = run_sweep(build_sweep(o), default_thread_count());
    double worst = 0;
    std::string where;
    for (const auto &r : rows) {
        if (r.residual >= worst) {
            worst = r.residual;
            where = r.gate + " N=" + std::to_string(r.order) + " k=" + std::to_string(r.k);
        }
    }
    // Two corrupted CROT modes at once.
    double two = 0;
    for (int n : {1, 2}) {
        for (int m : {1, 2}) {
            GateSpec g;
            g.kind = GateKind::CROT;
            g.orders = {n, m};
            for (int k1 = -3; k1 <= 3; k1++) {
                for (int k2 = -3; k2 <= 3; k2++) {
                    two = std::max(two, verify(g, {ErrorLabel(k1, 0.4), ErrorLabel(k2, -2.1)}, {16, 16},
                                               {default_pad(GateKind::CROT, k1, n), default_pad(GateKind::CROT, k2, m)}));
                }
            }
        }
    }
    Outcome out;
    out.pass = !rows.empty() && worst < 1e-9 && two < 1e-9;
    out.detail = std::to_string(rows.size()) + " cases, max residual " + fmt(worst) + " (" + where +
                 "), two-error CROT " + fmt(two);
    return out;
}

Outcome appendix_a() {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 16), shift(-4, 4);
    double worst = 0;
    for (int trial = 0; trial < 5; trial++) {
        int degree = 1 + trial % 4;
        std::vector<Rational> c;
        for (int j = 0; j <= degree; j++) {
            c.push_back(Rational(num(rng), den(rng)));
        }
        if (c.back() == Rational(0)) {
            c.back() = Rational(1, 3);
        }
        int k = shift(rng);
        double theta = -2.0 + 0.9 * trial;
        worst = std::max(worst, verify_appendix_a(RationalPoly(c), ErrorLabel(k, theta), Dim(32), (size_t)std::abs(k) + 2));
        worst = std::max(worst, verify_linear_modification(0.37 * (trial + 1), ErrorLabel(k, theta), Dim(32)));
    }
    Outcome out;
    out.pass = worst < 1e-10;
    out.detail = "5 random polynomials, max residual " + fmt(worst);
    return out;
}

Outcome appendix_b() {
    double worst = 0;
    for (int order : {1, 2, 3, 4}) {
        for (int ell = 0; ell <= 3; ell++) {
            auto diag = gate_diagonal(single_mode_gate(GateKind::RlPrime, order, ell),
                                      std::vector<size_t>{(size_t)(8 * order)});
            cplx odd = std::polar(1.0, PI / (1 << ell));
            for (size_t k = 0; k < 8; k++) {
                cplx want = k % 2 == 0 ? cplx(1) : odd;
                worst = std::max(worst, std::abs(diag[k * (size_t)order] - want));
            }
        }
    }
    RationalPoly f2 = discrete_rotation_polynomial(2).phase;
    RationalPoly want({Rational(0), Rational(5, 6), Rational(-3, 4), Rational(1, 6)});
    Outcome out;
    out.pass = worst < 1e-10 && f2 == want;
    out.detail = "max phase error " + fmt(worst) + ", f2 = " + f2.str();
    return out;
}

Outcome qubit_analogs() {
    double rules = 0;
    for (QubitGate g : {QubitGate::Z, QubitGate::X, QubitGate::S, QubitGate::T, QubitGate::CZ, QubitGate::CCZ}) {
        for (int k = -1; k <= 1; k++) {
            for (double t : {-2.5, -0.4, 0.0, 0.9, 3.0}) {
                rules = std::max(rules, verify_qubit(g, k, t));
            }
        }
    }
    double restriction = 0;
    for (GateKind kind : {GateKind::Z, GateKind::X, GateKind::XPrime, GateKind::S, GateKind::T, GateKind::CROT,
                          GateKind::CCROT}) {
        for (int k = -1; k <= 1; k++) {
            for (double t : {-2.5, 0.0, 0.9}) {
                restriction = std::max(restriction, compare_qubit_restriction(kind, k, t));
            }
        }
    }
    Outcome out;
    out.pass = rules < 1e-13 && restriction < 1e-12;
    out.detail = "two-level rules " + fmt(rules) + ", N=1 restriction " + fmt(restriction);
    return out;
}

Outcome qec_round_trip() {
    double worst = 1;
    size_t runs = 0;
    double logical_x = 0;
    double logical_z = 0;
    for (int n : {2, 3}) {
        RotationCode code = ideal(n, 12, 3, (size_t)(18 * n + 4));
        for (PriorKind prior :
             {PriorKind::GainOnly, PriorKind::LossOnly, PriorKind::Symmetric, PriorKind::PhaseCodeAny}) {
            for (int m = -n + 1; m < n; m++) {
                int est = estimate_shift(std::polar(1.0, 2 * PI * m / n), prior, n, 3);
                if ((m - est) % (2 * n) != 0) {
                    continue;
                }
                for (int j = -8; j < 8; j++) {
                    double t = ((j + 0.5) / 16.0) * PI / n;
                    worst = std::min(worst, run_direct(code, ErrorLabel(m, t), prior).fidelity);
                    runs++;
                }
            }
        }
        Ket psi = LogicalState::default_input().encode(make_codewords(code));
        // An undetected shift by N moves the state along the grid instead of restoring it.
        QecResult shifted = run_direct(code, ErrorLabel(n, 0));
        Ket moved = apply_error(ErrorLabel(n, 0), psi).normalized();
        logical_x = std::max(logical_x, std::abs(1 - std::abs(moved.inner(shifted.output))));
        QecResult rotated = run_direct(code, ErrorLabel(0, PI / n));
        Ket z = make_gate(single_mode_gate(GateKind::Z, n), code.dim).apply(psi);
        logical_z = std::max(logical_z, std::abs(1 - std::abs(z.inner(rotated.output))));
    }
    Outcome out;
    out.pass = runs > 0 && worst >= 1 - 1e-6 && logical_x < 1e-10 && logical_z < 1e-10;
    out.detail = std::to_string(runs) + " recoveries, min fidelity " + fmt(worst) + ", m=N action " + fmt(logical_x) +
                 ", theta=pi/N action " + fmt(logical_z);
    return out;
}

Outcome teleport() {
    struct Case {
        ErrorLabel e;
        PriorKind prior;
    };
    std::vector<Case> cases{{ErrorLabel(0, 0), PriorKind::Symmetric},
                            {ErrorLabel(1, 0.2), PriorKind::Symmetric},
                            {ErrorLabel(-1, 0.1), PriorKind::LossOnly},
                            {ErrorLabel(0, -0.3), PriorKind::Symmetric}};
    std::vector<double> eps;
    for (int points : {6, 10}) {
        RotationCode code = ideal(2, points, 1, (size_t)(2 * points + 8));
        double e = 0;
        for (const auto &c : cases) {
            e = std::max(e, 1 - run_teleport(code, c.e, c.prior).fidelity);
        }
        eps.push_back(e);
    }
    Outcome out;
    out.pass = eps[1] < eps[0];
    out.detail = "eps(6) = " + fmt(eps[0]) + ", eps(10) = " + fmt(eps[1]);
    return out;
}

Outcome distance() {
    std::vector<TradeoffRow> rows = verify_tradeoff({1, 2, 3, 4}, 12, 64);
    double product = 0;
    std::string ds;
    for (const auto &r : rows) {
        product = std::max(product, std::abs(r.product - PI));
        ds += (ds.empty() ? "" : " ") + std::to_string(r.d_n) + "*pi/" + fmt(PI / r.d_theta);
    }
    double kl = 0;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-PI, PI);
    for (int n : {2, 3, 4}) {
        RotationCode code = ideal(n, 12, 0, (size_t)(15 * n + 1));
        for (int a = -n; a <= n; a++) {
            for (int b = -n; b <= n; b++) {
                if (((a - b) % n + n) % n == 0) {
                    continue;
                }
                kl = std::max(kl, kl_block(code, ErrorLabel(a, angle(rng)), ErrorLabel(b, angle(rng))).norm);
            }
        }
    }
    double shift = 0;
    for (int n : {2, 3}) {
        for (int j : {0, 1, 2}) {
            shift = std::max(shift, shift_law(n, 12, j, 0.3, -0.8).bulk_residual);
        }
    }
    Outcome out;
    out.pass = rows.size() == 4 && product < 1e-12 && kl < 1e-10 && shift < 1e-8;
    out.detail = "d_n*d_theta [" + ds + "] off by " + fmt(product) + ", KL-zero " + fmt(kl) + ", shift law " +
                 fmt(shift);
    return out;
}

Outcome contrived() {
    ContrivedReport r = contrived_code_check(2, 2);
    double worst = 0;
    for (double d : r.pair_deviation) {
        worst = std::max(worst, d);
    }
    Outcome out;
    out.pass = std::abs(r.x_overlap) < 1e-10 && !r.pair_deviation.empty() && worst < 1e-10;
    out.detail = "<0|X|1> = " + fmt(std::abs(r.x_overlap)) + ", " + std::to_string(r.pair_deviation.size()) +
                 " (k, k+N) pairs, max deviation " + fmt(worst);
    return out;
}

Outcome determinism() {
    ChannelPrior prior{PriorKind::Symmetric, 0.6, 0.2};
    RotationCode direct_code = ideal(2, 10, 3, 40);
    std::string a = trials_table(monte_carlo(direct_code, prior, Scheme::Direct, 256, 77, 1).records).str();
    std::string b = trials_table(monte_carlo(direct_code, prior, Scheme::Direct, 256, 77, 4).records).str();
    RotationCode tele_code = ideal(2, 6, 1, 20);
    std::string c = trials_table(monte_carlo(tele_code, prior, Scheme::Teleport, 6, 77, 1).records).str();
    std::string d = trials_table(monte_carlo(tele_code, prior, Scheme::Teleport, 6, 77, 3).records).str();
    Outcome out;
    out.pass = a == b && c == d;
    out.detail = std::string("direct 256 trials ") + (a == b ? "identical" : "differ") + ", teleport 6 trials " +
                 (c == d ? "identical" : "differ");
    return out;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"propagation suite", propagation_suite}, {"appendix A lemmas", appendix_a},
        {"appendix B rotations", appendix_b},     {"qubit analogs", qubit_analogs},
        {"QEC round trip", qec_round_trip},       {"teleportation", teleport},
        {"distance", distance},                   {"contrived code", contrived},
        {"determinism", determinism},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %zu: %s: %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
