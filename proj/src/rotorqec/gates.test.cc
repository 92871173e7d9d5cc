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

#include <gtest/gtest.h>
#include <numbers>

using namespace rotorqec;

namespace {

constexpr double PI = std::numbers::pi;

RotationCode ideal(int order, int points, int offset, size_t d) {
    return make_code(make_ideal_profile(order, points), offset, Dim(d));
}

std::vector<RotationCode> example_codes(int order) {
    return {
        ideal(order, 8, 0, (size_t)(10 * order + 2)),
        ideal(order, 6, 3, (size_t)(11 * order + 2)),
        make_code(make_cat_profile(order, 2.0, Dim(40)), 0, Dim(40)),
        make_code(make_binomial_profile(order, 3, Dim((size_t)(6 * order + 2))), 1, Dim((size_t)(6 * order + 2))),
    };
}

double max_abs_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

TEST(gates, names_round_trip) {
    for (GateKind k : {GateKind::Z, GateKind::X, GateKind::XPrime, GateKind::S, GateKind::T, GateKind::TPrime,
                       GateKind::Rl, GateKind::RlPrime, GateKind::P, GateKind::CROT, GateKind::CCROT,
                       GateKind::StabZ, GateKind::StabX}) {
        EXPECT_EQ(parse_gate_kind(gate_name(k)), k);
    }
    EXPECT_EQ(parse_gate_kind("crot"), GateKind::CROT);
    EXPECT_THROW(parse_gate_kind("H"), std::invalid_argument);
}

TEST(gates, spec_validation) {
    GateSpec g;
    g.kind = GateKind::CROT;
    g.orders = {2};
    EXPECT_THROW(g.validate(), std::invalid_argument);
    g.orders = {2, 0};
    EXPECT_THROW(g.validate(), std::invalid_argument);
    g.orders = {2, 3};
    EXPECT_NO_THROW(g.validate());
    EXPECT_THROW(single_mode_gate(GateKind::Rl, 2, -1), std::invalid_argument);
    EXPECT_THROW(make_gate(single_mode_gate(GateKind::Z, 1), std::vector<size_t>{4, 4}), DimensionError);
}

TEST(gates, z_diagonal) {
    Operator z = make_gate(single_mode_gate(GateKind::Z, 2), Dim(4));
    std::vector<cplx> expected{1, cplx(0, 1), -1, cplx(0, -1)};
    EXPECT_EQ(z.diagonal_entries(), expected);
    EXPECT_TRUE(z.is_diagonal());
}

TEST(gates, xprime_is_bin_swap) {
    Operator x = make_gate(single_mode_gate(GateKind::XPrime, 1), Dim(2));
    EXPECT_EQ(x(0, 1), cplx(1));
    EXPECT_EQ(x(1, 0), cplx(1));
    EXPECT_EQ(x(0, 0), cplx(0));
    Operator x2 = make_gate(single_mode_gate(GateKind::XPrime, 2), Dim(8));
    // Bins {0,1} and {2,3} swap.
    EXPECT_EQ(x2(2, 0), cplx(1));
    EXPECT_EQ(x2(3, 1), cplx(1));
    EXPECT_EQ(x2(0, 2), cplx(1));
    EXPECT_EQ(x2(5, 7), cplx(1));
}

TEST(gates, crot_qubit_block_is_cz) {
    GateSpec g;
    g.kind = GateKind::CROT;
    g.orders = {1, 1};
    Operator crot = make_gate(g, std::vector<size_t>{2, 2});
    std::vector<cplx> expected{1, 1, 1, -1};
    EXPECT_EQ(crot.diagonal_entries(), expected);
    g.kind = GateKind::CCROT;
    g.orders = {1, 1, 1};
    Operator ccrot = make_gate(g, std::vector<size_t>{2, 2, 2});
    EXPECT_EQ(ccrot(7, 7), cplx(-1));
    EXPECT_EQ(ccrot(6, 6), cplx(1));
}

TEST(gates, memory_guard) {
    GateSpec g;
    g.kind = GateKind::CCROT;
    g.orders = {1, 1, 1};
    EXPECT_THROW(make_gate(g, Dim(30)), DimensionError);
}

TEST(gates, discrete_rotation_polynomial_coefficients) {
    PolynomialSpec p0 = discrete_rotation_polynomial(0);
    EXPECT_EQ(p0.degree, 1);
    EXPECT_EQ(p0.phase, RationalPoly::monomial(Rational(1), 1));

    PolynomialSpec p2 = discrete_rotation_polynomial(2);
    EXPECT_EQ(p2.degree, 3);
    EXPECT_EQ(p2.phase.coefficient(0), Rational(0));
    EXPECT_EQ(p2.phase.coefficient(1), Rational(5, 6));
    EXPECT_EQ(p2.phase.coefficient(2), Rational(-3, 4));
    EXPECT_EQ(p2.phase.coefficient(3), Rational(1, 6));

    int expected_mod8[] = {0, 1, 0, 1, 0};
    for (int k = 0; k <= 4; k++) {
        Rational v = p2.unit(Rational(k));
        ASSERT_TRUE(v.is_integer());
        EXPECT_EQ(v.mod(Rational(8)), Rational(expected_mod8[k])) << k;
    }
    for (int ell = 0; ell <= 5; ell++) {
        EXPECT_EQ(discrete_rotation_polynomial(ell).degree, ell + 1);
    }
}

TEST(gates, discrete_rotation_hits_logical_phases) {
    for (int order : {1, 2, 3}) {
        for (int ell = 0; ell <= 3; ell++) {
            auto diag = gate_diagonal(single_mode_gate(GateKind::RlPrime, order, ell),
                                      std::vector<size_t>{(size_t)(8 * order)});
            cplx odd = std::polar(1.0, PI / (1 << ell));
            for (size_t k = 0; k < 8; k++) {
                cplx want = k % 2 == 0 ? cplx(1) : odd;
                EXPECT_LT(std::abs(diag[k * (size_t)order] - want), 1e-14)
                    << "N=" << order << " l=" << ell << " k=" << k;
            }
        }
    }
}

TEST(gates, rotation_ladder_on_grid) {
    for (int order : {1, 2, 3}) {
        std::vector<size_t> dims{(size_t)(10 * order)};
        auto t = gate_diagonal(single_mode_gate(GateKind::T, order), dims);
        auto s = gate_diagonal(single_mode_gate(GateKind::S, order), dims);
        auto z = gate_diagonal(single_mode_gate(GateKind::Z, order), dims);
        for (size_t k = 0; k < 10; k++) {
            size_t n = k * (size_t)order;
            EXPECT_LT(std::abs(t[n] * t[n] - s[n]), 1e-14);
            EXPECT_LT(std::abs(s[n] * s[n] - z[n]), 1e-14);
        }
        // Rl at l = 0, 1, 2 coincides with Z, S and T.
        auto r0 = gate_diagonal(single_mode_gate(GateKind::Rl, order, 0), dims);
        auto r1 = gate_diagonal(single_mode_gate(GateKind::Rl, order, 1), dims);
        auto r2 = gate_diagonal(single_mode_gate(GateKind::Rl, order, 2), dims);
        EXPECT_LT(max_abs_diff(r0, z), 1e-14);
        EXPECT_LT(max_abs_diff(r1, s), 1e-14);
        EXPECT_LT(max_abs_diff(r2, t), 1e-14);
    }
}

TEST(gates, phase_gate_on_grid) {
    auto p = gate_diagonal(single_mode_gate(GateKind::P, 2, 0, 0.7), std::vector<size_t>{12});
    for (size_t k = 0; k < 6; k++) {
        cplx want = k % 2 == 0 ? cplx(1) : std::polar(1.0, 0.7);
        EXPECT_LT(std::abs(p[2 * k] - want), 1e-14);
    }
}

TEST(gates, exact_logical_actions) {
    for (int order : {1, 2, 3}) {
        for (const auto &code : example_codes(order)) {
            for (GateKind k : {GateKind::Z, GateKind::S, GateKind::T, GateKind::TPrime, GateKind::StabZ}) {
                LogicalAction a = verify_logical_action(single_mode_gate(k, order), code);
                EXPECT_LT(a.deviation, 1e-12) << gate_name(k) << " N=" << order;
                EXPECT_LT(a.leakage, 1e-12) << gate_name(k) << " N=" << order;
                EXPECT_LT(a.isometry_defect, 1e-12) << gate_name(k) << " N=" << order;
            }
            for (int ell = 0; ell <= 3; ell++) {
                LogicalAction a = verify_logical_action(single_mode_gate(GateKind::RlPrime, order, ell), code);
                EXPECT_LT(a.deviation, 1e-12) << "RlPrime l=" << ell;
            }
        }
    }
}

TEST(gates, xprime_exact_on_aligned_ideal_codes) {
    for (int order : {1, 2, 3}) {
        for (size_t points : {2, 4, 8, 10}) {
            RotationCode code = ideal(order, points, 0, (size_t)(order * (points + 2) + 2));
            LogicalAction a = verify_logical_action(single_mode_gate(GateKind::XPrime, order), code);
            EXPECT_LT(a.deviation, 1e-12) << "N=" << order << " M=" << points;
            EXPECT_LT(a.leakage, 1e-12) << "N=" << order << " M=" << points;
        }
    }
}

// The bin swap only pairs bins (2j, 2j+1), so it is an exact logical X only when the
// |0> amplitude on bin 2j equals the |1> amplitude on bin 2j+1. Checked here on codes
// where that fails; see README "Known deviations".
TEST(gates, xprime_exact_on_every_code) {
    for (int order : {1, 2, 3}) {
        auto codes = example_codes(order);
        for (size_t i = 1; i < codes.size(); i++) {
            LogicalAction a = verify_logical_action(single_mode_gate(GateKind::XPrime, order), codes[i]);
            EXPECT_LT(a.deviation, 1e-12) << codes[i].profile.provenance << " N=" << order;
            EXPECT_LT(a.leakage, 1e-12) << codes[i].profile.provenance << " N=" << order;
        }
    }
}

TEST(gates, crot_logical_action) {
    RotationCode code = ideal(2, 4, 0, 12);
    GateSpec g;
    g.kind = GateKind::CROT;
    g.orders = {2, 2};
    LogicalAction a = verify_logical_action(g, code);
    EXPECT_EQ(a.dim, 4u);
    EXPECT_LT(a.deviation, 1e-12);
    EXPECT_LT(a.leakage, 1e-12);
}

TEST(gates, shift_down_x_on_finite_ideal_code) {
    // |1> has one more lower neighbour than |0>: <0|X|1> = 1 and <1|X|0> = 5/6.
    RotationCode code = ideal(2, 12, 0, 30);
    LogicalAction a = verify_logical_action(single_mode_gate(GateKind::X, 2), code);
    EXPECT_NEAR(std::abs(a.matrix[0]), 0, 1e-15);
    EXPECT_NEAR(std::abs(a.matrix[1] - 1.0), 0, 1e-14);
    EXPECT_NEAR(std::abs(a.matrix[2] - 5.0 / 6), 0, 1e-14);
    EXPECT_GT(a.isometry_defect, 0.1);
    // Convergence toward the exact swap as M grows.
    double prev = a.deviation;
    for (int m : {24, 48}) {
        LogicalAction b = verify_logical_action(single_mode_gate(GateKind::X, 2), ideal(2, m, 0, (size_t)(2 * m + 6)));
        EXPECT_LT(b.deviation, prev);
        prev = b.deviation;
    }
    Dim d(40);
    RotationCode cat = make_code(make_cat_profile(2, 2.0, d), 0, d);
    LogicalAction c = verify_logical_action(single_mode_gate(GateKind::X, 2), cat);
    EXPECT_GT(c.deviation, 1e-3);
    EXPECT_TRUE(std::isfinite(c.deviation));
}

TEST(gates, anticommutation_on_codespace) {
    for (int order : {1, 2, 3}) {
        for (const auto &code : example_codes(order)) {
            Operator z = make_gate(single_mode_gate(GateKind::Z, order), code.dim);
            Operator x = make_gate(single_mode_gate(GateKind::XPrime, order), code.dim);
            Operator p = codespace_projector(code);
            Operator ac = p * (z * x + x * z) * p;
            EXPECT_LT(ac.frobenius_norm(), 1e-10);
        }
    }
}

TEST(gates, stabilizers) {
    for (int order : {1, 2, 3}) {
        for (const auto &code : example_codes(order)) {
            Codewords w = make_codewords(code);
            Operator sz = make_gate(single_mode_gate(GateKind::StabZ, order), code.dim);
            EXPECT_LT((sz.apply(w.zero) - w.zero).norm(), 1e-12);
            EXPECT_LT((sz.apply(w.one) - w.one).norm(), 1e-12);
            Operator sx = make_gate(single_mode_gate(GateKind::StabX, order), code.dim);
            EXPECT_LT((sz * sx - sx * sz).frobenius_norm(), 1e-12);
        }
    }
    // On an ideal code S_X shifts |+> down two grid points: a plus state with two fewer points.
    RotationCode code = ideal(2, 10, 0, 26);
    Operator sx = make_gate(single_mode_gate(GateKind::StabX, 2), code.dim);
    Ket out = sx.apply(make_codewords(code).plus);
    Ket smaller = make_codewords(ideal(2, 8, 0, 26)).plus;
    EXPECT_NEAR(std::abs(out.normalized().inner(smaller)), 1, 1e-14);
}
