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

#include <gtest/gtest.h>
#include <numbers>
#include <random>

using namespace rotorqec;

namespace {

constexpr double PI = std::numbers::pi;

GateSpec two_mode(GateKind kind, int n, int m) {
    GateSpec g;
    g.kind = kind;
    g.orders = {n, m};
    return g;
}

Operator two_mode_error(const ErrorLabel &a, const ErrorLabel &b, size_t d) {
    return kron(make_error(a, Dim(d)), make_error(b, Dim(d)));
}

}  // namespace

TEST(propagation, conjugate_oracle) {
    Dim d(12);
    Operator e = make_error(ErrorLabel(3, 0.4), d);
    EXPECT_LT((conjugate(Operator::identity(d), e) - e).frobenius_norm(), 1e-15);
    Operator diag = make_rotation(0.9, d);
    Operator z0 = make_error(ErrorLabel(0, 0.4), d);
    EXPECT_LT((conjugate(diag, z0) - z0).frobenius_norm(), 1e-14);
    Operator z = make_gate(single_mode_gate(GateKind::Z, 2), d);
    Operator e3 = make_error(ErrorLabel(3, 0), d);
    EXPECT_LT((conjugate(z, e3) - e3 * cplx(0, -1)).frobenius_norm(), 1e-12);
}

TEST(propagation, z_prediction) {
    PropagationPrediction p = predict(single_mode_gate(GateKind::Z, 2), ErrorLabel(3, 0.5));
    EXPECT_NEAR(std::abs(p.global_phase - cplx(0, -1)), 0, 1e-15);
    ASSERT_EQ(p.out_labels.size(), 1u);
    ASSERT_EQ(p.out_labels[0].size(), 1u);
    EXPECT_EQ(p.out_labels[0][0].label.k(), 3);
    EXPECT_DOUBLE_EQ(p.out_labels[0][0].label.theta(), 0.5);
}

TEST(propagation, s_prediction) {
    PropagationPrediction p = predict(single_mode_gate(GateKind::S, 2), ErrorLabel(2, 0));
    EXPECT_NEAR(std::abs(p.global_phase - cplx(0, 1)), 0, 1e-15);
    EXPECT_NEAR(p.out_labels[0][0].label.theta(), PI / 2, 1e-15);
    EXPECT_EQ(p.residual_factor.kind, DiagonalFactor::Kind::Identity);
}

TEST(propagation, t_prediction) {
    PropagationPrediction p = predict(single_mode_gate(GateKind::T, 2), ErrorLabel(1, 0));
    EXPECT_NEAR(p.out_labels[0][0].label.theta(), PI / 16, 1e-15);
    EXPECT_NEAR(std::abs(p.global_phase - std::polar(1.0, 3 * PI / 64)), 0, 1e-15);
    ASSERT_EQ(p.residual_factor.kind, DiagonalFactor::Kind::PhasePoly);
    EXPECT_EQ(p.residual_factor.poly, RationalPoly({Rational(0), Rational(0), Rational(-6, 64), Rational(4, 64)}));
}

TEST(propagation, crot_prediction) {
    PropagationPrediction p = predict(two_mode(GateKind::CROT, 2, 2), ErrorLabel(1, 0));
    ASSERT_EQ(p.out_labels.size(), 2u);
    EXPECT_EQ(p.out_labels[0][0].label.k(), 1);
    EXPECT_DOUBLE_EQ(p.out_labels[0][0].label.theta(), 0);
    EXPECT_EQ(p.out_labels[1][0].label.k(), 0);
    EXPECT_NEAR(p.out_labels[1][0].label.theta(), PI / 4, 1e-15);
}

TEST(propagation, tprime_factor_is_power_of_s) {
    // With N = 3 and k = 1 the exponent 3k/N is 1, so the quadratic factor equals S_3 itself.
    PropagationPrediction p = predict(single_mode_gate(GateKind::TPrime, 3), ErrorLabel(1, 0.2));
    ASSERT_EQ(p.residual_factor.kind, DiagonalFactor::Kind::PhasePoly);
    EXPECT_EQ(p.residual_factor.poly, RationalPoly::monomial(Rational(3, 54), 2));
    std::vector<size_t> dims{20};
    auto f = p.residual_factor.diagonal(dims);
    auto s = gate_diagonal(single_mode_gate(GateKind::S, 3), dims);
    for (size_t i = 0; i < 20; i++) {
        EXPECT_LT(std::abs(f[i] - s[i]), 1e-14) << i;
    }
    // N = 1, k = 2: exponent 6.
    PropagationPrediction q = predict(single_mode_gate(GateKind::TPrime, 1), ErrorLabel(2, 0));
    auto g = q.residual_factor.diagonal(dims);
    auto s1 = gate_diagonal(single_mode_gate(GateKind::S, 1), dims);
    for (size_t i = 0; i < 20; i++) {
        EXPECT_LT(std::abs(g[i] - std::pow(s1[i], 6)), 1e-12) << i;
    }
}

TEST(propagation, split_phase) {
    // n^2 / 8 minus its shift by k: (2kn - k^2) / 8.
    RationalPoly p = RationalPoly::monomial(Rational(1, 8), 2);
    PhaseSplit s = split_conjugation_phase(p, 3);
    EXPECT_EQ(s.constant, Rational(-9, 8));
    EXPECT_EQ(s.linear, Rational(6, 8));
    EXPECT_EQ(s.nonlinear.degree(), -1);
    PhaseSplit c = split_conjugation_phase(RationalPoly::monomial(Rational(1), 3), -1);
    // n^3 - (n+1)^3 = -3n^2 - 3n - 1
    EXPECT_EQ(c.constant, Rational(-1));
    EXPECT_EQ(c.linear, Rational(-3));
    EXPECT_EQ(c.nonlinear, RationalPoly::monomial(Rational(-3), 2));
}

TEST(propagation, pad_rule) {
    EXPECT_EQ(default_pad(GateKind::Z, -3, 2), 5u);
    EXPECT_EQ(default_pad(GateKind::X, 2, 3), 7u);
    EXPECT_EQ(default_pad(GateKind::XPrime, 3, 2), 9u);
    EXPECT_EQ(default_pad(GateKind::StabX, 0, 4), 10u);
}

TEST(propagation, spot_checks) {
    for (int k = -3; k <= 3; k++) {
        for (double t : {-2.5, 0.0, 1.1}) {
            EXPECT_LT(verify(single_mode_gate(GateKind::Z, 2), ErrorLabel(k, t), Dim(30), 6), 1e-12);
        }
    }
    EXPECT_LT(verify(single_mode_gate(GateKind::X, 3), ErrorLabel(2, 0.7), Dim(40), 10), 1e-10);
    EXPECT_LT(verify(single_mode_gate(GateKind::XPrime, 2), ErrorLabel(3, 0.4), Dim(48), 12), 1e-10);
}

TEST(propagation, x_needs_extra_term) {
    GateSpec x = single_mode_gate(GateKind::X, 3);
    PropagationPrediction p = predict(x, ErrorLabel(2, 0.7));
    ASSERT_TRUE(p.extra_term.has_value());
    EXPECT_EQ(p.extra_term->projector_rank, 2u);
    EXPECT_EQ(p.extra_term->label.k(), -1);
    // Dropping it breaks the identity on the first k Fock states.
    Dim d(40);
    Operator lhs = make_gate(x, d) * make_error(ErrorLabel(2, 0.7), d);
    Operator rhs = materialize(p, {40}) * make_gate(x, d);
    EXPECT_GT(residual_on_safe_subspace(lhs, rhs, 10), 0.5);
    EXPECT_LT(residual_on_safe_subspace(lhs, rhs + extra_operator(p, {40}), 10), 1e-10);
    EXPECT_FALSE(predict(x, ErrorLabel(-2, 0.7)).extra_term.has_value());
}

TEST(propagation, every_single_mode_gate_small_sweep) {
    for (GateKind kind : {GateKind::Z, GateKind::X, GateKind::XPrime, GateKind::S, GateKind::T, GateKind::TPrime,
                          GateKind::StabZ, GateKind::StabX}) {
        for (int n : {1, 2, 3}) {
            for (int k = -3; k <= 3; k++) {
                for (double t : sample_thetas(3)) {
                    double r = verify(single_mode_gate(kind, n), ErrorLabel(k, t), Dim(32), default_pad(kind, k, n));
                    EXPECT_LT(r, 1e-9) << gate_name(kind) << " N=" << n << " k=" << k << " theta=" << t;
                }
            }
        }
    }
}

TEST(propagation, rotation_levels) {
    for (GateKind kind : {GateKind::Rl, GateKind::RlPrime}) {
        for (int ell = 0; ell <= 3; ell++) {
            for (int n : {1, 2}) {
                for (int k : {-2, -1, 1, 3}) {
                    double r = verify(single_mode_gate(kind, n, ell), ErrorLabel(k, 0.37), Dim(32),
                                      default_pad(kind, k, n));
                    EXPECT_LT(r, 1e-9) << gate_name(kind) << " l=" << ell << " N=" << n << " k=" << k;
                }
            }
        }
    }
}

TEST(propagation, rlprime_rotation_comes_from_linear_part) {
    for (int ell : {1, 2, 3}) {
        for (int n : {1, 2}) {
            for (int k : {-1, 1, 2}) {
                GateSpec g = single_mode_gate(GateKind::RlPrime, n, ell);
                PropagationPrediction p = predict(g, ErrorLabel(k, 0));
                PhaseSplit s = split_conjugation_phase(gate_phase_poly(g), k);
                ASSERT_EQ(p.out_labels[0].size(), 1u);
                double want = canonical_angle(PI * s.linear.to_double());
                double got = p.out_labels[0][0].label.theta();
                EXPECT_NEAR(std::abs(std::polar(1.0, got) - std::polar(1.0, want)), 0, 1e-12);
            }
        }
    }
}

TEST(propagation, phase_gate) {
    for (double phi : {0.7, 2.3}) {
        for (int n : {1, 2}) {
            for (int k = -2; k <= 2; k++) {
                double r = verify(single_mode_gate(GateKind::P, n, 0, phi), ErrorLabel(k, -0.6), Dim(32),
                                  default_pad(GateKind::P, k, n));
                EXPECT_LT(r, 1e-9) << "phi=" << phi << " N=" << n << " k=" << k;
            }
        }
    }
}

TEST(propagation, crot_two_errors) {
    for (int n : {1, 2}) {
        for (int m : {1, 3}) {
            for (int k1 = -2; k1 <= 2; k1++) {
                for (int k2 = -2; k2 <= 2; k2++) {
                    std::vector<ErrorLabel> labels{ErrorLabel(k1, 0.3), ErrorLabel(k2, -1.2)};
                    std::vector<size_t> pads{default_pad(GateKind::CROT, k1, n), default_pad(GateKind::CROT, k2, m)};
                    double r = verify(two_mode(GateKind::CROT, n, m), labels, {16, 16}, pads);
                    EXPECT_LT(r, 1e-10) << n << m << " k1=" << k1 << " k2=" << k2;
                }
            }
        }
    }
}

TEST(propagation, crot_flipped_sign_fails) {
    // Global phase exp(-i pi k1 k2 (H(-k1) + H(k2)) / NM), otherwise identical to the working prediction.
    const int n = 2, m = 2, k1 = 1, k2 = 1;
    GateSpec g = two_mode(GateKind::CROT, n, m);
    std::vector<ErrorLabel> labels{ErrorLabel(k1, 0.3), ErrorLabel(k2, -1.2)};
    PropagationPrediction p = predict(g, labels);
    PropagationPrediction flipped = p;
    flipped.global_phase = exp_i_pi(Rational(-k1 * k2 * (heaviside(-k1) + heaviside(k2)), n * m));
    EXPECT_GT(std::abs(flipped.global_phase - p.global_phase), 1.0);

    const size_t d = 16;
    Operator gate = make_gate(g, std::vector<size_t>{d, d});
    Operator lhs = gate * two_mode_error(labels[0], labels[1], d);
    std::vector<size_t> pads{3, 3};
    EXPECT_LT(residual_on_safe_subspace(lhs, materialize(p, {d, d}) * gate, pads), 1e-10);
    EXPECT_GT(residual_on_safe_subspace(lhs, materialize(flipped, {d, d}) * gate, pads), 1.0);
}

TEST(propagation, crot_single_outputs_commute) {
    const size_t d = 14;
    GateSpec g = two_mode(GateKind::CROT, 2, 3);
    for (int k1 : {-1, 2}) {
        for (int k2 : {-2, 1}) {
            Operator a = materialize(predict(g, {ErrorLabel(k1, 0.4), ErrorLabel(0, 0)}), {d, d});
            Operator b = materialize(predict(g, {ErrorLabel(0, 0), ErrorLabel(k2, 0.9)}), {d, d});
            std::vector<size_t> pads{(size_t)std::abs(k1) * 2 + 2, (size_t)std::abs(k2) * 2 + 2};
            EXPECT_LT(residual_on_safe_subspace(a * b, b * a, pads), 1e-12);
        }
    }
}

TEST(propagation, ccrot) {
    GateSpec g;
    g.kind = GateKind::CCROT;
    for (int n : {1, 2}) {
        g.orders = {n, n, n};
        for (size_t mode = 0; mode < 3; mode++) {
            for (int k : {-2, 1, 3}) {
                std::vector<ErrorLabel> labels(3, ErrorLabel(0, 0));
                labels[mode] = ErrorLabel(k, 0.8);
                std::vector<size_t> pads(3, 2);
                pads[mode] = default_pad(GateKind::CCROT, k, n);
                EXPECT_LT(verify(g, labels, {10, 10, 10}, pads), 1e-10) << n << " mode " << mode << " k=" << k;
            }
        }
    }
    std::vector<ErrorLabel> two(3, ErrorLabel(1, 0));
    two[2] = ErrorLabel(0, 0);
    g.orders = {1, 1, 1};
    EXPECT_THROW(predict(g, two), std::invalid_argument);
}

TEST(propagation, general_function_lemma) {
    EXPECT_EQ(verify_appendix_a(RationalPoly(), ErrorLabel(2, 0.3), Dim(20), 2), 0.0);
    EXPECT_LT(verify_appendix_a(RationalPoly::monomial(Rational(1, 8), 2), ErrorLabel(-2, 0.3), Dim(30), 8), 1e-11);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 12), deg(1, 4), shift(-4, 4);
    for (int trial = 0; trial < 10; trial++) {
        int dg = deg(rng);
        std::vector<Rational> c;
        for (int j = 0; j <= dg; j++) {
            c.push_back(Rational(num(rng), den(rng)));
        }
        int k = shift(rng);
        double r = verify_appendix_a(RationalPoly(c), ErrorLabel(k, 0.1 * trial), Dim(24), (size_t)std::abs(k) + 2);
        EXPECT_LT(r, 1e-10) << RationalPoly(c).str();
    }
}

TEST(propagation, linear_modification) {
    for (int k = -4; k <= 4; k++) {
        for (double phi : {-1.3, 0.0, 0.45, 2.9}) {
            for (double theta : {-0.7, 0.0, 2.2}) {
                EXPECT_LT(verify_linear_modification(phi, ErrorLabel(k, theta), Dim(20)), 1e-12)
                    << k << " " << phi << " " << theta;
            }
        }
    }
}

TEST(propagation, qubit_rules) {
    for (QubitGate g : {QubitGate::Z, QubitGate::X, QubitGate::S, QubitGate::T, QubitGate::CZ, QubitGate::CCZ}) {
        for (int k = -1; k <= 1; k++) {
            for (double t : {-1.9, 0.0, 0.6}) {
                EXPECT_LT(verify_qubit(g, k, t), 1e-14) << qubit_gate_name(g) << " k=" << k;
            }
        }
    }
}

TEST(propagation, qubit_restriction) {
    for (GateKind kind : {GateKind::Z, GateKind::S, GateKind::T, GateKind::XPrime, GateKind::X, GateKind::CROT,
                          GateKind::CCROT}) {
        for (int k = -1; k <= 1; k++) {
            for (double t : {0.0, 0.2, -2.4}) {
                EXPECT_LT(compare_qubit_restriction(kind, k, t), 1e-12) << gate_name(kind) << " k=" << k << " t=" << t;
            }
        }
    }
    EXPECT_THROW(compare_qubit_restriction(GateKind::P, 0, 0), std::invalid_argument);
}

TEST(propagation, sweep_table) {
    SweepOptions o;
    o.kinds = {GateKind::S, GateKind::CROT};
    o.orders = {1, 2};
    o.k_max = 1;
    o.theta_samples = 2;
    o.dim = 20;
    o.crot_dim = 10;
    auto cases = build_sweep(o);
    EXPECT_EQ(cases.size(), 2u * 2 * 3 * 2);
    auto rows = run_sweep(cases, 2);
    for (const auto &r : rows) {
        EXPECT_LT(r.residual, 1e-9);
    }
    CsvTable t = propagation_table(rows);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"gate", "N", "k", "theta", "d", "pad", "residual"}));
    EXPECT_EQ(t.rows.size(), rows.size());
    EXPECT_EQ(t.rows[0][0], "S");
}

TEST(propagation, sampled_thetas_avoid_rational_multiples) {
    auto t = sample_thetas(8);
    ASSERT_EQ(t.size(), 8u);
    for (double v : t) {
        EXPECT_GE(v, -PI);
        EXPECT_LT(v, PI);
        double ratio = v / PI * 8;
        EXPECT_GT(std::abs(ratio - std::round(ratio)), 1e-3);
    }
}
