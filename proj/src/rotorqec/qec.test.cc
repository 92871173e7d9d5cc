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

#include "rotorqec/qec.h"

#include <gtest/gtest.h>
#include <numbers>

#include "rotorqec/gates.h"

using namespace rotorqec;

namespace {

constexpr double PI = std::numbers::pi;

RotationCode ideal(int order, int points, int offset, size_t d) {
    return make_code(make_ideal_profile(order, points), offset, Dim(d));
}

// Fidelity of the uncorrected logical shift by N on a finite ideal code with an
// even number of grid points: the top |0> point has no |1> partner above it.
double logical_shift_fidelity(int points) {
    LogicalState s = LogicalState::default_input();
    double edge = (points / 2 - 1) / (double)(points / 2);
    cplx amp = std::conj(s.alpha) * s.beta + std::conj(s.beta) * s.alpha * edge;
    return std::norm(amp);
}

Ket with_ancilla(const Ket &k) {
    return kron(k, fock_state(0, Dim(2)));
}

}  // namespace

TEST(qec, prior_names) {
    for (PriorKind k : {PriorKind::GainOnly, PriorKind::LossOnly, PriorKind::Symmetric, PriorKind::PhaseCodeAny}) {
        EXPECT_EQ(parse_prior(prior_name(k)), k);
    }
    EXPECT_EQ(parse_prior("loss"), PriorKind::LossOnly);
    EXPECT_EQ(parse_prior("any"), PriorKind::PhaseCodeAny);
    EXPECT_THROW(parse_prior("sometimes"), std::invalid_argument);
    ChannelPrior bad;
    bad.gamma = -1;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_EQ(parse_scheme("teleport"), Scheme::Teleport);
    EXPECT_THROW(parse_scheme("magic"), std::invalid_argument);
}

TEST(qec, default_input_bloch_vector) {
    LogicalState s = LogicalState::default_input();
    double x = 2 * std::real(std::conj(s.alpha) * s.beta);
    double y = 2 * std::imag(std::conj(s.alpha) * s.beta);
    double z = std::norm(s.alpha) - std::norm(s.beta);
    double r = 1 / std::sqrt(3.0);
    EXPECT_NEAR(x, r, 1e-15);
    EXPECT_NEAR(y, r, 1e-15);
    EXPECT_NEAR(z, r, 1e-15);
}

TEST(qec, corrupt_moves_support) {
    RotationCode code = ideal(2, 8, 3, 30);
    CorruptedState c0 = corrupt(code, ErrorLabel(0, 0));
    Ket psi = LogicalState::default_input().encode(make_codewords(code));
    EXPECT_LT((c0.state - psi).norm(), 1e-15);

    CorruptedState c1 = corrupt(code, ErrorLabel(1, 0));
    for (size_t n = 0; n < 30; n++) {
        if (std::abs(c1.state[n]) > 0) {
            EXPECT_EQ(n % 2, 1u) << n;
        }
    }
    EXPECT_NEAR(c1.state.norm(), 1, 1e-14);
    EXPECT_THROW(corrupt(code, ErrorLabel(20, 0)), DimensionError);
}

TEST(qec, corrupt_splits_loss_phase) {
    RotationCode code = ideal(2, 6, 3, 30);
    ErrorLabel e(-3, 0.4);
    CorruptedState c = corrupt(code, e);
    EXPECT_NEAR(std::abs(c.global_phase - std::polar(1.0, -1.2)), 0, 1e-15);
    Ket direct = apply_error(e, LogicalState::default_input().encode(make_codewords(code)));
    EXPECT_LT((c.state * c.global_phase - direct.normalized()).norm(), 1e-14);
}

TEST(qec, information_destroyed) {
    // Single grid point per codeword: |0> sits at 4N and a loss of 4N + 1 empties it.
    RotationCode code = ideal(2, 2, 4, 20);
    EXPECT_THROW(corrupt(code, LogicalState{1, 0}, ErrorLabel(-9, 0)), InformationDestroyed);
    QecResult r = run_direct(code, ErrorLabel(-11, 0));
    EXPECT_TRUE(r.information_destroyed);
    EXPECT_EQ(r.fidelity, 0.0);
}

TEST(qec, syndrome_values) {
    RotationCode code3 = ideal(3, 8, 3, 50);
    Syndrome s = extract_syndrome(code3, corrupt(code3, ErrorLabel(1, 0)).state);
    EXPECT_NEAR(std::abs(s.lambda_Z - std::polar(1.0, 2 * PI / 3)), 0, 1e-12);
    EXPECT_NEAR(s.eigness_Z, 1, 1e-12);
    Syndrome m = extract_syndrome(code3, corrupt(code3, ErrorLabel(-1, 0)).state);
    EXPECT_NEAR(std::abs(m.lambda_Z - std::polar(1.0, -2 * PI / 3)), 0, 1e-12);

    RotationCode code2 = ideal(2, 10, 3, 40);
    Syndrome x = extract_syndrome(code2, corrupt(code2, ErrorLabel(0, 0.1)).state);
    EXPECT_NEAR(std::abs(x.lambda_X - std::polar(1.0, 0.4)), 0, 1e-12);
    EXPECT_NEAR(std::abs(x.lambda_Z - 1.0), 0, 1e-12);
}

TEST(qec, syndrome_additivity) {
    RotationCode code = ideal(3, 10, 3, 50);
    for (int m = -2; m <= 2; m++) {
        for (double t : {-0.4, 0.0, 0.25}) {
            Syndrome s = extract_syndrome(code, corrupt(code, ErrorLabel(m, t)).state);
            EXPECT_NEAR(std::abs(s.lambda_Z - std::polar(1.0, 2 * PI * m / 3)), 0, 1e-12);
            EXPECT_NEAR(std::abs(s.lambda_X - std::polar(1.0, 6 * t)), 0, 1e-12);
        }
    }
}

TEST(qec, shift_estimator) {
    cplx l = std::polar(1.0, -2 * PI / 3);
    EXPECT_EQ(estimate_shift(l, PriorKind::LossOnly, 3, 3), -1);
    EXPECT_EQ(estimate_shift(l, PriorKind::GainOnly, 3, 3), 2);
    EXPECT_EQ(estimate_shift(l, PriorKind::Symmetric, 3, 3), -1);
    EXPECT_EQ(estimate_shift(1.0, PriorKind::Symmetric, 3, 3), 0);
    EXPECT_EQ(estimate_shift(1.0, PriorKind::LossOnly, 2, 3), 0);
    // Arg uses (-pi, pi]: lambda = -1 with N = 2 reads as +1.
    EXPECT_EQ(estimate_shift(-1.0, PriorKind::Symmetric, 2, 3), 1);
    for (int offset : {1, 2, 3, 5}) {
        for (int n : {2, 3, 4}) {
            for (int j = 0; j < n; j++) {
                int m = estimate_shift(std::polar(1.0, 2 * PI * j / n), PriorKind::PhaseCodeAny, n, offset);
                EXPECT_GE(m - 2 * n, -offset * n);
                EXPECT_LT(m - 2 * n, -offset * n + n);
                EXPECT_EQ(((m - j) % n + n) % n, 0);
            }
        }
    }
}

TEST(qec, phase_estimator) {
    EXPECT_NEAR(estimate_phase(std::polar(1.0, 0.4), PriorKind::Symmetric, 2), 0.1, 1e-15);
    EXPECT_EQ(estimate_phase(1.0, PriorKind::Symmetric, 2), 0.0);
    EXPECT_NEAR(estimate_phase(std::polar(1.0, 4 * (PI / 2 - 0.05)), PriorKind::Symmetric, 2), -0.05, 1e-13);
}

TEST(qec, recovery_operator) {
    Dim d(20);
    Operator r = make_recovery(RecoveryPlan{-1, 0.1}, 3, d);
    EXPECT_LT((r - make_error(ErrorLabel(7, -0.1), d)).frobenius_norm(), 1e-15);
    Operator id = make_recovery(RecoveryPlan{4, 0}, 2, d);
    EXPECT_LT((id - Operator::identity(d)).frobenius_norm(), 1e-15);
}

TEST(qec, estimators_invert_syndromes) {
    for (int n : {2, 3}) {
        RotationCode code = ideal(n, 10, 3, (size_t)(16 * n));
        struct Case {
            PriorKind prior;
            int lo, hi;
        };
        std::vector<Case> cases{{PriorKind::GainOnly, 0, n - 1},
                                {PriorKind::LossOnly, -(n - 1), 0},
                                {PriorKind::Symmetric, -(n - 1) / 2, n / 2}};
        for (const auto &c : cases) {
            for (int m = c.lo; m <= c.hi; m++) {
                for (double t : {-0.3 * PI / n, 0.0, 0.45 * PI / n}) {
                    Syndrome s = extract_syndrome(code, corrupt(code, ErrorLabel(m, t)).state);
                    EXPECT_EQ(estimate_shift(s.lambda_Z, c.prior, n, 3), m);
                    EXPECT_NEAR(estimate_phase(s.lambda_X, c.prior, n), t, 1e-12);
                }
            }
        }
    }
}

TEST(qec, direct_round_trip) {
    RotationCode code = ideal(2, 10, 3, 40);
    EXPECT_NEAR(run_direct(code, ErrorLabel(0, 0)).fidelity, 1, 1e-12);
    QecResult r = run_direct(code, ErrorLabel(1, 0.2));
    EXPECT_GE(r.fidelity, 1 - 1e-6);
    EXPECT_EQ(r.plan.m_est, 1);
    EXPECT_NEAR(r.plan.theta_est, 0.2, 1e-12);
    EXPECT_THROW(run_direct(ideal(2, 10, 2, 40), ErrorLabel(0, 0)), std::invalid_argument);
}

TEST(qec, direct_exact_for_every_prior) {
    for (int n : {2, 3}) {
        RotationCode code = ideal(n, 12, 3, (size_t)(18 * n + 4));
        for (PriorKind prior : {PriorKind::GainOnly, PriorKind::LossOnly, PriorKind::Symmetric,
                                PriorKind::PhaseCodeAny}) {
            std::vector<int> shifts;
            for (int m = -n + 1; m < n; m++) {
                shifts.push_back(m);
            }
            for (int m : shifts) {
                int est = estimate_shift(std::polar(1.0, 2 * PI * m / n), prior, n, 3);
                if (((m - est) % (2 * n)) != 0) {
                    continue;
                }
                for (int j = -8; j < 8; j++) {
                    double t = ((j + 0.5) / 16.0) * PI / n;
                    QecResult r = run_direct(code, ErrorLabel(m, t), prior);
                    EXPECT_GE(r.fidelity, 1 - 1e-6) << "N=" << n << " m=" << m << " t=" << t;
                }
            }
        }
    }
}

TEST(qec, undetected_shift_is_logical_x) {
    for (int points : {12, 20, 40}) {
        RotationCode code = ideal(2, points, 3, (size_t)(2 * points + 14));
        QecResult r = run_direct(code, ErrorLabel(2, 0));
        EXPECT_NEAR(r.fidelity, logical_shift_fidelity(points), 1e-12) << points;
        Ket expected = apply_error(ErrorLabel(2, 0), LogicalState::default_input().encode(make_codewords(code)));
        EXPECT_NEAR(std::abs(expected.normalized().inner(r.output)), 1, 1e-12);
    }
    EXPECT_NEAR(logical_shift_fidelity(12), 0.282407407407407, 1e-12);
    EXPECT_NEAR(logical_shift_fidelity(1000000), 1.0 / 3, 1e-5);
}

TEST(qec, half_window_rotation_is_logical_z) {
    for (int n : {2, 3}) {
        RotationCode code = ideal(n, 12, 3, (size_t)(18 * n + 4));
        QecResult r = run_direct(code, ErrorLabel(0, PI / n));
        Ket psi = LogicalState::default_input().encode(make_codewords(code));
        Ket z = make_gate(single_mode_gate(GateKind::Z, n), code.dim).apply(psi);
        EXPECT_NEAR(std::abs(z.inner(r.output)), 1, 1e-12);
        EXPECT_NEAR(r.fidelity, 1.0 / 3, 1e-12);
    }
}

TEST(qec, direct_deficit_does_not_grow_with_grid_size) {
    double prev = 1;
    for (int points : {6, 10, 14}) {
        RotationCode code = ideal(2, points, 3, (size_t)(2 * points + 14));
        double worst = 0;
        // Symmetric prior at N = 2 resolves shifts in {0, 1}.
        for (int m = 0; m <= 1; m++) {
            for (double t : {-0.7, -0.2, 0.1, 0.6}) {
                worst = std::max(worst, 1 - run_direct(code, ErrorLabel(m, t)).fidelity);
            }
        }
        EXPECT_LT(worst, 1e-6) << points;
        EXPECT_LE(worst, prev + 1e-12);
        prev = worst;
    }
}

TEST(qec, modular_number_measurement) {
    RotationCode code = ideal(3, 6, 1, 30);
    Ket plus = with_ancilla(make_codewords(code).plus);
    auto out = measure_modular_number(plus, 0, 3);
    EXPECT_NEAR(out[0].probability, 1, 1e-15);
    Ket mix = with_ancilla((fock_state(1, Dim(6)) + fock_state(2, Dim(6))).normalized());
    auto two = measure_modular_number(mix, 0, 3);
    EXPECT_NEAR(two[1].probability, 0.5, 1e-15);
    EXPECT_NEAR(two[2].probability, 0.5, 1e-15);
    EXPECT_NEAR(std::abs(two[2].post_state[2 * 2]), 1, 1e-15);

    Dim d(40);
    RotationCode cat = make_code(make_cat_profile(2, 2.0, Dim(30)), 2, d);
    Ket lossy = make_error(ErrorLabel(-1, 0.3), d).apply(make_codewords(cat).plus) +
                make_codewords(cat).plus * 0.5;
    lossy = lossy.normalized();
    auto dist = measure_modular_number(lossy, 0, 2);
    double even = 0;
    for (size_t n = 0; n < 40; n += 2) {
        even += std::norm(lossy[n]);
    }
    EXPECT_NEAR(dist[0].probability, even, 1e-14);
    EXPECT_NEAR(dist[1].probability, 1 - even, 1e-14);
    std::mt19937_64 rng(5);
    NumberOutcome o = sample_modular_number(lossy, 0, 2, rng);
    EXPECT_GT(o.probability, 0);
}

TEST(qec, modular_phase_measurement) {
    const int n = 2, grid = 32;
    RotationCode code = ideal(n, 12, 0, 30);
    Ket plus = with_ancilla(make_codewords(code).plus);
    auto out = measure_modular_phase(plus, 0, n, grid);
    auto dist = modular_phase_distribution(out, grid);
    double total = 0;
    for (double p : dist) {
        total += p;
    }
    EXPECT_NEAR(total, 1, 1e-9);
    size_t peak = (size_t)(std::max_element(dist.begin(), dist.end()) - dist.begin());
    EXPECT_EQ(peak, (size_t)grid / 2);
    EXPECT_NEAR(out[peak].phi_hat, 0, 1e-15);

    // Rotating by three grid steps shifts the distribution cyclically.
    double step = 2 * PI / (n * grid);
    Ket rotated = with_ancilla(make_rotation(3 * step, code.dim).apply(make_codewords(code).plus));
    auto shifted = modular_phase_distribution(measure_modular_phase(rotated, 0, n, grid), grid);
    for (size_t g = 0; g < (size_t)grid; g++) {
        EXPECT_NEAR(shifted[(g + 3) % grid], dist[g], 1e-12) << g;
    }

    // Half of a maximally entangled pair is a uniform Fock mixture.
    Ket bell(std::vector<size_t>{8, 8});
    for (size_t i = 0; i < 8; i++) {
        bell[i * 8 + i] = 1 / std::sqrt(8.0);
    }
    auto flat = modular_phase_distribution(measure_modular_phase(bell, 0, 2, 8), 8);
    for (double p : flat) {
        EXPECT_NEAR(p, 1.0 / 8, 1e-12);
    }
    EXPECT_THROW(measure_modular_phase(bell, 0, 2, 3), std::invalid_argument);
    EXPECT_THROW(measure_modular_phase(make_codewords(code).plus, 0, 2, 32), DimensionError);
}

TEST(qec, teleport_noiseless_and_single_errors) {
    struct Label {
        ErrorLabel e;
        PriorKind prior;
    };
    std::vector<Label> labels{{ErrorLabel(0, 0), PriorKind::Symmetric},
                              {ErrorLabel(1, 0.2), PriorKind::Symmetric},
                              {ErrorLabel(-1, 0.1), PriorKind::LossOnly},
                              {ErrorLabel(0, -0.3), PriorKind::Symmetric}};
    // Reference values from an independent run of the same POVM model.
    std::vector<std::vector<double>> reference{{0.9228, 0.9213, 0.9225, 0.9186}, {0.9469, 0.9465, 0.9467, 0.9422}};
    std::vector<int> sizes{6, 10};
    for (size_t s = 0; s < sizes.size(); s++) {
        RotationCode code = ideal(2, sizes[s], 1, (size_t)(2 * sizes[s] + 8));
        for (size_t i = 0; i < labels.size(); i++) {
            TeleportResult r = run_teleport(code, labels[i].e, labels[i].prior);
            EXPECT_NEAR(r.fidelity, reference[s][i], 5e-4) << "M=" << sizes[s] << " " << labels[i].e.str();
            EXPECT_LT(r.discarded_weight, 1e-9);
            EXPECT_FALSE(r.information_destroyed);
        }
    }
    EXPECT_THROW(run_teleport(ideal(2, 6, 0, 20), ErrorLabel(0, 0)), std::invalid_argument);
}

TEST(qec, teleport_sampled_branch) {
    RotationCode code = ideal(2, 6, 1, 20);
    std::mt19937_64 a(9), b(9);
    TeleportResult x = run_teleport(code, ErrorLabel(1, 0.2), PriorKind::Symmetric, LogicalState::default_input(), {}, &a);
    TeleportResult y = run_teleport(code, ErrorLabel(1, 0.2), PriorKind::Symmetric, LogicalState::default_input(), {}, &b);
    EXPECT_EQ(x.fidelity, y.fidelity);
    EXPECT_GE(x.fidelity, 0);
    EXPECT_LE(x.fidelity, 1 + 1e-12);
}

TEST(qec, teleport_memory_guard) {
    TeleportOptions o;
    o.dim = 101;
    EXPECT_THROW(run_teleport(ideal(2, 6, 1, 20), ErrorLabel(0, 0), PriorKind::Symmetric,
                              LogicalState::default_input(), o),
                 DimensionError);
}

TEST(qec, sampled_errors_follow_prior) {
    ChannelPrior loss{PriorKind::LossOnly, 1.5, 0.2};
    ChannelPrior gain{PriorKind::GainOnly, 1.5, 0.0};
    for (size_t t = 0; t < 200; t++) {
        auto r = trial_rng(3, t);
        EXPECT_LE(sample_error(loss, r).k(), 0);
        auto g = trial_rng(3, t);
        ErrorLabel e = sample_error(gain, g);
        EXPECT_GE(e.k(), 0);
        EXPECT_EQ(e.theta(), 0.0);
    }
    auto a = trial_rng(42, 7), b = trial_rng(42, 7), c = trial_rng(42, 8);
    EXPECT_EQ(a(), b());
    EXPECT_NE(a(), c());
}

TEST(qec, monte_carlo_zero_rate) {
    RotationCode code = ideal(2, 8, 3, 30);
    MonteCarloResult r = monte_carlo(code, ChannelPrior{}, Scheme::Direct, 20, 1, 2);
    EXPECT_EQ(r.summary.trials, 20u);
    for (const auto &t : r.records) {
        EXPECT_NEAR(t.fidelity, 1, 1e-12);
    }
    EXPECT_EQ(r.summary.logical_error_rate, 0.0);
}

TEST(qec, monte_carlo_monotone_in_dephasing) {
    RotationCode code = ideal(2, 12, 3, 44);
    ChannelPrior quiet{PriorKind::LossOnly, 0.1, 0.05};
    ChannelPrior noisy{PriorKind::LossOnly, 0.1, 0.3};
    auto a = monte_carlo(code, quiet, Scheme::Direct, 1000, 17, 2);
    auto b = monte_carlo(code, noisy, Scheme::Direct, 1000, 17, 2);
    EXPECT_LT(a.summary.logical_error_rate, b.summary.logical_error_rate);
}

TEST(qec, monte_carlo_deterministic_across_threads) {
    RotationCode code = ideal(2, 10, 3, 40);
    ChannelPrior prior{PriorKind::Symmetric, 0.6, 0.2};
    std::string serial = trials_table(monte_carlo(code, prior, Scheme::Direct, 64, 123, 1).records).str();
    std::string parallel = trials_table(monte_carlo(code, prior, Scheme::Direct, 64, 123, 4).records).str();
    EXPECT_EQ(serial, parallel);
    std::string again = trials_table(monte_carlo(code, prior, Scheme::Direct, 64, 123, 3).records).str();
    EXPECT_EQ(serial, again);
    std::string other = trials_table(monte_carlo(code, prior, Scheme::Direct, 64, 124, 1).records).str();
    EXPECT_NE(serial, other);
}

TEST(qec, summary_statistics) {
    std::vector<TrialRecord> recs(20);
    for (size_t i = 0; i < 20; i++) {
        recs[i].fidelity = i / 19.0;
    }
    recs[3].information_destroyed = true;
    MonteCarloSummary s = summarize(recs);
    EXPECT_NEAR(s.mean_fidelity, 0.5, 1e-15);
    EXPECT_NEAR(s.median_fidelity, 0.5, 1e-15);
    EXPECT_EQ(s.q05_fidelity, 0.0);
    EXPECT_EQ(s.min_fidelity, 0.0);
    EXPECT_EQ(s.information_destroyed, 1u);
    // Fidelities 0/19 .. 17/19 are below 0.9.
    EXPECT_NEAR(s.logical_error_rate, 18.0 / 20, 1e-15);
    CsvTable t = trials_table(recs);
    EXPECT_EQ(t.schema, "trials");
    EXPECT_EQ(t.rows.size(), 20u);
}
