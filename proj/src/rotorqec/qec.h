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

#ifndef ROTORQEC_QEC_H
#define ROTORQEC_QEC_H

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotorqec/codes.h"
#include "rotorqec/error_basis.h"
#include "rotorqec/table_io.h"

namespace rotorqec {

/// Thrown when an error removes every amplitude of the state.
struct InformationDestroyed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Syndrome {
    cplx lambda_Z{1};
    cplx lambda_X{1};
    /// |<S>| / ||psi||^2; 1 for an exact eigenstate.
    double eigness_Z = 1;
    double eigness_X = 1;
};

enum class PriorKind { GainOnly, LossOnly, Symmetric, PhaseCodeAny };
std::string prior_name(PriorKind kind);
/// Accepts gain, loss, symmetric, any (and the enum spellings).
PriorKind parse_prior(const std::string &name);

struct ChannelPrior {
    PriorKind kind = PriorKind::Symmetric;
    /// Mean number of shift events per trial.
    double gamma = 0;
    /// Width of the wrapped normal rotation noise.
    double sigma = 0;

    void validate() const;
};

struct RecoveryPlan {
    int m_est = 0;
    double theta_est = 0;
};

/// Logical state alpha|0> + beta|1>.
struct LogicalState {
    cplx alpha{1};
    cplx beta{0};

    /// Bloch vector (1,1,1)/sqrt(3).
    static LogicalState default_input();
    LogicalState normalized() const;
    Ket encode(const Codewords &w) const;
};

struct CorruptedState {
    Ket state;
    /// e^{i theta m H(-m)}, split off from the ket.
    cplx global_phase{1};
};

CorruptedState corrupt(const RotationCode &code, const LogicalState &logical, const ErrorLabel &label);
CorruptedState corrupt(const RotationCode &code, const ErrorLabel &label);

Syndrome extract_syndrome(const RotationCode &code, const Ket &state);

int estimate_shift(cplx lambda_Z, PriorKind prior, int order, int offset);
double estimate_phase(cplx lambda_X, PriorKind prior, int order);
Operator make_recovery(const RecoveryPlan &plan, int order, Dim d);
/// Same as make_recovery(plan, order, d).apply(state) without the matrix.
Ket apply_recovery(const RecoveryPlan &plan, int order, const Ket &state);

struct QecResult {
    double fidelity = 0;
    Syndrome syndrome;
    RecoveryPlan plan;
    Ket output;
    bool information_destroyed = false;
};

/// Direct stabilizer scheme; needs offset >= 3.
QecResult run_direct(const RotationCode &code, const ErrorLabel &label, PriorKind prior = PriorKind::Symmetric,
                     const LogicalState &input = LogicalState::default_input());

struct NumberOutcome {
    int residue = 0;
    double probability = 0;
    Ket post_state;
};
/// All n = j (mod order) sectors of `mode`, including zero-probability ones.
std::vector<NumberOutcome> measure_modular_number(const Ket &state, size_t mode, int order);
NumberOutcome sample_modular_number(const Ket &state, size_t mode, int order, std::mt19937_64 &rng);

struct PhaseOutcome {
    /// Index on the G-point grid over [-pi/N, pi/N).
    int g = 0;
    /// Which of the N copies of the window the underlying London state sits in.
    int copy = 0;
    double phi_hat = 0;
    double probability = 0;
    /// Remaining modes after the destructive readout of `mode`.
    Ket post_state;
};
/// Destructive canonical-phase readout on K = order * grid London states, K >= d required.
std::vector<PhaseOutcome> measure_modular_phase(const Ket &state, size_t mode, int order, int grid);
/// Outcome probabilities folded onto the G-point grid.
std::vector<double> modular_phase_distribution(const std::vector<PhaseOutcome> &outcomes, int grid);

struct TeleportOptions {
    /// Phase grid points per 2 pi / N window.
    int grid = 128;
    /// Per-mode dimension; 0 picks max(24, what the code and the error need).
    size_t dim = 0;
    /// Branches below this probability are skipped (their weight is reported).
    double prune = 1e-14;
};

struct TeleportResult {
    double fidelity = 0;
    double discarded_weight = 0;
    size_t dim = 0;
    /// Estimates of the sampled branch, or of the most likely branch for exact averages.
    RecoveryPlan plan;
    Syndrome syndrome;
    bool information_destroyed = false;
};

/// Teleportation scheme through two CROT gates; needs offset >= 1. With `rng` a single branch is sampled.
TeleportResult run_teleport(const RotationCode &code, const ErrorLabel &label, PriorKind prior = PriorKind::Symmetric,
                            const LogicalState &input = LogicalState::default_input(),
                            const TeleportOptions &options = {}, std::mt19937_64 *rng = nullptr);

enum class Scheme { Direct, Teleport };
std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string &name);

struct TrialRecord {
    size_t trial = 0;
    int k = 0;
    double theta = 0;
    double arg_lambda_Z = 0;
    double arg_lambda_X = 0;
    int m_est = 0;
    double theta_est = 0;
    double fidelity = 0;
    bool information_destroyed = false;
};

struct MonteCarloSummary {
    size_t trials = 0;
    double mean_fidelity = 0;
    double median_fidelity = 0;
    double q05_fidelity = 0;
    double min_fidelity = 0;
    double logical_error_rate = 0;
    size_t information_destroyed = 0;
    /// Fidelity below which a trial counts as a logical error.
    double logical_threshold = 0.9;
};

struct MonteCarloResult {
    std::vector<TrialRecord> records;
    MonteCarloSummary summary;
};

/// Per-trial generator seeded from (seed, trial).
std::mt19937_64 trial_rng(uint64_t seed, size_t trial);
ErrorLabel sample_error(const ChannelPrior &prior, std::mt19937_64 &rng);

MonteCarloResult monte_carlo(const RotationCode &code, const ChannelPrior &prior, Scheme scheme, size_t trials,
                             uint64_t seed, size_t threads, const TeleportOptions &teleport = {});
MonteCarloSummary summarize(const std::vector<TrialRecord> &records);
CsvTable trials_table(const std::vector<TrialRecord> &records);

}  // namespace rotorqec

#endif
