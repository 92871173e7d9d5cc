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

#ifndef ROTORQEC_DISTANCE_H
#define ROTORQEC_DISTANCE_H

#include <array>
#include <string>
#include <vector>

#include "rotorqec/codes.h"
#include "rotorqec/error_basis.h"
#include "rotorqec/table_io.h"

namespace rotorqec {

using Block2 = std::array<cplx, 4>;

/// <i| E_a^dag E_b |j> over the logical basis {|0>, |1>}, row-major.
struct KLBlock {
    Block2 matrix{};
    /// Trace fit tr(matrix) / 2.
    cplx alpha{0};
    /// ||matrix - alpha I||, operator 2-norm.
    double proportionality_deviation = 0;
    /// ||matrix||, operator 2-norm.
    double norm = 0;
};

KLBlock kl_block(const RotationCode &code, const ErrorLabel &a, const ErrorLabel &b);
KLBlock kl_block(const Codewords &bra, const Codewords &ket, const ErrorLabel &a, const ErrorLabel &b);

/// max |alpha_ab - conj(alpha_ba)| over same-k pairs of `errors`.
double hermiticity_check(const RotationCode &code, const std::vector<ErrorLabel> &errors);

struct GridCell {
    int k = 0;
    double theta = 0;
    double deviation = 0;
    double block_norm = 0;
    bool compatible = false;
    /// theta = +-pi/2N or |k| = N.
    bool boundary = false;
    /// Not compatible, but the block is a scaled unitary: an undetectable logical operation.
    bool logical = false;
};

struct DetectabilityGrid {
    std::string code_id;
    int k_min = 0;
    int k_max = 0;
    std::vector<double> thetas;
    std::vector<GridCell> cells;
    double tol = 1e-8;
};

/// theta_j = -pi/N + j pi/(per_window N), j = 0 .. 2 per_window.
std::vector<double> theta_grid(int order, int per_window = 64);

DetectabilityGrid detectability_grid(const RotationCode &code, int k_min, int k_max,
                                     const std::vector<double> &thetas, double tol = 1e-8, size_t threads = 1);
CsvTable grid_table(const DetectabilityGrid &grid);

struct TradeoffRow {
    int order = 0;
    int d_n = 0;
    double d_theta = 0;
    double product = 0;
    /// Largest KL deviation over the correctable window; 0 for an exact code.
    double approximation = 0;
    std::string code_id;
};

int number_distance(const RotationCode &code, double tol = 1e-8);
/// Smallest theta > 0 on a grid of step pi/(per_window N) at which |phase_expectation| reaches 1.
double phase_distance(const RotationCode &code, int per_window = 64);
/// Max deviation of (0,0) against the open window |k| < N/2 (k = N/2 allowed), |theta| < pi/2N.
double window_deviation(const RotationCode &code, int per_window = 64);

TradeoffRow measure_tradeoff(const RotationCode &code, const std::string &code_id, int per_window = 64);
std::vector<TradeoffRow> verify_tradeoff(const std::vector<int> &orders, int grid_points, int per_window = 64);
CsvTable tradeoff_table(const std::vector<TradeoffRow> &rows);

/// e^{i phi' (j + N/2)} [cos(phi' N/2) X_L - sin(phi' N/2) Y_L], phi' = phi - theta.
Block2 shift_law_form(int order, int j, double theta, double phi);
/// Relative residual of the best complex-scalar fit of `block` to `form`.
double scalar_fit_residual(const Block2 &block, const Block2 &form);

struct ShiftLawCheck {
    double bulk_residual = 0;
    double edge_residual = 0;
};
/// Block of (j, theta) vs (j + N, phi) for the ideal code; the bulk value extends the bra past the ket support.
ShiftLawCheck shift_law(int order, int grid_points, int j, double theta, double phi);

struct ContrivedReport {
    int order = 2;
    int periods = 1;
    cplx x_overlap{0};
    std::vector<int> shifts;
    std::vector<double> pair_deviation;
    double logical_x_deviation = 0;
};
/// Profile with period 1, i, i, 1, -1, i, i, -1, truncated at 8 periods + 1 points.
AmplitudeProfile contrived_profile(int order, int periods);
ContrivedReport contrived_code_check(int order = 2, int periods = 2);

struct ConvergenceRow {
    int grid_points = 0;
    double max_deviation = 0;
};
std::vector<ConvergenceRow> finite_m_convergence(int order, const std::vector<int> &grid_points, int per_window = 64);

struct CatSweepRow {
    double alpha = 0;
    double deviation = 0;
    double product = 0;
};
std::vector<CatSweepRow> cat_alpha_sweep(int order, const std::vector<double> &alphas, int per_window = 64);

}  // namespace rotorqec

#endif
