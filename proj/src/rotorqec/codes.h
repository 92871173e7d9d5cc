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

#ifndef ROTORQEC_CODES_H
#define ROTORQEC_CODES_H

#include <iosfwd>
#include <string>
#include <vector>

#include "rotorqec/fock.h"

namespace rotorqec {

/// Amplitudes f_j on consecutive Fock grid points, starting at the code's
/// first grid point. Factories return values with sum |f_j|^2 = 1; codewords
/// are renormalized one by one, so only the ratios within each parity matter.
struct AmplitudeProfile {
    int order = 1;
    std::vector<cplx> values;
    std::string provenance;
};

AmplitudeProfile make_ideal_profile(int order, int grid_points);
/// f_j proportional to alpha^{jN} / sqrt((jN)!), truncated to grid points that fit in d with the guard.
AmplitudeProfile make_cat_profile(int order, cplx alpha, Dim d);
/// f_j proportional to sqrt(binom(K, j)), j = 0..K. Amplitudes follow the binomial-code literature.
AmplitudeProfile make_binomial_profile(int order, int k_binomial, Dim d);
AmplitudeProfile make_custom_profile(int order, std::vector<cplx> values, std::string provenance);

/// A rotation code: profile value j sits on Fock state (offset + j) * order.
/// Logical |0> collects even absolute grid points and |1> the odd ones.
struct RotationCode {
    int order;
    int offset;
    AmplitudeProfile profile;
    Dim dim;

    /// Number of Fock levels above the top of the support that must stay empty.
    int guard() const {
        return 2 * order;
    }
    /// Largest Fock index carrying a non-zero amplitude.
    size_t top_level() const;
    /// Throws DimensionError or std::invalid_argument when the code is not representable.
    void validate() const;
};

RotationCode make_code(AmplitudeProfile profile, int offset, Dim d);

struct Codewords {
    Ket zero;
    Ket one;
    Ket plus;
    Ket minus;
};

Codewords make_codewords(const RotationCode &code);

/// Per-codeword normalized amplitude on absolute grid point m (zero off the support).
cplx grid_amplitude(const RotationCode &code, int m);

Operator codespace_projector(const RotationCode &code);
/// The same projector assembled from grid amplitudes and parity factors.
Operator codespace_projector_from_profile(const RotationCode &code);

/// sum_m w_m e^{i (phi N + pi) m} with w_m = |<mN|+>|^2 over absolute grid index m.
cplx phase_expectation(const RotationCode &code, double phi);
/// Holevo variance 1/|<+|Sigma^-_N|+>|^2 - 1 of the modular phase.
double modular_phase_variance(const RotationCode &code);

void write_profile_csv(std::ostream &out, const AmplitudeProfile &profile);
AmplitudeProfile read_profile_csv(std::istream &in, int order);

}  // namespace rotorqec

#endif
