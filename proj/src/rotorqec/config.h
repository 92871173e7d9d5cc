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

#ifndef ROTORQEC_CONFIG_H
#define ROTORQEC_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotorqec/codes.h"

namespace rotorqec {

/// Invalid configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

struct CodeConfig {
    /// ideal, cat or binomial.
    std::string family = "ideal";
    int order = 2;
    /// Grid offset k0; unset means the command default (3 direct, 1 teleport, 0 otherwise).
    std::optional<int> offset;
    int grid_points = 12;
    double alpha = 2.0;
    int binomial_k = 2;
};

struct RunConfig {
    CodeConfig code;
    /// Fock dimension; 0 picks one from the code and the command.
    size_t dim = 0;
    /// Safe-subspace pad; 0 picks the per-case default.
    size_t pad = 0;
    double tol = 1e-9;
    uint64_t seed = 1;
    size_t trials = 100;
    std::string prior = "symmetric";
    std::string scheme = "direct";
    double gamma = 0;
    double sigma = 0;
    /// Gate filter (verify-propagation) or gate under test (gate-check); empty means all / Z.
    std::string gate;
    int ell = 0;
    double phi = 0.7;
    int k_max = 3;
    int theta_samples = 8;
    std::vector<int> orders{1, 2, 3, 4};
    int per_window = 64;
    int phase_grid = 128;
    bool contrived = false;
    std::vector<double> cat_alphas;
    std::filesystem::path out_dir = "rotorqec_out";

    /// Throws ConfigError naming the first bad field.
    void validate() const;
};

/// key -> raw value text; section headers prefix keys as "section.key".
struct ConfigEntry {
    std::string value;
    int line = 0;
};
std::map<std::string, ConfigEntry> parse_config_text(const std::string &text);

/// Applies parsed entries on top of `base`; unknown keys are errors.
RunConfig apply_config(const std::map<std::string, ConfigEntry> &entries, RunConfig base = {});
RunConfig load_config(const std::filesystem::path &path, RunConfig base = {});

/// Applies one `key = value` pair.
void set_config_value(RunConfig &cfg, const std::string &key, const std::string &value);

/// The code described by cfg.code. `default_offset` is used when code.k0 is unset; `margin` extra levels are
/// added above the guard when the dimension is picked automatically.
RotationCode build_code(const RunConfig &cfg, int default_offset, size_t margin = 0);

}  // namespace rotorqec

#endif
