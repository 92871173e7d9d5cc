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

#include "rotorqec/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rotorqec/gates.h"
#include "rotorqec/qec.h"

namespace rotorqec {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Drops a trailing '#' comment that is not inside double quotes.
std::string strip_comment(const std::string &s) {
    bool quoted = false;
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '"') {
            quoted = !quoted;
        } else if (s[i] == '#' && !quoted) {
            return s.substr(0, i);
        }
    }
    return s;
}

std::string as_string(const std::string &key, const std::string &v) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
        return v.substr(1, v.size() - 2);
    }
    if (v.find('"') != std::string::npos) {
        throw ConfigError(key, "unbalanced quotes in '" + v + "'");
    }
    return v;
}

template <typename T>
T as_integer(const std::string &key, const std::string &v, const char *what) {
    T out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        throw ConfigError(key, std::string("expected ") + what + ", got '" + v + "'");
    }
    return out;
}

double as_real(const std::string &key, const std::string &v) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty() || !std::isfinite(out)) {
        throw ConfigError(key, "expected a finite number, got '" + v + "'");
    }
    return out;
}

bool as_bool(const std::string &key, const std::string &v) {
    if (v == "true") {
        return true;
    }
    if (v == "false") {
        return false;
    }
    throw ConfigError(key, "expected true or false, got '" + v + "'");
}

std::vector<std::string> as_list(const std::string &key, const std::string &v) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
        throw ConfigError(key, "expected a list like [1, 2], got '" + v + "'");
    }
    std::vector<std::string> out;
    std::string body = trim(v.substr(1, v.size() - 2));
    if (body.empty()) {
        return out;
    }
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(trim(item));
    }
    return out;
}

}  // namespace

void set_config_value(RunConfig &cfg, const std::string &key, const std::string &raw) {
    const std::string v = trim(raw);
    if (key == "code.family") {
        cfg.code.family = as_string(key, v);
    } else if (key == "code.N") {
        cfg.code.order = as_integer<int>(key, v, "an integer");
    } else if (key == "code.k0") {
        cfg.code.offset = as_integer<int>(key, v, "an integer");
    } else if (key == "code.M") {
        cfg.code.grid_points = as_integer<int>(key, v, "an integer");
    } else if (key == "code.alpha") {
        cfg.code.alpha = as_real(key, v);
    } else if (key == "code.K") {
        cfg.code.binomial_k = as_integer<int>(key, v, "an integer");
    } else if (key == "dim") {
        cfg.dim = as_integer<size_t>(key, v, "a non-negative integer");
    } else if (key == "pad") {
        cfg.pad = as_integer<size_t>(key, v, "a non-negative integer");
    } else if (key == "tol") {
        cfg.tol = as_real(key, v);
    } else if (key == "seed") {
        cfg.seed = as_integer<uint64_t>(key, v, "a non-negative integer");
    } else if (key == "trials") {
        cfg.trials = as_integer<size_t>(key, v, "a non-negative integer");
    } else if (key == "prior") {
        cfg.prior = as_string(key, v);
    } else if (key == "scheme") {
        cfg.scheme = as_string(key, v);
    } else if (key == "gamma") {
        cfg.gamma = as_real(key, v);
    } else if (key == "sigma") {
        cfg.sigma = as_real(key, v);
    } else if (key == "gate") {
        cfg.gate = as_string(key, v);
    } else if (key == "ell") {
        cfg.ell = as_integer<int>(key, v, "an integer");
    } else if (key == "phi") {
        cfg.phi = as_real(key, v);
    } else if (key == "k_max") {
        cfg.k_max = as_integer<int>(key, v, "an integer");
    } else if (key == "theta_samples") {
        cfg.theta_samples = as_integer<int>(key, v, "an integer");
    } else if (key == "orders") {
        cfg.orders.clear();
        for (const auto &item : as_list(key, v)) {
            cfg.orders.push_back(as_integer<int>(key, item, "an integer list"));
        }
    } else if (key == "per_window") {
        cfg.per_window = as_integer<int>(key, v, "an integer");
    } else if (key == "phase_grid") {
        cfg.phase_grid = as_integer<int>(key, v, "an integer");
    } else if (key == "contrived") {
        cfg.contrived = as_bool(key, v);
    } else if (key == "cat_alphas") {
        cfg.cat_alphas.clear();
        for (const auto &item : as_list(key, v)) {
            cfg.cat_alphas.push_back(as_real(key, item));
        }
    } else if (key == "out_dir") {
        cfg.out_dir = as_string(key, v);
    } else {
        throw ConfigError(key, "unknown key");
    }
}

void RunConfig::validate() const {
    if (code.family != "ideal" && code.family != "cat" && code.family != "binomial") {
        throw ConfigError("code.family", "expected ideal, cat or binomial, got '" + code.family + "'");
    }
    if (code.order < 1 || code.order > 64) {
        throw ConfigError("code.N", "order must be in [1, 64]");
    }
    if (code.offset && *code.offset < 0) {
        throw ConfigError("code.k0", "grid offset must be non-negative");
    }
    if (code.grid_points < 2) {
        throw ConfigError("code.M", "ideal codes need at least 2 grid points");
    }
    if (!(code.alpha > 0)) {
        throw ConfigError("code.alpha", "cat amplitude must be positive");
    }
    if (code.binomial_k < 1) {
        throw ConfigError("code.K", "binomial K must be at least 1");
    }
    if (dim == 1) {
        throw ConfigError("dim", "dimension must be at least 2 (or 0 for automatic)");
    }
    if (!(tol > 0)) {
        throw ConfigError("tol", "tolerance must be positive");
    }
    try {
        parse_prior(prior);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("prior", e.what());
    }
    try {
        parse_scheme(scheme);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("scheme", e.what());
    }
    if (gamma < 0) {
        throw ConfigError("gamma", "shift rate must be non-negative");
    }
    if (sigma < 0) {
        throw ConfigError("sigma", "rotation width must be non-negative");
    }
    if (!gate.empty()) {
        try {
            parse_gate_kind(gate);
        } catch (const std::invalid_argument &e) {
            throw ConfigError("gate", e.what());
        }
    }
    if (ell < 0 || ell > 6) {
        throw ConfigError("ell", "rotation level must be in [0, 6]");
    }
    if (k_max < 0 || k_max > 16) {
        throw ConfigError("k_max", "shift range must be in [0, 16]");
    }
    if (theta_samples < 1) {
        throw ConfigError("theta_samples", "need at least one angle");
    }
    if (orders.empty()) {
        throw ConfigError("orders", "need at least one order");
    }
    for (int o : orders) {
        if (o < 1 || o > 16) {
            throw ConfigError("orders", "orders must be in [1, 16]");
        }
    }
    if (per_window < 2 || per_window % 2) {
        throw ConfigError("per_window", "phase resolution must be an even number >= 2");
    }
    if (phase_grid < 2) {
        throw ConfigError("phase_grid", "phase grid needs at least 2 points");
    }
    for (double a : cat_alphas) {
        if (!(a > 0)) {
            throw ConfigError("cat_alphas", "cat amplitudes must be positive");
        }
    }
    if (out_dir.empty()) {
        throw ConfigError("out_dir", "output directory must not be empty");
    }
}

std::map<std::string, ConfigEntry> parse_config_text(const std::string &text) {
    std::map<std::string, ConfigEntry> out;
    std::stringstream ss(text);
    std::string line, section;
    int number = 0;
    while (std::getline(ss, line)) {
        number++;
        std::string s = trim(strip_comment(line));
        if (s.empty()) {
            continue;
        }
        if (s.front() == '[' && s.back() == ']' && s.find('=') == std::string::npos) {
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(number), "expected 'key = value', got '" + s + "'");
        }
        std::string key = trim(s.substr(0, eq));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(number), "missing key");
        }
        if (!section.empty()) {
            key = section + "." + key;
        }
        if (out.count(key)) {
            throw ConfigError(key, "set twice (lines " + std::to_string(out[key].line) + " and " +
                                       std::to_string(number) + ")");
        }
        out[key] = ConfigEntry{trim(s.substr(eq + 1)), number};
    }
    return out;
}

RunConfig apply_config(const std::map<std::string, ConfigEntry> &entries, RunConfig base) {
    for (const auto &[key, e] : entries) {
        set_config_value(base, key, e.value);
    }
    return base;
}

RunConfig load_config(const std::filesystem::path &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("--config", "cannot read " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return apply_config(parse_config_text(ss.str()), std::move(base));
}

namespace {

RotationCode build_code_unchecked(const RunConfig &cfg, int default_offset, size_t margin) {
    const CodeConfig &c = cfg.code;
    const int k0 = c.offset.value_or(default_offset);
    const size_t n = (size_t)c.order;
    const size_t lift = (size_t)k0 * n;
    AmplitudeProfile p;
    size_t profile_dim = 0;
    if (c.family == "ideal") {
        p = make_ideal_profile(c.order, c.grid_points);
        profile_dim = (size_t)(c.grid_points + 1) * n + 1;
    } else if (c.family == "cat") {
        profile_dim = cfg.dim > lift ? cfg.dim - lift
                                     : (size_t)std::ceil(c.alpha * c.alpha + 12 * c.alpha + 30) + 4 * n;
        p = make_cat_profile(c.order, c.alpha, Dim(profile_dim));
    } else {
        profile_dim = cfg.dim > lift ? cfg.dim - lift : (size_t)(c.binomial_k + 3) * n + 1;
        p = make_binomial_profile(c.order, c.binomial_k, Dim(profile_dim));
    }
    size_t d = cfg.dim;
    if (d == 0) {
        size_t last = 0;
        for (size_t j = 0; j < p.values.size(); j++) {
            if (p.values[j] != cplx(0)) {
                last = j;
            }
        }
        d = (last + (size_t)k0) * n + 2 * n + 1 + margin;
    }
    return make_code(std::move(p), k0, Dim(d));
}

}  // namespace

RotationCode build_code(const RunConfig &cfg, int default_offset, size_t margin) {
    try {
        return build_code_unchecked(cfg, default_offset, margin);
    } catch (const DimensionError &e) {
        throw ConfigError("dim", e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError("code", e.what());
    }
}

}  // namespace rotorqec
