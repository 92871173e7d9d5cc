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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rotorqec/parallel.h"
#include "rotorqec/rational.h"

namespace rotorqec {

namespace {

constexpr double PI = std::numbers::pi;

// Arg on (-pi, pi].
double arg_half_open(cplx z) {
    double a = std::arg(z);
    return a <= -PI ? PI : a;
}

int mod_nonneg(long a, long m) {
    return (int)(((a % m) + m) % m);
}

cplx unit_phase(cplx z) {
    double r = std::abs(z);
    return r > 0 ? z / r : cplx(1);
}

Ket checked_normalized(const Ket &k, const char *what) {
    if (k.norm() == 0) {
        throw InformationDestroyed(std::string("state annihilated by ") + what);
    }
    return k.normalized();
}

}  // namespace

std::string prior_name(PriorKind kind) {
    switch (kind) {
        case PriorKind::GainOnly:
            return "gain";
        case PriorKind::LossOnly:
            return "loss";
        case PriorKind::Symmetric:
            return "symmetric";
        case PriorKind::PhaseCodeAny:
            return "any";
    }
    return "?";
}

PriorKind parse_prior(const std::string &name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return (char)std::tolower(c); });
    if (s == "gain" || s == "gainonly") {
        return PriorKind::GainOnly;
    }
    if (s == "loss" || s == "lossonly") {
        return PriorKind::LossOnly;
    }
    if (s == "symmetric") {
        return PriorKind::Symmetric;
    }
    if (s == "any" || s == "phasecodeany") {
        return PriorKind::PhaseCodeAny;
    }
    throw std::invalid_argument("unknown prior '" + name + "' (expected gain, loss, symmetric or any)");
}

void ChannelPrior::validate() const {
    if (!(gamma >= 0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("shift rate gamma must be a non-negative number");
    }
    if (!(sigma >= 0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("rotation width sigma must be a non-negative number");
    }
}

LogicalState LogicalState::default_input() {
    // Bloch vector (1,1,1)/sqrt(3): cos(t/2)|0> + e^{i pi/4} sin(t/2)|1>, cos t = 1/sqrt(3).
    double t = std::acos(1 / std::sqrt(3.0));
    return LogicalState{std::cos(t / 2), std::polar(std::sin(t / 2), PI / 4)};
}

LogicalState LogicalState::normalized() const {
    double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (n == 0) {
        throw std::invalid_argument("logical state has zero norm");
    }
    return LogicalState{alpha / n, beta / n};
}

Ket LogicalState::encode(const Codewords &w) const {
    LogicalState s = normalized();
    return w.zero * s.alpha + w.one * s.beta;
}

CorruptedState corrupt(const RotationCode &code, const LogicalState &logical, const ErrorLabel &label) {
    Codewords w = make_codewords(code);
    if (label.k() > 0 && code.top_level() + (size_t)label.k() >= code.dim.value()) {
        throw DimensionError("shift " + std::to_string(label.k()) + " pushes the code past d=" +
                             std::to_string(code.dim.value()));
    }
    Ket psi = logical.encode(w);
    Ket hit = apply_error(label, psi);
    CorruptedState out;
    out.global_phase = std::polar(1.0, label.theta() * label.k() * heaviside(-label.k()));
    out.state = checked_normalized(hit, "the error") * std::conj(out.global_phase);
    return out;
}

CorruptedState corrupt(const RotationCode &code, const ErrorLabel &label) {
    return corrupt(code, LogicalState::default_input(), label);
}

Syndrome extract_syndrome(const RotationCode &code, const Ket &state) {
    const size_t n = (size_t)code.order;
    const size_t d = state.size();
    double norm2 = 0;
    cplx sz = 0, sx = 0;
    for (size_t i = 0; i < d; i++) {
        double p = std::norm(state[i]);
        norm2 += p;
        sz += p * exp_i_pi(Rational(2 * (int64_t)(i % n), (int64_t)n));
        if (i >= 2 * n) {
            sx += std::conj(state[i - 2 * n]) * state[i];
        }
    }
    Syndrome s;
    if (norm2 == 0) {
        throw InformationDestroyed("syndrome of a zero state");
    }
    s.lambda_Z = unit_phase(sz);
    s.lambda_X = unit_phase(sx);
    s.eigness_Z = std::abs(sz) / norm2;
    s.eigness_X = std::abs(sx) / norm2;
    return s;
}

int estimate_shift(cplx lambda_Z, PriorKind prior, int order, int offset) {
    const int n = order;
    int m_bar = (int)std::lround(n * arg_half_open(lambda_Z) / (2 * PI));
    int r = mod_nonneg(m_bar, n);
    switch (prior) {
        case PriorKind::GainOnly:
            return r;
        case PriorKind::LossOnly:
            return r == 0 ? 0 : r - n;
        case PriorKind::Symmetric: {
            // Representative in (-N/2, N/2].
            int m = r;
            if (2 * m > n) {
                m -= n;
            }
            return m;
        }
        case PriorKind::PhaseCodeAny: {
            int lo = (2 - offset) * n;
            return lo + mod_nonneg(r - lo, n);
        }
    }
    return r;
}

double estimate_phase(cplx lambda_X, PriorKind, int order) {
    double bar = arg_half_open(lambda_X) / (2 * order);
    double alt = bar - PI / order;
    return std::abs(alt) < std::abs(bar) ? alt : bar;
}

Operator make_recovery(const RecoveryPlan &plan, int order, Dim d) {
    return make_error(ErrorLabel(2 * order - plan.m_est, -plan.theta_est), d);
}

Ket apply_recovery(const RecoveryPlan &plan, int order, const Ket &state) {
    return apply_error(ErrorLabel(2 * order - plan.m_est, -plan.theta_est), state);
}

QecResult run_direct(const RotationCode &code, const ErrorLabel &label, PriorKind prior, const LogicalState &input) {
    if (code.offset < 3) {
        throw std::invalid_argument("direct scheme needs the grid offset k0 >= 3, got " + std::to_string(code.offset));
    }
    const int n = code.order;
    Ket psi = input.encode(make_codewords(code));
    QecResult r;
    try {
        Ket hit = corrupt(code, input, label).state;
        r.syndrome = extract_syndrome(code, hit);
        // The phase stabilizer applied as an operator: a 2N down-shift.
        Ket after_x = checked_normalized(apply_error(ErrorLabel(-2 * n, 0), hit), "the phase stabilizer");
        r.plan.m_est = estimate_shift(r.syndrome.lambda_Z, prior, n, code.offset);
        r.plan.theta_est = estimate_phase(r.syndrome.lambda_X, prior, n);
        if (code.top_level() + (size_t)std::max(0, label.k() - r.plan.m_est) >= code.dim.value()) {
            throw DimensionError("recovery pushes the state past d=" + std::to_string(code.dim.value()));
        }
        r.output = checked_normalized(apply_recovery(r.plan, n, after_x), "the recovery");
        r.fidelity = std::norm(psi.inner(r.output));
    } catch (const InformationDestroyed &) {
        r.information_destroyed = true;
        r.fidelity = 0;
    }
    return r;
}

std::vector<NumberOutcome> measure_modular_number(const Ket &state, size_t mode, int order) {
    const auto &dims = state.mode_dims();
    if (mode >= dims.size()) {
        throw DimensionError("mode index out of range");
    }
    std::vector<NumberOutcome> out((size_t)order);
    for (int j = 0; j < order; j++) {
        out[(size_t)j].residue = j;
        out[(size_t)j].post_state = Ket(dims);
    }
    for (size_t i = 0; i < state.size(); i++) {
        size_t n = mode_digits(dims, i)[mode];
        auto &o = out[n % (size_t)order];
        o.post_state[i] = state[i];
        o.probability += std::norm(state[i]);
    }
    double total = state.norm();
    total *= total;
    for (auto &o : out) {
        if (o.probability > 0) {
            o.post_state = o.post_state.normalized();
        }
        o.probability /= total;
    }
    return out;
}

NumberOutcome sample_modular_number(const Ket &state, size_t mode, int order, std::mt19937_64 &rng) {
    auto all = measure_modular_number(state, mode, order);
    std::vector<double> p;
    for (const auto &o : all) {
        p.push_back(o.probability);
    }
    std::discrete_distribution<size_t> pick(p.begin(), p.end());
    return all[pick(rng)];
}

std::vector<PhaseOutcome> measure_modular_phase(const Ket &state, size_t mode, int order, int grid) {
    const auto &dims = state.mode_dims();
    if (mode >= dims.size() || dims.size() < 2) {
        throw DimensionError("destructive phase readout needs a mode index of a multi-mode state");
    }
    if (grid < 2) {
        throw std::invalid_argument("phase grid needs at least 2 points");
    }
    const size_t dm = dims[mode];
    const size_t big_k = (size_t)order * (size_t)grid;
    if (big_k < dm) {
        throw std::invalid_argument("phase grid too coarse: N*G = " + std::to_string(big_k) +
                                    " is below the mode dimension " + std::to_string(dm));
    }
    size_t stride = 1;
    for (size_t m = mode + 1; m < dims.size(); m++) {
        stride *= dims[m];
    }
    const size_t outer = state.size() / (dm * stride);
    std::vector<size_t> rest;
    for (size_t m = 0; m < dims.size(); m++) {
        if (m != mode) {
            rest.push_back(dims[m]);
        }
    }
    const double scale = 1 / std::sqrt((double)big_k);
    std::vector<PhaseOutcome> out(big_k);
    std::vector<cplx> bra(dm);
    for (size_t k = 0; k < big_k; k++) {
        double phi = -PI / order + 2 * PI * (double)k / (double)big_k;
        for (size_t n = 0; n < dm; n++) {
            bra[n] = std::polar(scale, -phi * (double)n);
        }
        Ket post(rest);
        for (size_t o = 0; o < outer; o++) {
            for (size_t n = 0; n < dm; n++) {
                const cplx *src = state.amplitudes().data() + (o * dm + n) * stride;
                kernels::axpy(bra[n], src, post.amplitudes().data() + o * stride, stride);
            }
        }
        PhaseOutcome &r = out[k];
        r.g = (int)(k % (size_t)grid);
        r.copy = (int)(k / (size_t)grid);
        r.phi_hat = -PI / order + 2 * PI * r.g / (double)big_k;
        double nn = post.norm();
        r.probability = nn * nn;
        r.post_state = nn > 0 ? post * (1 / nn) : post;
    }
    return out;
}

std::vector<double> modular_phase_distribution(const std::vector<PhaseOutcome> &outcomes, int grid) {
    std::vector<double> p((size_t)grid, 0.0);
    for (const auto &o : outcomes) {
        p[(size_t)o.g] += o.probability;
    }
    return p;
}

namespace {

Ket crot_pair(const Ket &a, const Ket &b, int order) {
    const size_t da = a.size(), db = b.size();
    Ket out({da, db});
    const int64_t den = (int64_t)order * order;
    for (size_t i = 0; i < da; i++) {
        if (a[i] == cplx(0)) {
            continue;
        }
        for (size_t j = 0; j < db; j++) {
            if (b[j] != cplx(0)) {
                out[i * db + j] = a[i] * b[j] * exp_i_pi(Rational((int64_t)(i * j) % (2 * den), den));
            }
        }
    }
    return out;
}

size_t sample_index(const std::vector<PhaseOutcome> &outs, std::mt19937_64 &rng) {
    std::vector<double> p;
    for (const auto &o : outs) {
        p.push_back(o.probability);
    }
    std::discrete_distribution<size_t> pick(p.begin(), p.end());
    return pick(rng);
}

}  // namespace

TeleportResult run_teleport(const RotationCode &code, const ErrorLabel &label, PriorKind prior,
                            const LogicalState &input, const TeleportOptions &options, std::mt19937_64 *rng) {
    if (code.offset < 1) {
        throw std::invalid_argument("teleportation scheme needs the grid offset k0 >= 1, got " +
                                    std::to_string(code.offset));
    }
    const int n = code.order;
    size_t need = code.top_level() + (size_t)std::max(0, label.k()) + (size_t)code.guard() + 1;
    size_t d = options.dim ? options.dim : std::max<size_t>(24, need);
    if (d < need) {
        throw DimensionError("teleportation dimension " + std::to_string(d) + " is below the required " +
                             std::to_string(need));
    }
    if (d * d * d > 1000000) {
        throw DimensionError("three-mode teleportation state of " + std::to_string(d) + "^3 amplitudes exceeds 10^6");
    }
    RotationCode c = code;
    c.dim = Dim(d);
    Codewords w = make_codewords(c);

    TeleportResult res;
    res.dim = d;
    Ket data;
    try {
        data = corrupt(c, input, label).state;
    } catch (const InformationDestroyed &) {
        res.information_destroyed = true;
        return res;
    }
    const LogicalState in = input.normalized();

    struct Decoded {
        RecoveryPlan plan;
        Syndrome syn;
        double fidelity;
    };
    auto decode = [&](const PhaseOutcome &first, const PhaseOutcome &second) {
        int j1 = (int)std::lround(first.phi_hat * n / PI);
        int s1 = std::abs(j1) % 2;
        Decoded dc;
        dc.plan.theta_est = first.phi_hat - j1 * PI / n;
        int j2 = mod_nonneg(std::lround(second.phi_hat * n * n / PI), 2L * n);
        dc.syn.lambda_Z = exp_i_pi(Rational(2 * j2, n));
        dc.syn.lambda_X = std::polar(1.0, 2 * n * dc.plan.theta_est);
        dc.plan.m_est = estimate_shift(dc.syn.lambda_Z, prior, n, c.offset);
        int s2 = mod_nonneg((j2 - dc.plan.m_est) / n, 2);
        // Mode 3 holds X^{s2} Z^{s1} |psi>; the Pauli frame absorbs it.
        cplx a = in.alpha, b = s1 ? -in.beta : in.beta;
        if (s2) {
            std::swap(a, b);
        }
        Ket target = LogicalState{a, b}.encode(w);
        dc.fidelity = std::norm(target.inner(second.post_state));
        return dc;
    };

    auto first = measure_modular_phase(crot_pair(data, w.plus, n), 0, n, options.grid);
    if (rng) {
        const PhaseOutcome &f = first[sample_index(first, *rng)];
        auto second = measure_modular_phase(crot_pair(f.post_state, w.plus, n), 0, n, options.grid);
        const PhaseOutcome &s = second[sample_index(second, *rng)];
        Decoded dc = decode(f, s);
        res.fidelity = dc.fidelity;
        res.plan = dc.plan;
        res.syndrome = dc.syn;
        return res;
    }
    double best = -1;
    for (const auto &f : first) {
        if (f.probability < options.prune) {
            res.discarded_weight += f.probability;
            continue;
        }
        auto second = measure_modular_phase(crot_pair(f.post_state, w.plus, n), 0, n, options.grid);
        for (const auto &s : second) {
            double p = f.probability * s.probability;
            if (s.probability < options.prune) {
                res.discarded_weight += p;
                continue;
            }
            Decoded dc = decode(f, s);
            res.fidelity += p * dc.fidelity;
            if (p > best) {
                best = p;
                res.plan = dc.plan;
                res.syndrome = dc.syn;
            }
        }
    }
    return res;
}

std::string scheme_name(Scheme s) {
    return s == Scheme::Direct ? "direct" : "teleport";
}

Scheme parse_scheme(const std::string &name) {
    if (name == "direct") {
        return Scheme::Direct;
    }
    if (name == "teleport") {
        return Scheme::Teleport;
    }
    throw std::invalid_argument("unknown scheme '" + name + "' (expected direct or teleport)");
}

std::mt19937_64 trial_rng(uint64_t seed, size_t trial) {
    uint64_t t = trial;
    std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)t, (uint32_t)(t >> 32)};
    return std::mt19937_64(seq);
}

ErrorLabel sample_error(const ChannelPrior &prior, std::mt19937_64 &rng) {
    int count = 0;
    if (prior.gamma > 0) {
        count = std::poisson_distribution<int>(prior.gamma)(rng);
    }
    int k = count;
    switch (prior.kind) {
        case PriorKind::LossOnly:
            k = -count;
            break;
        case PriorKind::GainOnly:
            break;
        case PriorKind::Symmetric:
        case PriorKind::PhaseCodeAny:
            if (std::bernoulli_distribution(0.5)(rng)) {
                k = -count;
            }
            break;
    }
    double theta = 0;
    if (prior.sigma > 0) {
        theta = std::normal_distribution<double>(0, prior.sigma)(rng);
    }
    return ErrorLabel(k, theta);
}

MonteCarloResult monte_carlo(const RotationCode &code, const ChannelPrior &prior, Scheme scheme, size_t trials,
                             uint64_t seed, size_t threads, const TeleportOptions &teleport) {
    prior.validate();
    code.validate();
    MonteCarloResult out;
    out.records.resize(trials);
    parallel_for(trials, threads, [&](size_t t) {
        std::mt19937_64 rng = trial_rng(seed, t);
        ErrorLabel e = sample_error(prior, rng);
        TrialRecord r;
        r.trial = t;
        r.k = e.k();
        r.theta = e.theta();
        try {
            if (scheme == Scheme::Direct) {
                QecResult q = run_direct(code, e, prior.kind);
                r.arg_lambda_Z = std::arg(q.syndrome.lambda_Z);
                r.arg_lambda_X = std::arg(q.syndrome.lambda_X);
                r.m_est = q.plan.m_est;
                r.theta_est = q.plan.theta_est;
                r.fidelity = q.fidelity;
                r.information_destroyed = q.information_destroyed;
            } else {
                TeleportResult q = run_teleport(code, e, prior.kind, LogicalState::default_input(), teleport, &rng);
                r.arg_lambda_Z = std::arg(q.syndrome.lambda_Z);
                r.arg_lambda_X = std::arg(q.syndrome.lambda_X);
                r.m_est = q.plan.m_est;
                r.theta_est = q.plan.theta_est;
                r.fidelity = q.fidelity;
                r.information_destroyed = q.information_destroyed;
            }
        } catch (const DimensionError &) {
            // The sampled shift leaves the truncated space: counted as lost.
            r.fidelity = 0;
            r.information_destroyed = true;
        }
        out.records[t] = r;
    });
    out.summary = summarize(out.records);
    return out;
}

MonteCarloSummary summarize(const std::vector<TrialRecord> &records) {
    MonteCarloSummary s;
    s.trials = records.size();
    if (records.empty()) {
        return s;
    }
    std::vector<double> f;
    size_t bad = 0;
    for (const auto &r : records) {
        f.push_back(r.fidelity);
        bad += r.fidelity < s.logical_threshold;
        s.information_destroyed += r.information_destroyed;
    }
    std::sort(f.begin(), f.end());
    double sum = 0;
    for (double v : f) {
        sum += v;
    }
    size_t n = f.size();
    s.mean_fidelity = sum / (double)n;
    s.median_fidelity = n % 2 ? f[n / 2] : (f[n / 2 - 1] + f[n / 2]) / 2;
    size_t rank = (size_t)std::ceil(0.05 * (double)n);
    s.q05_fidelity = f[rank ? rank - 1 : 0];
    s.min_fidelity = f.front();
    s.logical_error_rate = (double)bad / (double)n;
    return s;
}

CsvTable trials_table(const std::vector<TrialRecord> &records) {
    CsvTable t;
    t.schema = "trials";
    t.columns = {"trial", "k", "theta", "arg_lambda_Z", "arg_lambda_X", "m_est", "theta_est", "fidelity",
                 "information_destroyed"};
    for (const auto &r : records) {
        t.add_row({std::to_string(r.trial), std::to_string(r.k), format_double(r.theta),
                   format_double(r.arg_lambda_Z), format_double(r.arg_lambda_X), std::to_string(r.m_est),
                   format_double(r.theta_est), format_double(r.fidelity), r.information_destroyed ? "1" : "0"});
    }
    return t;
}

}  // namespace rotorqec
