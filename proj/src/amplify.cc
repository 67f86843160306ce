// Copyright 2026 The gradload Authors
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

#include "gradload/amplify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gradload/bootstrap.h"
#include "gradload/errors.h"
#include "gradload/gradient.h"
#include "gradload/oracles.h"

namespace gradload {

namespace {

double chebyshev(int order, double x) {
    if (std::abs(x) <= 1) {
        return std::cos(order * std::acos(x));
    }
    double t = std::cosh(order * std::acosh(std::abs(x)));
    return (x < 0 && order % 2) ? -t : t;
}

double kappa(int g) { return 1.0 / -std::expm1(-g * std::log(2.0)); }

void check_layout(const StateVector &a, const StateVector &b) {
    if (a.dims() != b.dims()) {
        throw DimensionMismatchError("states have different register layouts");
    }
}

// x - (1 - e^(i phase)) <s|x> s
StateVector phase_about(const StateVector &s, const StateVector &x, double phase) {
    check_layout(s, x);
    cplx c = (1.0 - std::polar(1.0, phase)) * overlap(s, x);
    std::vector<cplx> out(x.amplitudes());
    for (std::size_t k = 0; k < out.size(); k++) {
        out[k] -= c * s[k];
    }
    return StateVector(x.dims(), std::move(out));
}

StateVector negate(StateVector x) {
    for (auto &a : x.mutable_amplitudes()) {
        a = -a;
    }
    return x;
}

}  // namespace

int odd_ceil(double x) {
    if (!std::isfinite(x) || x > 1e9) {
        throw OutOfRangeError("round count is not representable");
    }
    int n = static_cast<int>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
    n = std::max(n, 1);
    return n % 2 ? n : n + 1;
}

StagePlan make_plan(double lambda, double delta) {
    if (!(lambda > 0)) {
        throw NoOverlapError("start state has no overlap with the target");
    }
    if (lambda > 1 + 1e-12) {
        throw ValidationError("overlap lambda must not exceed 1");
    }
    if (!(delta > 0 && delta < 1)) {
        throw ValidationError("delta must lie in (0, 1)");
    }
    lambda = std::min(lambda, 1.0);
    StagePlan p;
    p.lambda = lambda;
    p.delta = delta;
    p.rounds = odd_ceil(std::log(2 / delta) / std::sqrt(lambda));
    return p;
}

std::vector<PhasePair> fixed_point_phases(const StagePlan &plan) {
    const int L = plan.rounds;
    const int l = plan.marker_calls();
    const double inv_gamma = std::cosh(std::acosh(1 / plan.delta) / L);
    const double gamma = 1 / inv_gamma;
    const double s = std::sqrt(std::max(0.0, 1 - gamma * gamma));
    std::vector<double> alpha(l);
    for (int j = 1; j <= l; j++) {
        alpha[j - 1] = 2 * std::atan2(1.0, std::tan(2 * std::numbers::pi * j / L) * s);
    }
    std::vector<PhasePair> out(l);
    for (int j = 0; j < l; j++) {
        out[j].alpha = alpha[j];
        out[j].beta = -alpha[l - 1 - j];
    }
    return out;
}

double fixed_point_success(const StagePlan &plan, double lambda) {
    const int L = plan.rounds;
    double inv_gamma = std::cosh(std::acosh(1 / plan.delta) / L);
    double t = chebyshev(L, inv_gamma * std::sqrt(std::max(0.0, 1 - lambda)));
    return 1 - plan.delta * plan.delta * t * t;
}

StateVector fixed_point_amplify(const StateVector &initial, const PhaseMarker &marker, const StagePlan &plan,
                                AmplifyStats *stats) {
    if (!(plan.lambda > 0)) {
        throw NoOverlapError("start state has no overlap with the target");
    }
    StateVector s = normalized(initial);
    StateVector psi = s;
    AmplifyStats local;
    local.prep_calls = 1;
    for (const auto &ph : fixed_point_phases(plan)) {
        psi = marker(psi, ph.beta);
        local.marker_calls++;
        psi = phase_about(s, psi, -ph.alpha);
        local.prep_calls += 2;
        psi = negate(std::move(psi));
    }
    if (stats) {
        stats->marker_calls += local.marker_calls;
        stats->prep_calls += local.prep_calls;
    }
    return psi;
}

Matrix diffusion_reflection(const LinearOp &prep, const LinearOp &prep_adjoint, const std::vector<std::size_t> &dims) {
    LinearOp op = [&](const StateVector &x) {
        StateVector y = prep_adjoint(x);
        auto &a = y.mutable_amplitudes();
        for (std::size_t k = 1; k < a.size(); k++) {
            a[k] = -a[k];
        }
        return prep(y);
    };
    return to_matrix(op, dims);
}

StateVector reflect_about(const StateVector &s, const StateVector &x) {
    return negate(phase_about(s, x, std::numbers::pi));
}

StateVector initial_state(const QuantizedAmplitudes &q) {
    std::vector<double> u(q.n(), 1 / std::sqrt(static_cast<double>(q.n())));
    return tensor(StateVector::from_real({q.n()}, u), gradient_state(q.g()));
}

StateVector intermediate_target(const QuantizedAmplitudes &q) {
    const double l1 = q.norms().l1;
    if (!(l1 > 0)) {
        throw ZeroVectorError("intermediate target of an all-zero table");
    }
    const std::size_t g = static_cast<std::size_t>(q.g());
    std::vector<double> w(g);
    for (std::size_t j = 0; j < g; j++) {
        w[j] = std::exp2(-(j + 1.0) / 2) / std::sqrt(l1);
    }
    std::vector<double> amps(q.n() * g);
    for (std::size_t i = 0; i < q.n(); i++) {
        for (std::size_t j = 0; j < g; j++) {
            amps[i * g + j] = q.bit(i, static_cast<int>(j)) ? w[j] : 0.0;
        }
    }
    return StateVector::from_real({q.n(), g}, amps);
}

StateVector final_target(const QuantizedAmplitudes &q) {
    return normalized(StateVector::from_real({q.n()}, q.values()));
}

StageOverlaps stage_overlaps(const QuantizedAmplitudes &q) {
    auto v = q.values();
    NormSummary nrm = norms(v);
    if (!(nrm.l1 > 0)) {
        throw ZeroVectorError("overlaps of an all-zero table");
    }
    double k = kappa(q.g());
    return StageOverlaps{k * nrm.l1 / static_cast<double>(q.n()), k * nrm.l2 * nrm.l2 / nrm.l1};
}

int core_rounds(double lambda_product) {
    if (!(lambda_product > 0)) {
        throw NoOverlapError("zero overlap product");
    }
    double x = 1 / std::sqrt(lambda_product);
    return std::max(1, static_cast<int>(std::ceil(x - 1e-9 * x)));
}

double default_delta1(int g, const AmplitudeVector &alpha) {
    double d = std::exp2((1.0 - g) / 2) * std::sqrt(normalize(alpha).norms().l1);
    return std::clamp(d, 1e-300, 0.5);
}

RuntimeBounds runtime_bounds(const QuantizedAmplitudes &q, const AmplitudeVector &alpha, double delta1,
                             double delta2) {
    if (alpha.size() != q.n()) {
        throw DimensionMismatchError("alpha and table differ in length");
    }
    if (!(delta1 > 0 && delta1 < 1 && delta2 > 0 && delta2 < 1)) {
        throw ValidationError("deltas must lie in (0, 1)");
    }
    const double l1 = normalize(alpha).norms().l1;
    const double n = static_cast<double>(q.n());
    RuntimeBounds b;
    b.precondition = std::exp2(-q.g()) * n / l1;
    if (!(b.precondition < 0.5)) {
        throw BoundInvalidError("runtime bound needs 2^-g N / ||alpha||_1 < 1/2 (got " +
                                std::to_string(b.precondition) + ")");
    }
    const double root = std::sqrt(n) + 0.5;
    b.L_bound = std::log(2 / delta1) * std::log(2 / delta2) * root;
    b.L_bound_resolved = std::log(2 / delta2) * 0.5 * (1 + q.g() - std::log2(l1)) * root;
    return b;
}

namespace {

// Applies I - (1 - e^(i phase)) (1 (x) |phi><phi|) on an [N, g] state.
StateVector address_phase(const StateVector &x, const std::vector<double> &phi, double phase) {
    const std::size_t g = phi.size();
    const std::size_t n = x.size() / g;
    const cplx f = 1.0 - std::polar(1.0, phase);
    std::vector<cplx> out(x.amplitudes());
    for (std::size_t i = 0; i < n; i++) {
        cplx c = 0;
        for (std::size_t j = 0; j < g; j++) {
            c += phi[j] * out[i * g + j];
        }
        c *= f;
        for (std::size_t j = 0; j < g; j++) {
            out[i * g + j] -= c * phi[j];
        }
    }
    return StateVector(x.dims(), std::move(out));
}

// (1 (x) <phi|) x as an [N] vector.
StateVector address_contract(const StateVector &x, const std::vector<double> &phi) {
    const std::size_t g = phi.size();
    const std::size_t n = x.size() / g;
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < g; j++) {
            out[i] += phi[j] * x[i * g + j];
        }
    }
    return StateVector({n}, std::move(out));
}

double squared_norm(const StateVector &x) {
    double n = x.norm();
    return n * n;
}

// Stage-1 unitary applied to an arbitrary vector, one gate-level step at a time.
class StageOne {
   public:
    StageOne(const StatePrep &prep, const OracleModel &oracle, const StagePlan &plan)
        : prep_(prep), oracle_(oracle), phases_(fixed_point_phases(plan)) {}

    StateVector forward(StateVector x, QueryCounts &counts) const {
        x = prep_.apply(x);
        counts.prep_calls++;
        for (const auto &ph : phases_) {
            x = apply_phase_oracle(x, oracle_, ph.beta);
            x = reflect_zero(x, -ph.alpha, counts);
            x = negate(std::move(x));
        }
        counts.stage1_invocations++;
        return x;
    }

    StateVector backward(StateVector x, QueryCounts &counts) const {
        for (auto it = phases_.rbegin(); it != phases_.rend(); ++it) {
            x = negate(std::move(x));
            x = reflect_zero(x, it->alpha, counts);
            x = apply_phase_oracle(x, oracle_, -it->beta);
        }
        x = prep_.apply_adjoint(x);
        counts.prep_calls++;
        counts.stage1_invocations++;
        return x;
    }

   private:
    // prep (1 - (1 - e^(i phase)) |0><0|) prep^dagger
    StateVector reflect_zero(const StateVector &x, double phase, QueryCounts &counts) const {
        StateVector y = prep_.apply_adjoint(x);
        y.mutable_amplitudes()[0] *= std::polar(1.0, phase);
        counts.prep_calls += 2;
        return prep_.apply(y);
    }

    const StatePrep &prep_;
    const OracleModel &oracle_;
    std::vector<PhasePair> phases_;
};

}  // namespace

LoadResult load_state(const QuantizedAmplitudes &q, const LoadOptions &options) {
    if (q.all_zero()) {
        throw ZeroVectorError("cannot load an all-zero table");
    }
    const std::size_t n = q.n();
    const std::size_t g = static_cast<std::size_t>(q.g());
    const AmplitudeVector alpha = options.alpha ? normalize(*options.alpha) : q.alpha();
    if (alpha.size() != n) {
        throw DimensionMismatchError("alpha and table differ in length");
    }

    RunReport r;
    r.n = n;
    r.g = q.g();
    r.shift = q.shift();
    r.bootstrap = options.bootstrap;
    r.mode = options.mode;
    r.seed = options.seed;
    r.delta1 = options.delta1 > 0 ? options.delta1 : default_delta1(q.g(), alpha);
    r.delta2 = options.delta2;
    if (!(r.delta1 < 1) || !(r.delta2 > 0 && r.delta2 < 1)) {
        throw ValidationError("deltas must lie in (0, 1)");
    }

    // Closed-form quantities.
    StageOverlaps ov = stage_overlaps(q);
    BitWeightProfile exact = average_bit_weights(q);
    r.lambda1 = ov.lambda1;
    r.lambda2 = ov.lambda2;
    r.lambda1_prime = lambda1_prime(q, exact).value;
    r.L1 = make_plan(r.lambda1, r.delta1).rounds;
    r.L2 = make_plan(r.lambda2, r.delta2).rounds;
    r.L = r.L1 * r.L2;
    r.L1_prime = make_plan(r.lambda1_prime, r.delta1).rounds;
    r.L_prime = r.L1_prime * r.L2;
    r.L_core = core_rounds(r.lambda1 * r.lambda2);
    r.Lp_core = core_rounds(r.lambda1_prime * r.lambda2);

    try {
        RuntimeBounds b = runtime_bounds(q, alpha, r.delta1, r.delta2);
        PrimeBound pb = runtime_bound_prime(q, alpha, r.delta1, r.delta2, exact);
        r.L_bound = b.L_bound;
        r.L_bound_resolved = b.L_bound_resolved;
        r.Lp_bound = pb.bound;
        r.bounds_valid = true;
    } catch (const BoundInvalidError &e) {
        r.bounds_valid = false;
        r.bounds_warning = e.what();
    }

    // Start state and its address weights.
    std::vector<double> beta;
    if (options.bootstrap) {
        beta = address_weights(options.profile ? *options.profile : exact);
        if (beta.size() != g) {
            throw DimensionMismatchError("profile precision does not match the table");
        }
    } else {
        auto grad = gradient_state(q.g());
        for (std::size_t j = 0; j < g; j++) beta.push_back(grad[j].real());
    }
    std::vector<double> s_amps(n * g);
    const double u = 1 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < g; j++) s_amps[i * g + j] = u * beta[j];
    }
    const StateVector s = StateVector::from_real({n, g}, s_amps);
    // Columns a sampled profile never saw keep their floored start weight but
    // get no projector weight; compensating a floor value would blow up.
    std::vector<double> beta_seen = beta;
    if (options.bootstrap && options.profile) {
        for (std::size_t j = 0; j < g; j++) {
            if (!(options.profile->raw_frequencies[j] > 0)) beta_seen[j] = 0;
        }
    }
    const std::vector<double> phi = compensating_address_state(beta_seen);

    // Stage-1 target: the marked part of s.
    OracleModel oracle(OracleKind::kPhaseBit, q);
    std::vector<cplx> marked(s.size());
    for (std::size_t k = 0; k < s.size(); k++) {
        if (q.bits()[k]) marked[k] = s[k];
    }
    StateVector t1_raw({n, g}, marked);
    r.lambda1_effective = squared_norm(t1_raw);
    if (!(r.lambda1_effective > 0)) {
        throw NoOverlapError("start state misses every marked entry");
    }
    const StateVector t1 = normalized(t1_raw);
    r.lambda2_effective = squared_norm(address_contract(t1, phi));

    const StagePlan plan1 = make_plan(r.lambda1_effective, r.delta1);
    r.stage1_rounds = plan1.rounds;
    PhaseMarker marker = [&](const StateVector &x, double phase) { return apply_phase_oracle(x, oracle, phase); };

    StatePrep prep(s);
    StageOne stage_one(prep, oracle, plan1);
    QueryCounts counts;
    StateVector psi1 = stage_one.forward(StateVector({n, g}), counts);
    r.fidelity_stage1 = fidelity(t1, psi1);
    const double p1 = squared_norm(address_contract(psi1, phi));

    StateVector out_state;
    if (options.mode == StageTwoMode::kPostselect) {
        r.stage2_rounds = 0;
        r.success_probability = p1;
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        r.postselect_success = unif(rng) < p1;
        out_state = address_contract(psi1, phi);
    } else {
        // The stage-2 guarantee needs a lower bound on the true start overlap.
        const StagePlan plan2 = make_plan(std::min(r.lambda2_effective, p1), r.delta2);
        r.stage2_rounds = plan2.rounds;
        PhaseMarker pi_marker = [&](const StateVector &x, double phase) { return address_phase(x, phi, phase); };
        StateVector psi2;
        if (options.explicit_nesting) {
            psi2 = psi1;
            for (const auto &ph : fixed_point_phases(plan2)) {
                psi2 = pi_marker(psi2, ph.beta);
                StateVector y = stage_one.backward(psi2, counts);
                y.mutable_amplitudes()[0] *= std::polar(1.0, -ph.alpha);
                psi2 = negate(stage_one.forward(y, counts));
            }
        } else {
            psi2 = fixed_point_amplify(psi1, pi_marker, plan2);
            const std::uint64_t extra = 2 * static_cast<std::uint64_t>(plan2.marker_calls());
            counts.stage1_invocations += extra;
            counts.prep_calls += extra * static_cast<std::uint64_t>(plan1.rounds);
        }
        out_state = address_contract(psi2, phi);
        r.success_probability = squared_norm(out_state);
        r.postselect_success = true;
    }
    counts.phase_oracle = counts.stage1_invocations * static_cast<std::uint64_t>(plan1.marker_calls());
    if (options.explicit_nesting && options.mode == StageTwoMode::kAmplify) {
        counts.phase_oracle = oracle.query_count();
    }
    r.queries = counts;

    StateVector conditional = normalized(out_state);
    r.final_fidelity = fidelity(final_target(q), conditional);
    r.alpha_fidelity = fidelity(StateVector::from_real({n}, alpha.values()), conditional);
    return LoadResult{conditional, r};
}

}  // namespace gradload
