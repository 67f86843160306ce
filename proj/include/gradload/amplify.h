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

#ifndef GRADLOAD_AMPLIFY_H
#define GRADLOAD_AMPLIFY_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gradload/amplitudes.h"
#include "gradload/statesim.h"

namespace gradload {

struct BitWeightProfile;

/// Fixed-point amplification plan. `rounds` is the odd sequence length L of the
/// phase schedule; it spends (L-1)/2 marker calls and L preparation calls.
struct StagePlan {
    double lambda = 1;
    double delta = 0.5;
    int rounds = 1;

    int marker_calls() const { return (rounds - 1) / 2; }
};

/// Smallest odd integer >= x (at least 1).
int odd_ceil(double x);

/// L = ceil(ln(2/delta)/sqrt(lambda)) rounded up to odd. Throws NoOverlapError
/// for lambda <= 0 and ValidationError for lambda > 1 or delta outside (0, 1).
StagePlan make_plan(double lambda, double delta);

struct PhasePair {
    double alpha = 0;  // phase of the reflection about the start state
    double beta = 0;   // phase of the marker
};

/// Chebyshev phase schedule for the plan (marker_calls() pairs).
std::vector<PhasePair> fixed_point_phases(const StagePlan &plan);

/// Success probability the schedule reaches for a start overlap `lambda`:
/// 1 - delta^2 T_L(T_{1/L}(1/delta) sqrt(1 - lambda))^2.
double fixed_point_success(const StagePlan &plan, double lambda);

/// Applies e^(i phase) on the marked subspace and identity elsewhere.
using PhaseMarker = std::function<StateVector(const StateVector &, double)>;

struct AmplifyStats {
    std::uint64_t marker_calls = 0;
    std::uint64_t prep_calls = 0;
};

/// Runs the phase schedule from `initial`, reflecting about `initial` directly.
StateVector fixed_point_amplify(const StateVector &initial, const PhaseMarker &marker, const StagePlan &plan,
                                AmplifyStats *stats = nullptr);

/// Dense matrix of prep (2|0><0| - 1) prep^dagger on the layout `dims`.
Matrix diffusion_reflection(const LinearOp &prep, const LinearOp &prep_adjoint,
                            const std::vector<std::size_t> &dims);

/// x -> 2 <s|x> s - x.
StateVector reflect_about(const StateVector &s, const StateVector &x);

/// Uniform index superposition (x) binary gradient, layout [N, g].
StateVector initial_state(const QuantizedAmplitudes &q);

/// (1/sqrt ||A||_1) sum_ij 2^(-(j+1)/2) A_ij |i>|j>. Throws ZeroVectorError
/// on an all-zero table.
StateVector intermediate_target(const QuantizedAmplitudes &q);

/// |A> = sum_i A_i |i> / ||A||_2 on a single register of size N.
StateVector final_target(const QuantizedAmplitudes &q);

struct StageOverlaps {
    double lambda1 = 0;
    double lambda2 = 0;
};

/// Closed forms lambda1 = kappa ||A||_1 / N and lambda2 = kappa sum A_i^2 / ||A||_1
/// with kappa = 2^g / (2^g - 1).
StageOverlaps stage_overlaps(const QuantizedAmplitudes &q);

/// Nested round counts with the logarithmic factors dropped, ceil(1/sqrt(x)).
int core_rounds(double lambda_product);

/// 2^((1-g)/2) sqrt(||alpha||_1), clipped to (0, 0.5].
double default_delta1(int g, const AmplitudeVector &alpha);
inline constexpr double kDefaultDelta2 = 0.1;

struct RuntimeBounds {
    /// 2^-g N / ||alpha||_1; the bounds need it below 1/2.
    double precondition = 0;
    double L_bound = 0;
    double L_bound_resolved = 0;
};

/// ln(2/d1) ln(2/d2) (sqrt N + 1/2) and ln(2/d2) (1 + g - log2 ||alpha||_1)/2 (sqrt N + 1/2).
/// Throws BoundInvalidError when the precondition fails.
RuntimeBounds runtime_bounds(const QuantizedAmplitudes &q, const AmplitudeVector &alpha, double delta1,
                             double delta2);

enum class StageTwoMode { kAmplify, kPostselect };

struct LoadOptions {
    /// 0 selects default_delta1.
    double delta1 = 0;
    double delta2 = kDefaultDelta2;
    bool bootstrap = false;
    StageTwoMode mode = StageTwoMode::kAmplify;
    std::uint64_t seed = 0;
    /// Bootstrap profile; the exact column profile when absent.
    const BitWeightProfile *profile = nullptr;
    /// Target amplitudes for delta1 and the bounds; taken from the table when absent.
    std::optional<AmplitudeVector> alpha;
    /// Apply every stage-1 invocation gate by gate instead of reflecting about
    /// the stage-1 output directly. Same result, far slower.
    bool explicit_nesting = false;
};

struct QueryCounts {
    /// Phase-oracle applications, stage-1 invocations times stage-1 marker calls.
    std::uint64_t phase_oracle = 0;
    /// Start-state preparations (and inverses).
    std::uint64_t prep_calls = 0;
    /// Runs of the stage-1 unitary or its inverse.
    std::uint64_t stage1_invocations = 0;
};

struct RunReport {
    std::size_t n = 0;
    int g = 0;
    int shift = 0;
    bool bootstrap = false;
    StageTwoMode mode = StageTwoMode::kAmplify;
    std::uint64_t seed = 0;
    double delta1 = 0;
    double delta2 = 0;

    double lambda1 = 0;
    double lambda2 = 0;
    double lambda1_prime = 0;
    int L1 = 0;
    int L2 = 0;
    int L = 0;
    int L1_prime = 0;
    int L_prime = 0;
    int L_core = 0;
    int Lp_core = 0;

    /// Overlaps of the run actually simulated.
    double lambda1_effective = 0;
    double lambda2_effective = 0;
    int stage1_rounds = 0;
    int stage2_rounds = 0;

    double fidelity_stage1 = 0;
    /// Probability of the stage-2 projection succeeding at the end of the run.
    double success_probability = 0;
    /// Postselection outcome drawn from the seeded generator.
    bool postselect_success = true;
    double final_fidelity = 0;
    double alpha_fidelity = 0;
    QueryCounts queries;

    bool bounds_valid = false;
    std::string bounds_warning;
    double L_bound = 0;
    double L_bound_resolved = 0;
    double Lp_bound = 0;
};

struct LoadResult {
    /// Index-register state conditional on stage-2 success, layout [N].
    StateVector state;
    RunReport report;
};

/// Two-stage loading: fixed-point amplification toward the intermediate target,
/// then projection of the address register, by amplification or postselection.
LoadResult load_state(const QuantizedAmplitudes &q, const LoadOptions &options = {});

}  // namespace gradload

#endif
