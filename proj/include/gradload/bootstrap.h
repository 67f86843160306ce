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

#ifndef GRADLOAD_BOOTSTRAP_H
#define GRADLOAD_BOOTSTRAP_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gradload/amplitudes.h"
#include "gradload/oracles.h"
#include "gradload/statesim.h"

namespace gradload {

enum class ProfileSource { kExact, kSampled };

/// Column statistics of a bit table. raw_frequencies[j] is the fraction of
/// rows with bit j set; weighted[j] = 2^(-(j+1)/2) N raw_frequencies[j].
struct BitWeightProfile {
    int g = 0;
    std::size_t n_elements = 0;
    std::vector<double> raw_frequencies;
    std::vector<double> weighted;
    ProfileSource source = ProfileSource::kExact;
    std::uint64_t shots = 0;

    double norm() const;
};

BitWeightProfile average_bit_weights(const QuantizedAmplitudes &q);

/// Builds a profile from raw one-frequencies. Sampled profiles floor each
/// frequency at 2^-g before weighting.
BitWeightProfile profile_from_frequencies(std::vector<double> raw, std::size_t n_elements, ProfileSource source,
                                          std::uint64_t shots = 0);

enum class SamplingMode {
    /// i.i.d. uniform indices.
    kWithReplacement,
    /// Successive shuffled passes over all indices.
    kWithoutReplacement,
};

/// Queries the digit oracle on `shots` random basis indices and records each
/// output bit. Throws ValidationError for shots = 0.
BitWeightProfile estimate_bit_weights(const OracleModel &o, std::uint64_t shots, std::uint64_t seed,
                                      SamplingMode mode = SamplingMode::kWithReplacement);

/// Normalized address amplitudes of the bootstrapped start state.
std::vector<double> address_weights(const BitWeightProfile &profile);

/// Address state phi that turns the amplified target back into |A>: proportional
/// to 2^-(j+1) / beta_j on the support of the start weights beta.
std::vector<double> compensating_address_state(const std::vector<double> &beta);

struct OptimizedInitial {
    StateVector state;
    StatePrep prep;
};

/// Uniform index superposition (x) profile direction, layout [N, g]. Throws
/// ZeroVectorError on an all-zero profile.
OptimizedInitial optimized_initial_state(const BitWeightProfile &profile, std::size_t n_elements);

struct Lambda1Prime {
    double value = 0;
    /// The profile does not match the table's exact profile.
    bool profile_mismatch = false;
};

/// |<omega|s'>|^2 = (sum_j beta_j Abar_j)^2 / (N ||A||_1) for the normalized
/// profile direction beta; for the exact profile this is ||Abar||^2 / (N ||A||_1).
Lambda1Prime lambda1_prime(const QuantizedAmplitudes &q, const BitWeightProfile &profile);

struct PrimeBound {
    double bound = 0;
    double precondition = 0;
    int Lp_core = 0;
};

/// ln(2/d1) ln(2/d2) (1 + 2^(1-g) ||alpha||_1) sqrt(N) ||alpha||_1 / ||Abar||_2
/// with Abar from the exact profile of q, plus the core count for `profile`.
/// Throws BoundInvalidError when 2^(1-g) ||alpha||_1 >= 1/2.
PrimeBound runtime_bound_prime(const QuantizedAmplitudes &q, const AmplitudeVector &alpha, double delta1,
                               double delta2, const BitWeightProfile &profile);

/// ||A|| ||B|| / <A, B> over the weighted vectors. Throws NoOverlapError when the
/// profiles are orthogonal.
double bootstrap_slowdown_ratio(const BitWeightProfile &exact, const BitWeightProfile &approx);

}  // namespace gradload

#endif
