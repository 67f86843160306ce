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

#include "gradload/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gradload/amplify.h"
#include "gradload/errors.h"

namespace gradload {

double BitWeightProfile::norm() const { return gradload::norms(weighted).l2; }

BitWeightProfile profile_from_frequencies(std::vector<double> raw, std::size_t n_elements, ProfileSource source,
                                          std::uint64_t shots) {
    if (raw.empty()) {
        throw ValidationError("profile needs at least one bit");
    }
    if (n_elements == 0) {
        throw ValidationError("profile needs n_elements > 0");
    }
    BitWeightProfile p;
    p.g = static_cast<int>(raw.size());
    p.n_elements = n_elements;
    p.source = source;
    p.shots = shots;
    const double floor = source == ProfileSource::kSampled ? std::exp2(-p.g) : 0.0;
    for (std::size_t j = 0; j < raw.size(); j++) {
        if (!(raw[j] >= 0 && raw[j] <= 1)) {
            throw ValidationError("raw frequencies must lie in [0, 1]");
        }
        double f = std::max(raw[j], floor);
        p.weighted.push_back(std::exp2(-(j + 1.0) / 2) * static_cast<double>(n_elements) * f);
    }
    p.raw_frequencies = std::move(raw);
    return p;
}

BitWeightProfile average_bit_weights(const QuantizedAmplitudes &q) {
    auto counts = q.column_counts();
    std::vector<double> raw(counts.size());
    for (std::size_t j = 0; j < counts.size(); j++) {
        raw[j] = static_cast<double>(counts[j]) / static_cast<double>(q.n());
    }
    BitWeightProfile p = profile_from_frequencies(std::move(raw), q.n(), ProfileSource::kExact);
    // Integer column counts give the weighted entries without the division round trip.
    for (std::size_t j = 0; j < counts.size(); j++) {
        p.weighted[j] = std::exp2(-(j + 1.0) / 2) * static_cast<double>(counts[j]);
    }
    return p;
}

BitWeightProfile estimate_bit_weights(const OracleModel &o, std::uint64_t shots, std::uint64_t seed,
                                      SamplingMode mode) {
    if (shots == 0) {
        throw ValidationError("shots must be positive");
    }
    const std::size_t n = o.bits().n();
    const int g = o.bits().g();
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> ones(g, 0);
    std::vector<std::size_t> order(n);
    std::size_t pos = n;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < shots; s++) {
        std::size_t i;
        if (mode == SamplingMode::kWithReplacement) {
            i = pick(rng);
        } else {
            if (pos == n) {
                std::iota(order.begin(), order.end(), std::size_t{0});
                std::shuffle(order.begin(), order.end(), rng);
                pos = 0;
            }
            i = order[pos++];
        }
        std::uint64_t code = query_digit(o, i);
        for (int j = 0; j < g; j++) {
            ones[j] += (code >> (g - 1 - j)) & 1;
        }
    }
    std::vector<double> raw(g);
    for (int j = 0; j < g; j++) {
        raw[j] = static_cast<double>(ones[j]) / static_cast<double>(shots);
    }
    return profile_from_frequencies(std::move(raw), n, ProfileSource::kSampled, shots);
}

std::vector<double> address_weights(const BitWeightProfile &profile) {
    double nrm = profile.norm();
    if (!(nrm > 0)) {
        throw ZeroVectorError("all-zero bit weight profile");
    }
    std::vector<double> beta(profile.weighted);
    for (double &b : beta) {
        b /= nrm;
    }
    return beta;
}

std::vector<double> compensating_address_state(const std::vector<double> &beta) {
    std::vector<double> phi(beta.size(), 0.0);
    double sq = 0;
    for (std::size_t j = 0; j < beta.size(); j++) {
        if (beta[j] > 0) {
            phi[j] = std::exp2(-(j + 1.0)) / beta[j];
            sq += phi[j] * phi[j];
        }
    }
    if (!(sq > 0)) {
        throw ZeroVectorError("address weights are all zero");
    }
    double nrm = std::sqrt(sq);
    for (double &p : phi) {
        p /= nrm;
    }
    return phi;
}

OptimizedInitial optimized_initial_state(const BitWeightProfile &profile, std::size_t n_elements) {
    if (n_elements == 0) {
        throw ValidationError("n_elements must be positive");
    }
    auto beta = address_weights(profile);
    const std::size_t g = beta.size();
    const double u = 1 / std::sqrt(static_cast<double>(n_elements));
    std::vector<double> amps(n_elements * g);
    for (std::size_t i = 0; i < n_elements; i++) {
        for (std::size_t j = 0; j < g; j++) {
            amps[i * g + j] = u * beta[j];
        }
    }
    StateVector s = StateVector::from_real({n_elements, g}, amps);
    return OptimizedInitial{s, StatePrep(s)};
}

Lambda1Prime lambda1_prime(const QuantizedAmplitudes &q, const BitWeightProfile &profile) {
    if (profile.g != q.g()) {
        throw DimensionMismatchError("profile precision does not match the table");
    }
    const double l1 = q.norms().l1;
    if (!(l1 > 0)) {
        throw ZeroVectorError("lambda1' of an all-zero table");
    }
    BitWeightProfile exact = average_bit_weights(q);
    auto beta = address_weights(profile);
    double ip = 0;
    for (std::size_t j = 0; j < beta.size(); j++) {
        ip += beta[j] * exact.weighted[j];
    }
    Lambda1Prime out;
    out.value = ip * ip / (static_cast<double>(q.n()) * l1);
    double tol = 1e-9 * std::max(1.0, exact.norm());
    for (std::size_t j = 0; j < beta.size(); j++) {
        if (std::abs(profile.weighted[j] - exact.weighted[j]) > tol) {
            out.profile_mismatch = true;
        }
    }
    return out;
}

PrimeBound runtime_bound_prime(const QuantizedAmplitudes &q, const AmplitudeVector &alpha, double delta1,
                               double delta2, const BitWeightProfile &profile) {
    if (alpha.size() != q.n()) {
        throw DimensionMismatchError("alpha and table differ in length");
    }
    if (!(delta1 > 0 && delta1 < 1 && delta2 > 0 && delta2 < 1)) {
        throw ValidationError("deltas must lie in (0, 1)");
    }
    PrimeBound out;
    StageOverlaps ov = stage_overlaps(q);
    out.Lp_core = core_rounds(lambda1_prime(q, profile).value * ov.lambda2);
    const double l1 = normalize(alpha).norms().l1;
    const double x = std::exp2(1.0 - q.g()) * l1;
    out.precondition = x;
    if (!(x < 0.5)) {
        throw BoundInvalidError("primed runtime bound needs 2^(1-g) ||alpha||_1 < 1/2");
    }
    const double abar = average_bit_weights(q).norm();
    out.bound = std::log(2 / delta1) * std::log(2 / delta2) * (1 + x) *
                std::sqrt(static_cast<double>(q.n())) * l1 / abar;
    return out;
}

double bootstrap_slowdown_ratio(const BitWeightProfile &exact, const BitWeightProfile &approx) {
    if (exact.weighted.size() != approx.weighted.size()) {
        throw DimensionMismatchError("profiles differ in precision");
    }
    double a = exact.norm();
    double b = approx.norm();
    if (!(a > 0) || !(b > 0)) {
        throw ZeroVectorError("slowdown ratio of an all-zero profile");
    }
    double ip = 0;
    for (std::size_t j = 0; j < exact.weighted.size(); j++) {
        ip += exact.weighted[j] * approx.weighted[j];
    }
    if (!(ip > 0)) {
        throw NoOverlapError("profiles are orthogonal; slowdown is unbounded");
    }
    return a * b / ip;
}

}  // namespace gradload
