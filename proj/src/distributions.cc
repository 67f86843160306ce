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

#include "gradload/distributions.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "gradload/amplify.h"
#include "gradload/bootstrap.h"
#include "gradload/errors.h"

namespace gradload {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames = {{
    {Family::kDelta, "delta"},
    {Family::kUniform, "uniform"},
    {Family::kTriangle, "triangle"},
    {Family::kPowerlaw, "powerlaw"},
    {Family::kNormal, "normal"},
    {Family::kRandom, "random"},
    {Family::kSine, "sine"},
}};

}  // namespace

std::string family_name(Family f) {
    for (const auto &[fam, name] : kNames) {
        if (fam == f) return std::string(name);
    }
    throw ValidationError("unknown family");
}

Family parse_family(std::string_view name) {
    for (const auto &[fam, n] : kNames) {
        if (n == name) return fam;
    }
    throw ValidationError("unknown distribution family: " + std::string(name));
}

bool family_has_param(Family f) { return f == Family::kPowerlaw || f == Family::kNormal; }

void validate(const DistributionSpec &spec) {
    if (spec.n < 2) {
        throw ValidationError("distribution needs N >= 2");
    }
    if (family_has_param(spec.family) && !(spec.param > 0 && std::isfinite(spec.param))) {
        throw ValidationError(family_name(spec.family) + " needs a positive parameter");
    }
}

double harmonic_number(std::size_t n, double k) {
    if (n < 1) {
        throw ValidationError("harmonic number needs N >= 1");
    }
    // Smallest terms first keeps the rounding error down.
    double s = 0;
    for (std::size_t r = n; r >= 1; r--) {
        s += std::pow(static_cast<double>(r), -k);
    }
    return s;
}

AmplitudeVector generate(const DistributionSpec &spec) {
    validate(spec);
    const std::size_t n = spec.n;
    std::vector<double> v(n, 0.0);
    switch (spec.family) {
        case Family::kDelta:
            v[0] = 1;
            break;
        case Family::kUniform:
            std::fill(v.begin(), v.end(), 1.0);
            break;
        case Family::kTriangle:
            for (std::size_t i = 0; i < n; i++) v[i] = static_cast<double>(i);
            break;
        case Family::kPowerlaw: {
            double h = std::sqrt(harmonic_number(n, 2 * spec.param));
            for (std::size_t i = 0; i < n; i++) v[i] = std::pow(static_cast<double>(i + 1), -spec.param) / h;
            break;
        }
        case Family::kNormal: {
            const double c = (static_cast<double>(n) - 1) / 2;
            for (std::size_t i = 0; i < n; i++) {
                double x = static_cast<double>(i) - c;
                v[i] = std::exp(-x * x / (2 * spec.param * spec.param));
            }
            break;
        }
        case Family::kRandom: {
            std::mt19937_64 rng(spec.seed);
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            for (auto &x : v) x = unif(rng);
            break;
        }
        case Family::kSine:
            for (std::size_t i = 0; i < n; i++) {
                v[i] = std::sin(std::numbers::pi * static_cast<double>(i + 1) / static_cast<double>(n + 1));
            }
            break;
    }
    return normalize(AmplitudeVector(std::move(v)));
}

int default_precision(std::size_t n) {
    int bits = 0;
    while ((std::size_t{1} << bits) < n) bits++;
    return std::min(16, bits + 4);
}

std::vector<std::size_t> default_sweep_sizes() {
    std::vector<std::size_t> out;
    for (int e = 6; e <= 14; e++) out.push_back(std::size_t{1} << e);
    return out;
}

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ValidationError("line fit needs at least two matching points");
    }
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        sx += x[k];
        sy += y[k];
    }
    double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (!(sxx > 0)) {
        throw ValidationError("line fit needs distinct x values");
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

ScalingReport scaling_check(const DistributionSpec &spec, int g, const std::vector<std::size_t> &sizes) {
    if (sizes.empty()) {
        throw ValidationError("scaling check needs sizes");
    }
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (static_cast<double>(*hi) < 8.0 * static_cast<double>(*lo)) {
        throw ValidationError("scaling check needs sizes spanning at least three octaves");
    }
    ScalingReport rep;
    std::vector<double> lx, ly, la;
    for (std::size_t n : sizes) {
        DistributionSpec s = spec;
        s.n = n;
        int gg = g > 0 ? g : default_precision(n);
        QuantizedAmplitudes q = quantize(generate(s), gg, true);
        StageOverlaps ov = stage_overlaps(q);
        BitWeightProfile prof = average_bit_weights(q);
        ScalingPoint p;
        p.n = n;
        p.g = gg;
        p.lambda1 = ov.lambda1;
        p.lambda2 = ov.lambda2;
        p.lambda1_prime = lambda1_prime(q, prof).value;
        p.L_real = 1 / std::sqrt(p.lambda1 * p.lambda2);
        p.Lp_real = 1 / std::sqrt(p.lambda1_prime * p.lambda2);
        p.L_core = core_rounds(p.lambda1 * p.lambda2);
        p.Lp_core = core_rounds(p.lambda1_prime * p.lambda2);
        p.abar_norm = prof.norm();
        rep.points.push_back(p);
        lx.push_back(std::log(static_cast<double>(n)));
        ly.push_back(std::log(p.Lp_real));
        la.push_back(std::log(p.abar_norm));
    }
    rep.fit = fit_line(lx, ly);
    rep.abar_fit = fit_line(lx, la);
    return rep;
}

}  // namespace gradload
