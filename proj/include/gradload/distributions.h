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

#ifndef GRADLOAD_DISTRIBUTIONS_H
#define GRADLOAD_DISTRIBUTIONS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gradload/amplitudes.h"

namespace gradload {

enum class Family { kDelta, kUniform, kTriangle, kPowerlaw, kNormal, kRandom, kSine };

std::string family_name(Family f);
/// Throws ValidationError on an unknown name.
Family parse_family(std::string_view name);
/// True for the families that take a numeric parameter (powerlaw k, normal sigma).
bool family_has_param(Family f);

struct DistributionSpec {
    Family family = Family::kUniform;
    std::size_t n = 2;
    /// Exponent k for powerlaw, standard deviation for normal; unused otherwise.
    double param = 0;
    /// Seed for the random family.
    std::uint64_t seed = 0;
};

/// Throws ValidationError when N < 2 or the parameter is not positive.
void validate(const DistributionSpec &spec);

/// Unit-norm amplitudes of the family:
///   delta     (1, 0, ..., 0)
///   uniform   all equal
///   triangle  proportional to i
///   powerlaw  proportional to r^-k, rank r = i + 1
///   normal    proportional to exp(-x^2 / (2 sigma^2)), x = i - (N-1)/2
///   random    i.i.d. uniform on [0, 1), seeded
///   sine      proportional to sin(pi (i+1) / (N+1))
AmplitudeVector generate(const DistributionSpec &spec);

/// sum_{r=1}^{N} r^-k by direct summation.
double harmonic_number(std::size_t n, double k);

/// min(16, ceil(log2 N) + 4).
int default_precision(std::size_t n);

/// Powers of two 2^6 .. 2^14.
std::vector<std::size_t> default_sweep_sizes();

struct LineFit {
    double slope = 0;
    double intercept = 0;
};

/// Least squares fit of y against x.
LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y);

struct ScalingPoint {
    std::size_t n = 0;
    int g = 0;
    double lambda1 = 0;
    double lambda2 = 0;
    double lambda1_prime = 0;
    /// 1/sqrt(lambda1 lambda2) and 1/sqrt(lambda1' lambda2) before rounding.
    double L_real = 0;
    double Lp_real = 0;
    int L_core = 0;
    int Lp_core = 0;
    double abar_norm = 0;
};

struct ScalingReport {
    std::vector<ScalingPoint> points;
    /// Fit of log L' (unrounded) against log N.
    LineFit fit;
    /// Fit of log ||Abar||_2 against log N.
    LineFit abar_fit;
};

/// Core round counts across `sizes` with the dynamic-range shift on. `g` = 0
/// picks default_precision per size. Throws ValidationError when the sizes span
/// fewer than three octaves.
ScalingReport scaling_check(const DistributionSpec &spec, int g, const std::vector<std::size_t> &sizes);

}  // namespace gradload

#endif
