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

#include "gradload/amplitudes.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gradload/errors.h"

namespace gradload {

NormSummary norms(std::span<const double> values) {
    NormSummary out;
    double sq = 0;
    for (double x : values) {
        out.l1 += std::abs(x);
        sq += x * x;
    }
    out.l2 = std::sqrt(sq);
    return out;
}

AmplitudeVector::AmplitudeVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("amplitude vector is empty");
    }
    for (double x : values_) {
        if (!std::isfinite(x) || x < 0) {
            throw ValidationError("amplitudes must be finite and nonnegative");
        }
    }
}

double AmplitudeVector::max() const {
    return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

AmplitudeVector normalize(const AmplitudeVector &v) {
    double l2 = v.norms().l2;
    if (!(l2 > 0)) {
        throw ZeroVectorError("cannot normalize an all-zero amplitude vector");
    }
    std::vector<double> out(v.values());
    for (double &x : out) {
        x /= l2;
    }
    return AmplitudeVector(std::move(out));
}

QuantizedAmplitudes::QuantizedAmplitudes(std::size_t n, int g, int shift, std::vector<std::uint8_t> bits,
                                         std::vector<double> source)
    : n_(n), g_(g), shift_(shift), bits_(std::move(bits)), source_(std::move(source)) {
    if (g < 1 || g > kMaxPrecision) {
        throw ValidationError("bit precision g must lie in [1, " + std::to_string(kMaxPrecision) + "]");
    }
    if (shift < 0) {
        throw ValidationError("shift must be nonnegative");
    }
    if (bits_.size() != n * static_cast<std::size_t>(g)) {
        throw DimensionMismatchError("bit matrix size does not match n * g");
    }
    if (!source_.empty() && source_.size() != n) {
        throw DimensionMismatchError("source amplitude count does not match n");
    }
    for (auto &b : bits_) {
        b = b ? 1 : 0;
    }
}

QuantizedAmplitudes QuantizedAmplitudes::from_codes(const std::vector<std::uint64_t> &codes, int g,
                                                    int shift) {
    if (g < 1 || g > kMaxPrecision) {
        throw ValidationError("bit precision g out of range");
    }
    std::vector<std::uint8_t> bits(codes.size() * g);
    for (std::size_t i = 0; i < codes.size(); i++) {
        if (codes[i] >> g) {
            throw ValidationError("code does not fit in g bits");
        }
        for (int j = 0; j < g; j++) {
            bits[i * g + j] = (codes[i] >> (g - 1 - j)) & 1;
        }
    }
    return QuantizedAmplitudes(codes.size(), g, shift, std::move(bits));
}

std::uint64_t QuantizedAmplitudes::code(std::size_t i) const {
    std::uint64_t c = 0;
    for (int j = 0; j < g_; j++) {
        c = (c << 1) | bits_[i * g_ + j];
    }
    return c;
}

double QuantizedAmplitudes::value(std::size_t i) const {
    return std::ldexp(static_cast<double>(code(i)), -g_);
}

std::vector<double> QuantizedAmplitudes::values() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        out[i] = value(i);
    }
    return out;
}

NormSummary QuantizedAmplitudes::norms() const {
    auto v = values();
    return gradload::norms(v);
}

std::vector<std::size_t> QuantizedAmplitudes::column_counts() const {
    std::vector<std::size_t> out(g_, 0);
    for (std::size_t i = 0; i < n_; i++) {
        for (int j = 0; j < g_; j++) {
            out[j] += bits_[i * g_ + j];
        }
    }
    return out;
}

bool QuantizedAmplitudes::all_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

AmplitudeVector QuantizedAmplitudes::alpha() const {
    if (!source_.empty()) {
        return normalize(AmplitudeVector(source_));
    }
    return normalize(AmplitudeVector(values()));
}

int dynamic_range_shift(double max_value) {
    if (!(max_value > 0)) {
        throw ZeroVectorError("cannot shift an all-zero amplitude vector");
    }
    int e = 0;
    std::frexp(max_value, &e);
    // max_value = m 2^e with m in [1/2, 1); scaling by 2^-e puts it in [1/2, 1).
    return std::max(0, -e);
}

QuantizedAmplitudes quantize(const AmplitudeVector &v, int g, bool shift) {
    if (g < 1 || g > kMaxPrecision) {
        throw ValidationError("bit precision g must lie in [1, " + std::to_string(kMaxPrecision) + "]");
    }
    if (v.size() == 0) {
        throw ValidationError("amplitude vector is empty");
    }
    int t = shift ? dynamic_range_shift(v.max()) : 0;
    const std::uint64_t top = (std::uint64_t{1} << g) - 1;
    std::vector<std::uint64_t> codes(v.size());
    for (std::size_t i = 0; i < v.size(); i++) {
        double x = v[i];
        if (x > 1.0) {
            throw ValidationError("amplitudes must not exceed 1");
        }
        double scaled = std::floor(std::ldexp(x, t + g));
        codes[i] = scaled >= static_cast<double>(top) ? top : static_cast<std::uint64_t>(scaled);
    }
    QuantizedAmplitudes q = QuantizedAmplitudes::from_codes(codes, g, t);
    return QuantizedAmplitudes(q.n(), g, t, q.bits(), v.values());
}

TraceDistance trace_distance_bound(const AmplitudeVector &v, const QuantizedAmplitudes &q) {
    if (q.shift() != 0) {
        throw ValidationError("trace distance bound needs an unshifted table");
    }
    if (q.n() != v.size()) {
        throw DimensionMismatchError("amplitude vector and table differ in length");
    }
    AmplitudeVector a = normalize(v);
    auto av = q.values();
    double a2 = gradload::norms(av).l2;
    if (!(a2 > 0)) {
        throw ZeroVectorError("quantized table is all zero");
    }
    double ip = 0;
    for (std::size_t i = 0; i < av.size(); i++) {
        ip += a[i] * av[i];
    }
    double f = ip / a2;
    TraceDistance out;
    out.actual = std::sqrt(std::max(0.0, 1.0 - f * f));
    out.bound = std::exp2((1.0 - q.g()) / 2.0) * std::sqrt(a.norms().l1);
    return out;
}

}  // namespace gradload
