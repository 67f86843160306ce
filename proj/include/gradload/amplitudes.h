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

#ifndef GRADLOAD_AMPLITUDES_H
#define GRADLOAD_AMPLITUDES_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gradload {

struct NormSummary {
    double l1 = 0;
    double l2 = 0;
};

NormSummary norms(std::span<const double> values);

/// Nonnegative real target amplitudes.
class AmplitudeVector {
   public:
    AmplitudeVector() = default;
    /// Throws ValidationError on an empty vector or on negative / non-finite entries.
    explicit AmplitudeVector(std::vector<double> values);

    const std::vector<double> &values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    NormSummary norms() const { return gradload::norms(values_); }
    double max() const;

   private:
    std::vector<double> values_;
};

/// Rescales to unit l2 norm. Throws ZeroVectorError when every entry is zero.
AmplitudeVector normalize(const AmplitudeVector &v);

/// N x g bit matrix. Bit j of row i carries weight 2^-(j+1), so bit 0 is the
/// most significant one. `shift` is the power-of-two scale t with
/// A_i <= 2^t alpha_i < A_i + 2^-g.
class QuantizedAmplitudes {
   public:
    QuantizedAmplitudes() = default;
    QuantizedAmplitudes(std::size_t n, int g, int shift, std::vector<std::uint8_t> bits,
                        std::vector<double> source = {});

    /// Builds a table from integer codes, where code c stands for c / 2^g.
    static QuantizedAmplitudes from_codes(const std::vector<std::uint64_t> &codes, int g,
                                          int shift = 0);

    std::size_t n() const { return n_; }
    int g() const { return g_; }
    int shift() const { return shift_; }
    bool bit(std::size_t i, int j) const { return bits_[i * g_ + j] != 0; }
    const std::vector<std::uint8_t> &bits() const { return bits_; }

    /// A_i * 2^g as an integer.
    std::uint64_t code(std::size_t i) const;
    /// A_i.
    double value(std::size_t i) const;
    std::vector<double> values() const;
    NormSummary norms() const;
    /// Number of rows with bit j set.
    std::vector<std::size_t> column_counts() const;
    bool all_zero() const;

    /// Normalized amplitudes this table was quantized from (before the shift),
    /// or empty when the table was built directly.
    const std::vector<double> &source() const { return source_; }
    /// The source amplitudes when present, else the normalized A.
    AmplitudeVector alpha() const;

    bool operator==(const QuantizedAmplitudes &other) const {
        return n_ == other.n_ && g_ == other.g_ && shift_ == other.shift_ && bits_ == other.bits_;
    }

   private:
    std::size_t n_ = 0;
    int g_ = 0;
    int shift_ = 0;
    std::vector<std::uint8_t> bits_;
    std::vector<double> source_;
};

inline constexpr int kMaxPrecision = 52;

/// Rounds toward zero to g bits. Values must lie in [0, 1]; 1.0 maps to 1 - 2^-g.
/// With `shift`, every value is first scaled by the largest 2^t (t >= 0) that
/// keeps the maximum below 1.
QuantizedAmplitudes quantize(const AmplitudeVector &v, int g, bool shift);

/// The shift quantize() would pick for a maximum amplitude `max_value`.
int dynamic_range_shift(double max_value);

struct TraceDistance {
    double actual = 0;
    double bound = 0;
};

/// Distance between alpha and the loaded direction A / ||A||_2, together with the
/// bound 2^((1-g)/2) sqrt(||alpha||_1). Requires an unshifted table.
TraceDistance trace_distance_bound(const AmplitudeVector &v, const QuantizedAmplitudes &q);

}  // namespace gradload

#endif
