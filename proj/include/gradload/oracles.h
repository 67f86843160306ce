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

#ifndef GRADLOAD_ORACLES_H
#define GRADLOAD_ORACLES_H

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>

#include "gradload/amplitudes.h"
#include "gradload/statesim.h"

namespace gradload {

enum class OracleKind { kPhaseBit, kDigit };

/// An oracle materialized from a bit table, with its own query counter.
class OracleModel {
   public:
    OracleModel(OracleKind kind, std::shared_ptr<const QuantizedAmplitudes> bits);
    OracleModel(OracleKind kind, const QuantizedAmplitudes &bits);
    OracleModel(const OracleModel &other);
    OracleModel &operator=(const OracleModel &other);

    OracleKind kind() const { return kind_; }
    const QuantizedAmplitudes &bits() const { return *bits_; }
    std::uint64_t query_count() const { return count_.load(); }
    void reset_count() { count_.store(0); }
    /// Counter bump shared by every application path.
    void record_query() const { count_.fetch_add(1); }

   private:
    OracleKind kind_;
    std::shared_ptr<const QuantizedAmplitudes> bits_;
    mutable std::atomic<std::uint64_t> count_{0};
};

/// Multiplies the amplitude at (i, j) by e^(i phase) when A_ij = 1. The default
/// phase pi is the sign flip U_omega. State layout must be [N, g].
StateVector apply_phase_oracle(const StateVector &state, const OracleModel &o,
                               double phase = std::numbers::pi);

/// XORs the g-bit code of A_i into the data register. State layout must be
/// [N, 2^g, g] or [N, 2^g]. The code's most significant bit is A_i0.
StateVector apply_digit_oracle(const StateVector &state, const OracleModel &o);

/// One digit-oracle query on the basis state |i>|0>, returning the code A_i 2^g.
std::uint64_t query_digit(const OracleModel &o, std::size_t index);

/// Reversible a >= b test. Wires: a (value, low bit first), b, a scratch copy
/// of a, a carry qubit, and the flag. 2g Toffolis, g+1 ancillas.
Circuit build_comparator_circuit(int g);
bool comparator(std::uint64_t a, std::uint64_t b, int g);

/// Appends the forward (or reversed) half of the address-controlled routing
/// network. For address value x the forward half moves data[x] to data[0].
/// With `optimize`, swaps that only ever exchange cleared positions are left out.
void append_routing_half(Circuit &c, std::span<const std::size_t> address,
                         std::span<const std::size_t> data, bool optimize, bool reverse);

/// Wires a0..a(q-1), d0..d(2^q - 1). Applies Z to d_x for address x and
/// restores every position.
Circuit build_permutation_network(int q, bool optimize = true);

struct EmulationCost {
    std::size_t toffoli = 0;
    std::size_t ancillas = 0;
};

/// U_omega realized from a digit oracle: U_amp, routing network, Z, inverse
/// network, U_amp. Acts on [N, g] states.
class PhaseOracleEmulator {
   public:
    explicit PhaseOracleEmulator(OracleModel &digit);
    StateVector operator()(const StateVector &state);
    /// Emulated U_omega applications (one round query each).
    std::uint64_t emulated_queries() const { return emulated_; }
    const Circuit &network() const { return network_; }
    EmulationCost cost() const;
    std::size_t total_wires() const { return network_.num_wires(); }

   private:
    void apply_amp(std::vector<cplx> &amps) const;

    OracleModel *digit_;
    int g_;
    int q_;
    std::size_t m_;
    std::size_t index_qubits_;
    Circuit network_;
    std::uint64_t emulated_ = 0;
};

PhaseOracleEmulator phase_oracle_from_digit(OracleModel &o);

}  // namespace gradload

#endif
