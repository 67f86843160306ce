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

#ifndef GRADLOAD_RESOURCES_H
#define GRADLOAD_RESOURCES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradload/statesim.h"

namespace gradload {

enum class Variant { kSandersV1, kSandersV2, kOursV1, kOursV2 };

std::string variant_name(Variant v);
Variant parse_variant(std::string_view name);
std::vector<Variant> all_variants();

struct ResourceTally {
    std::optional<Variant> variant;
    std::uint64_t toffoli = 0;
    /// sqrt-SWAP and sqrt-CNOT gates together.
    std::uint64_t sqrt_swap = 0;
    /// T and T-dagger gates, with each sqrt gate counted as three.
    std::uint64_t t_gates = 0;
    std::uint64_t ancillas = 0;
    std::uint64_t cnot = 0;
    /// Closed-form Toffoli ceiling, 2g ceil(log2 g), for the digit-oracle variant.
    std::optional<std::uint64_t> toffoli_bound;
};

/// Per-round costs of each oracle variant at precision g (a power of two >= 2).
/// The digit-oracle variant's Toffoli count is taken from the emitted routing
/// network.
ResourceTally tally_variant(Variant v, int g);

/// Gate counts of a circuit. A Fredkin is one Toffoli plus two CNOTs and a
/// controlled S is three T-type gates plus two CNOTs.
ResourceTally tally_from_circuit(const Circuit &c);

/// T cost of the multi-controlled Toffoli alternative, 32 (controls - 1) - 96.
/// Throws OutOfRangeError when that is not positive.
std::int64_t mcx_t_cost(int controls);

}  // namespace gradload

#endif
