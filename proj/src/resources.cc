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

#include "gradload/resources.h"

#include <string>

#include "gradload/errors.h"
#include "gradload/oracles.h"

namespace gradload {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::kSandersV1:
            return "sanders_v1";
        case Variant::kSandersV2:
            return "sanders_v2";
        case Variant::kOursV1:
            return "ours_v1";
        case Variant::kOursV2:
            return "ours_v2";
    }
    throw ValidationError("unknown variant");
}

Variant parse_variant(std::string_view name) {
    for (Variant v : all_variants()) {
        if (variant_name(v) == name) return v;
    }
    throw ValidationError("unknown variant: " + std::string(name));
}

std::vector<Variant> all_variants() {
    return {Variant::kSandersV1, Variant::kSandersV2, Variant::kOursV1, Variant::kOursV2};
}

namespace {

int exact_log2(int g) {
    if (g < 2 || (g & (g - 1))) {
        throw ValidationError("precision must be a power of two >= 2");
    }
    int q = 0;
    while ((1 << q) < g) q++;
    return q;
}

}  // namespace

ResourceTally tally_variant(Variant v, int g) {
    const int q = exact_log2(g);
    const auto ug = static_cast<std::uint64_t>(g);
    const auto uq = static_cast<std::uint64_t>(q);
    ResourceTally t;
    t.variant = v;
    switch (v) {
        case Variant::kSandersV1:
            t.ancillas = 2 * ug + 1;
            t.toffoli = 2 * ug;
            break;
        case Variant::kSandersV2:
            t.ancillas = ug + 2;
            t.toffoli = 4 * ug - 2;
            break;
        case Variant::kOursV1:
            t.ancillas = uq;
            t.sqrt_swap = ug;
            t.t_gates = 3 * ug;
            break;
        case Variant::kOursV2: {
            t.ancillas = ug + uq;
            t.sqrt_swap = ug;
            t.t_gates = 3 * ug;
            t.toffoli_bound = 2 * ug * uq;
            Circuit net = build_permutation_network(q, true);
            t.toffoli = tally_from_circuit(net).toffoli;
            break;
        }
    }
    return t;
}

ResourceTally tally_from_circuit(const Circuit &c) {
    ResourceTally t;
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::kToffoli:
                t.toffoli++;
                break;
            case GateKind::kFredkin:
                t.toffoli++;
                t.cnot += 2;
                break;
            case GateKind::kSqrtCnot:
            case GateKind::kSqrtSwap:
                t.sqrt_swap++;
                t.t_gates += 3;
                break;
            case GateKind::kCs:
                t.t_gates += 3;
                t.cnot += 2;
                break;
            case GateKind::kT:
            case GateKind::kTdg:
                t.t_gates++;
                break;
            case GateKind::kCnot:
                t.cnot++;
                break;
            case GateKind::kH:
            case GateKind::kX:
            case GateKind::kZ:
                break;
        }
    }
    t.ancillas = c.ancilla_count();
    return t;
}

std::int64_t mcx_t_cost(int controls) {
    std::int64_t v = 32 * (static_cast<std::int64_t>(controls) - 1) - 96;
    if (v <= 0) {
        throw OutOfRangeError("multi-controlled Toffoli cost formula is not positive for " +
                              std::to_string(controls) + " controls");
    }
    return v;
}

}  // namespace gradload
