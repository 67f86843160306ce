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

#include "gradload/gradient.h"

#include <cmath>
#include <string>

#include "gradload/errors.h"
#include "gradload/oracles.h"

namespace gradload {

StateVector gradient_state(const GradientSpec &spec) {
    if (spec.g < 1) {
        throw ValidationError("gradient state needs g >= 1");
    }
    std::vector<double> amps(spec.g);
    if (spec.weights.empty()) {
        // 2^((g-j-1)/2) / sqrt(2^g - 1), evaluated relative to the top entry
        // so large g does not overflow.
        double denom = std::sqrt(-std::expm1(-spec.g * std::log(2.0)));
        for (int j = 0; j < spec.g; j++) {
            amps[j] = std::exp2(-(j + 1) / 2.0) / denom;
        }
    } else {
        if (spec.weights.size() != static_cast<std::size_t>(spec.g)) {
            throw ValidationError("weight count must equal g");
        }
        double total = 0;
        for (double w : spec.weights) {
            if (!(w > 0) || !std::isfinite(w)) {
                throw ValidationError("weights must be positive");
            }
            total += w;
        }
        for (int j = 0; j < spec.g; j++) {
            amps[j] = std::sqrt(spec.weights[j] / total);
        }
    }
    return StateVector::from_real({static_cast<std::size_t>(spec.g)}, amps);
}

StateVector gradient_state(int g) { return gradient_state(GradientSpec{g, {}}); }

StateVector slack_gradient_state(int g) {
    if (g < 1) {
        throw ValidationError("slack gradient state needs g >= 1");
    }
    std::vector<double> amps(g + 1);
    for (int j = 0; j < g; j++) {
        amps[j] = std::exp2(-(j + 1) / 2.0);
    }
    amps[g] = std::exp2(-g / 2.0);
    return StateVector::from_real({static_cast<std::size_t>(g + 1)}, amps);
}

int address_qubits_for(int g) {
    int q = 0;
    while ((1 << q) < g + 1) {
        q++;
    }
    return q;
}

namespace {

// Appends T^m (m mod 8) on one wire using T, T-dagger and Z.
void append_t_power(Circuit &c, std::size_t w, int m) {
    m = ((m % 8) + 8) % 8;
    switch (m) {
        case 0:
            break;
        case 1:
        case 2:
        case 3:
            for (int k = 0; k < m; k++) c.append(GateKind::kT, {w});
            break;
        case 4:
            c.append(GateKind::kZ, {w});
            break;
        default:
            for (int k = m; k < 8; k++) c.append(GateKind::kTdg, {w});
            break;
    }
}

}  // namespace

GradientCircuit build_gradient_circuit(int g) {
    if (g < 1) {
        throw ValidationError("gradient circuit needs g >= 1");
    }
    GradientCircuit gc;
    gc.g = g;
    int q = address_qubits_for(g);
    std::size_t m = std::size_t{1} << q;
    if (m + q > kMaxSimulatedWires) {
        throw CapExceededError("gradient circuit for g=" + std::to_string(g) + " needs " +
                               std::to_string(m + q) + " wires");
    }
    Circuit &c = gc.circuit;
    for (std::size_t k = 0; k < m; k++) {
        gc.unary.push_back(c.add_wire("u" + std::to_string(k), true));
    }
    for (int b = 0; b < q; b++) {
        gc.address.push_back(c.add_wire("a" + std::to_string(b)));
    }
    const auto &u = gc.unary;

    c.append(GateKind::kX, {u[0]});
    // Each stage leaves (1+i)/2 behind and moves (1-i)/2 one position on.
    for (int k = 0; k < g; k++) {
        c.append(GateKind::kSqrtCnot, {u[k], u[k + 1]});
        c.append(GateKind::kCnot, {u[k + 1], u[k]});
    }
    // Position k < g carries phase e^(i pi (1-k)/4); position g carries e^(-i pi g/4).
    for (int k = 0; k < g; k++) {
        append_t_power(c, u[k], k - 1);
    }
    append_t_power(c, u[g], g);
    gc.unary_stage_end = c.gates().size();

    for (int k = 1; k <= g; k++) {
        for (int b = 0; b < q; b++) {
            if ((k >> b) & 1) {
                c.append(GateKind::kCnot, {u[k], gc.address[b]});
            }
        }
    }
    append_routing_half(c, gc.address, gc.unary, true, false);
    c.append(GateKind::kX, {u[0]});
    return gc;
}

StateVector address_register_state(const GradientCircuit &gc, const StateVector &output, double tol) {
    std::size_t m = gc.unary.size();
    std::size_t q = gc.address.size();
    if (output.size() != (std::size_t{1} << (m + q))) {
        throw DimensionMismatchError("output does not match the gradient circuit");
    }
    std::vector<cplx> amps(std::size_t{1} << q);
    double kept = 0;
    for (std::size_t a = 0; a < amps.size(); a++) {
        std::size_t idx = 0;
        for (std::size_t b = 0; b < q; b++) {
            if ((a >> b) & 1) {
                idx |= std::size_t{1} << gc.address[b];
            }
        }
        amps[a] = output[idx];
        kept += std::norm(amps[a]);
    }
    if (std::abs(kept - output.norm() * output.norm()) > tol) {
        throw ValidationError("unary register is not disentangled");
    }
    const std::size_t dim = amps.size();
    return StateVector({dim}, std::move(amps));
}

}  // namespace gradload
