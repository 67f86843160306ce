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

#include "gradload/oracles.h"

#include <cmath>
#include <string>

#include "gradload/errors.h"
#include "gradload/gradient.h"

namespace gradload {

OracleModel::OracleModel(OracleKind kind, std::shared_ptr<const QuantizedAmplitudes> bits)
    : kind_(kind), bits_(std::move(bits)) {
    if (!bits_) {
        throw ValidationError("oracle needs a bit table");
    }
}

OracleModel::OracleModel(OracleKind kind, const QuantizedAmplitudes &bits)
    : OracleModel(kind, std::make_shared<const QuantizedAmplitudes>(bits)) {}

OracleModel::OracleModel(const OracleModel &other)
    : kind_(other.kind_), bits_(other.bits_), count_(other.count_.load()) {}

OracleModel &OracleModel::operator=(const OracleModel &other) {
    kind_ = other.kind_;
    bits_ = other.bits_;
    count_.store(other.count_.load());
    return *this;
}

StateVector apply_phase_oracle(const StateVector &state, const OracleModel &o, double phase) {
    if (o.kind() != OracleKind::kPhaseBit) {
        throw ValidationError("apply_phase_oracle needs a phase_bit oracle");
    }
    const auto &q = o.bits();
    const std::size_t g = static_cast<std::size_t>(q.g());
    if (state.dims().size() != 2 || state.dims()[0] != q.n() || state.dims()[1] != g) {
        throw DimensionMismatchError("phase oracle expects an [N, g] state");
    }
    const cplx f = std::polar(1.0, phase);
    std::vector<cplx> out(state.amplitudes());
    const auto &bits = q.bits();
    for (std::size_t k = 0; k < out.size(); k++) {
        if (bits[k]) {
            out[k] *= f;
        }
    }
    o.record_query();
    return StateVector(state.dims(), std::move(out));
}

StateVector apply_digit_oracle(const StateVector &state, const OracleModel &o) {
    if (o.kind() != OracleKind::kDigit) {
        throw ValidationError("apply_digit_oracle needs a digit oracle");
    }
    const auto &q = o.bits();
    const std::size_t data = std::size_t{1} << q.g();
    const auto &dims = state.dims();
    if (dims.size() < 2 || dims.size() > 3 || dims[0] != q.n() || dims[1] != data ||
        (dims.size() == 3 && dims[2] != static_cast<std::size_t>(q.g()))) {
        throw DimensionMismatchError("digit oracle expects an [N, 2^g, g] or [N, 2^g] state");
    }
    const std::size_t inner = dims.size() == 3 ? dims[2] : 1;
    const auto &in = state.amplitudes();
    std::vector<cplx> out(in.size());
    for (std::size_t i = 0; i < q.n(); i++) {
        const std::uint64_t code = q.code(i);
        for (std::size_t d = 0; d < data; d++) {
            std::size_t src = (i * data + d) * inner;
            std::size_t dst = (i * data + (d ^ code)) * inner;
            for (std::size_t r = 0; r < inner; r++) {
                out[dst + r] = in[src + r];
            }
        }
    }
    o.record_query();
    return StateVector(dims, std::move(out));
}

std::uint64_t query_digit(const OracleModel &o, std::size_t index) {
    if (o.kind() != OracleKind::kDigit) {
        throw ValidationError("query_digit needs a digit oracle");
    }
    if (index >= o.bits().n()) {
        throw OutOfRangeError("index out of range");
    }
    o.record_query();
    return o.bits().code(index);
}

Circuit build_comparator_circuit(int g) {
    if (g < 1) {
        throw ValidationError("comparator needs g >= 1");
    }
    Circuit c;
    std::vector<std::size_t> a, b, t;
    for (int k = 0; k < g; k++) a.push_back(c.add_wire("a" + std::to_string(k)));
    for (int k = 0; k < g; k++) b.push_back(c.add_wire("b" + std::to_string(k)));
    for (int k = 0; k < g; k++) t.push_back(c.add_wire("t" + std::to_string(k), true));
    const std::size_t carry = c.add_wire("c", true);
    const std::size_t flag = c.add_wire("flag");

    // t + (~b) + 1 overflows g bits exactly when t >= b.
    std::vector<Gate> compute;
    auto emit = [&](GateKind k, std::vector<std::size_t> w) { compute.push_back(Gate{k, std::move(w)}); };
    for (int k = 0; k < g; k++) emit(GateKind::kCnot, {a[k], t[k]});
    for (int k = 0; k < g; k++) emit(GateKind::kX, {b[k]});
    emit(GateKind::kX, {carry});
    // MAJ(x, y, z): z ends up holding the majority of the three inputs.
    auto maj = [&](std::size_t x, std::size_t y, std::size_t z) {
        emit(GateKind::kCnot, {z, y});
        emit(GateKind::kCnot, {z, x});
        emit(GateKind::kToffoli, {x, y, z});
    };
    maj(carry, b[0], t[0]);
    for (int k = 1; k < g; k++) {
        maj(t[k - 1], b[k], t[k]);
    }
    for (const auto &gate : compute) c.append(gate.kind, gate.wires);
    c.append(GateKind::kCnot, {t[g - 1], flag});
    // Every gate above is self-inverse, so replaying backwards uncomputes.
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) c.append(it->kind, it->wires);
    return c;
}

bool comparator(std::uint64_t a, std::uint64_t b, int g) {
    if (g < 1 || g > 62 || (a >> g) || (b >> g)) {
        throw ValidationError("comparator inputs must fit in g bits");
    }
    Circuit c = build_comparator_circuit(g);
    std::vector<bool> bits(c.num_wires(), false);
    for (int k = 0; k < g; k++) {
        bits[k] = (a >> k) & 1;
        bits[g + k] = (b >> k) & 1;
    }
    auto out = evaluate_classical(c, bits);
    return out.back();
}

void append_routing_half(Circuit &c, std::span<const std::size_t> address, std::span<const std::size_t> data,
                         bool optimize, bool reverse) {
    const std::size_t q = address.size();
    const std::size_t m = std::size_t{1} << q;
    if (data.size() != m) {
        throw DimensionMismatchError("data register must hold 2^q positions");
    }
    std::vector<Gate> swaps;
    for (std::size_t b = 0; b < q; b++) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t p = 0; p < m; p++) {
            if (p & bit) {
                continue;
            }
            // After levels 0..b-1 only positions with those bits clear can hold
            // the routed entry.
            if (optimize && (p & (bit - 1))) {
                continue;
            }
            swaps.push_back(Gate{GateKind::kFredkin, {address[b], data[p], data[p | bit]}});
        }
    }
    if (reverse) {
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) c.append(it->kind, it->wires);
    } else {
        for (const auto &s : swaps) c.append(s.kind, s.wires);
    }
}

Circuit build_permutation_network(int q, bool optimize) {
    if (q < 0) {
        throw ValidationError("address qubit count must be nonnegative");
    }
    if (q > 20) {
        throw CapExceededError("permutation network for q=" + std::to_string(q) + " is too large to emit");
    }
    const std::size_t m = std::size_t{1} << q;
    Circuit c;
    std::vector<std::size_t> address, data;
    for (int b = 0; b < q; b++) address.push_back(c.add_wire("a" + std::to_string(b)));
    for (std::size_t p = 0; p < m; p++) data.push_back(c.add_wire("d" + std::to_string(p)));
    append_routing_half(c, address, data, optimize, false);
    c.append(GateKind::kZ, {data[0]});
    append_routing_half(c, address, data, optimize, true);
    return c;
}

PhaseOracleEmulator::PhaseOracleEmulator(OracleModel &digit) : digit_(&digit) {
    if (digit.kind() != OracleKind::kDigit) {
        throw ValidationError("phase_oracle_from_digit needs a digit oracle");
    }
    const auto &q = digit.bits();
    g_ = q.g();
    q_ = 0;
    while ((1 << q_) < g_) {
        q_++;
    }
    m_ = std::size_t{1} << q_;
    index_qubits_ = 0;
    while ((std::size_t{1} << index_qubits_) < q.n()) {
        index_qubits_++;
    }
    std::vector<std::size_t> data, address;
    for (std::size_t p = 0; p < m_; p++) data.push_back(network_.add_wire("d" + std::to_string(p), true));
    for (int b = 0; b < q_; b++) address.push_back(network_.add_wire("a" + std::to_string(b)));
    for (std::size_t b = 0; b < index_qubits_; b++) network_.add_wire("i" + std::to_string(b));
    if (network_.num_wires() > kMaxSimulatedWires) {
        throw CapExceededError("emulated phase oracle exceeds the wire cap");
    }
    append_routing_half(network_, address, data, true, false);
    network_.append(GateKind::kZ, {data[0]});
    append_routing_half(network_, address, data, true, true);
}

void PhaseOracleEmulator::apply_amp(std::vector<cplx> &amps) const {
    const auto &q = digit_->bits();
    const std::size_t data_dim = std::size_t{1} << m_;
    const std::size_t low = data_dim << q_;
    std::vector<cplx> out(amps.size());
    for (std::size_t k = 0; k < amps.size(); k++) {
        std::size_t i = k / low;
        std::size_t d = k % data_dim;
        std::size_t mask = 0;
        if (i < q.n()) {
            for (int j = 0; j < g_; j++) {
                if (q.bit(i, j)) mask |= std::size_t{1} << j;
            }
        }
        out[(k & ~(data_dim - 1)) | (d ^ mask)] = amps[k];
    }
    amps.swap(out);
    digit_->record_query();
}

StateVector PhaseOracleEmulator::operator()(const StateVector &state) {
    const auto &q = digit_->bits();
    const std::size_t g = static_cast<std::size_t>(g_);
    if (state.dims().size() != 2 || state.dims()[0] != q.n() || state.dims()[1] != g) {
        throw DimensionMismatchError("emulated phase oracle expects an [N, g] state");
    }
    const std::size_t addr_dim = std::size_t{1} << q_;
    const std::size_t data_dim = std::size_t{1} << m_;
    const std::size_t total = std::size_t{1} << network_.num_wires();
    std::vector<cplx> big(total);
    for (std::size_t i = 0; i < q.n(); i++) {
        for (std::size_t j = 0; j < g; j++) {
            big[(i * addr_dim + j) * data_dim] = state[i * g + j];
        }
    }
    apply_amp(big);
    StateVector mid = simulate_circuit(network_, StateVector({total}, std::move(big)));
    std::vector<cplx> amps(mid.amplitudes());
    apply_amp(amps);
    std::vector<cplx> out(state.size());
    double kept = 0;
    double all = 0;
    for (std::size_t k = 0; k < amps.size(); k++) {
        all += std::norm(amps[k]);
    }
    for (std::size_t i = 0; i < q.n(); i++) {
        for (std::size_t j = 0; j < g; j++) {
            out[i * g + j] = amps[(i * addr_dim + j) * data_dim];
            kept += std::norm(out[i * g + j]);
        }
    }
    if (std::abs(all - kept) > 1e-10) {
        throw Error("emulated oracle left the data register entangled");
    }
    emulated_++;
    return StateVector(state.dims(), std::move(out));
}

EmulationCost PhaseOracleEmulator::cost() const {
    EmulationCost c;
    c.toffoli = network_.count(GateKind::kFredkin);
    c.ancillas = static_cast<std::size_t>(g_) + static_cast<std::size_t>(q_);
    return c;
}

PhaseOracleEmulator phase_oracle_from_digit(OracleModel &o) { return PhaseOracleEmulator(o); }

}  // namespace gradload
