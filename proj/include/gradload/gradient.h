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

#ifndef GRADLOAD_GRADIENT_H
#define GRADLOAD_GRADIENT_H

#include <cstddef>
#include <vector>

#include "gradload/statesim.h"

namespace gradload {

/// Address-register gradient. Empty `weights` means binary weights 2^-j.
struct GradientSpec {
    int g = 1;
    std::vector<double> weights;
};

/// Sum_j sqrt(w_j) |j>, normalized, as a single register of dimension g.
StateVector gradient_state(const GradientSpec &spec);
StateVector gradient_state(int g);

/// The (g+1)-dimensional state proportional to (2^((g-1)/2), ..., sqrt 2, 1, 1).
/// Index g is the slack dimension.
StateVector slack_gradient_state(int g);

/// Number of address qubits used for g+1 unary positions.
int address_qubits_for(int g);

struct GradientCircuit {
    Circuit circuit;
    int g = 0;
    /// Unary positions, padded up to a power of two. Position k is wire unary[k].
    std::vector<std::size_t> unary;
    /// Address qubits, least significant first.
    std::vector<std::size_t> address;
    /// Gate count after the sqrt-CNOT chain and its phase fix-ups, before the
    /// unary-to-binary conversion.
    std::size_t unary_stage_end = 0;
};

/// Circuit taking |0...0> to |0...0>_unary (x) (slack gradient)_address. It
/// excites unary position 0, spreads the excitation with g sqrt-CNOT stages,
/// fixes the relative phases with T gates, writes the position into the
/// address register, and routes the excitation back to position 0 with half a
/// permutation network. Throws CapExceededError when the wire count exceeds the
/// simulation cap.
GradientCircuit build_gradient_circuit(int g);

/// Reads the address-register amplitudes from a simulated output of
/// build_gradient_circuit. Throws ValidationError if the unary register is not
/// back in |0...0>.
StateVector address_register_state(const GradientCircuit &gc, const StateVector &output, double tol = 1e-10);

}  // namespace gradload

#endif
