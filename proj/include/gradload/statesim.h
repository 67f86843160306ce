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

#ifndef GRADLOAD_STATESIM_H
#define GRADLOAD_STATESIM_H

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gradload {

using cplx = std::complex<double>;

/// Dense complex amplitudes over a composite register. Flattening is row
/// major: the first register is the most significant digit.
class StateVector {
   public:
    StateVector() = default;
    /// The all-zero basis state |0...0>.
    explicit StateVector(std::vector<std::size_t> dims);
    StateVector(std::vector<std::size_t> dims, std::vector<cplx> amplitudes);

    static StateVector basis(std::vector<std::size_t> dims, const std::vector<std::size_t> &digits);
    static StateVector from_real(std::vector<std::size_t> dims, const std::vector<double> &values);

    const std::vector<std::size_t> &dims() const { return dims_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<cplx> &amplitudes() const { return amps_; }
    std::vector<cplx> &mutable_amplitudes() { return amps_; }
    cplx operator[](std::size_t k) const { return amps_[k]; }

    /// Flat index of a digit tuple.
    std::size_t index(const std::vector<std::size_t> &digits) const;
    cplx at(const std::vector<std::size_t> &digits) const { return amps_[index(digits)]; }
    double norm() const;

   private:
    std::vector<std::size_t> dims_;
    std::vector<cplx> amps_;
};

/// <a|b>. Throws DimensionMismatchError when the register layouts differ.
cplx overlap(const StateVector &a, const StateVector &b);
/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);
/// Throws ZeroVectorError on a zero vector.
StateVector normalized(const StateVector &s);
StateVector tensor(const StateVector &a, const StateVector &b);
/// l2 distance between two states with the same layout.
double distance(const StateVector &a, const StateVector &b);

/// Small dense row-major complex matrix.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix &other) const;
    Matrix operator-(const Matrix &other) const;
    Matrix adjoint() const;
    Matrix kron(const Matrix &other) const;
    /// Largest entrywise modulus difference.
    double max_abs_diff(const Matrix &other) const;
    bool is_unitary(double tol = 1e-12) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Applies `u` to register `target`. Throws DimensionMismatchError on a size clash.
StateVector apply_unitary(const StateVector &state, const Matrix &u, std::size_t target);

/// Linear map on states, used for preparation unitaries and their inverses.
using LinearOp = std::function<StateVector(const StateVector &)>;

/// Dense matrix of `op` restricted to the register layout `dims`.
Matrix to_matrix(const LinearOp &op, const std::vector<std::size_t> &dims);

/// Unitary taking |0...0> to a given real or complex state. It is the
/// Householder reflection through e_0 - s (with a phase fix), so it is its own
/// inverse.
class StatePrep {
   public:
    explicit StatePrep(StateVector target);
    const StateVector &target() const { return target_; }
    StateVector apply(const StateVector &x) const;
    StateVector apply_adjoint(const StateVector &x) const;

   private:
    StateVector target_;
    std::vector<cplx> v_;
    double v_norm_sq_ = 0;
    cplx phase_{1, 0};
};

enum class GateKind { kH, kX, kZ, kT, kTdg, kCnot, kCs, kToffoli, kFredkin, kSqrtSwap, kSqrtCnot };

std::string_view gate_name(GateKind kind);
/// Throws ValidationError on an unknown name.
GateKind gate_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
/// Matrix in the basis where the first listed wire is the most significant bit.
Matrix gate_matrix(GateKind kind);
/// True for the permutation gates X, CNOT, Toffoli and Fredkin.
bool gate_is_classical(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<std::size_t> wires;
};

/// Ordered gate list over named qubit wires. Wire w is bit w of the basis
/// index when the circuit is simulated.
class Circuit {
   public:
    std::size_t add_wire(std::string name, bool ancilla = false);
    std::size_t wire(std::string_view name) const;
    std::size_t num_wires() const { return names_.size(); }
    const std::string &wire_name(std::size_t w) const { return names_[w]; }
    bool is_ancilla(std::size_t w) const { return ancilla_[w]; }
    std::size_t ancilla_count() const;

    void append(GateKind kind, std::vector<std::size_t> wires);
    /// Appends all gates of `other`, mapping its wires onto this circuit's
    /// wires by name.
    void extend(const Circuit &other);
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t count(GateKind kind) const;
    /// The first `n` gates.
    Circuit prefix(std::size_t n) const;

    /// Text dump: a `# wires` comment, then one `GATE wire[,wire...]` per line.
    std::string dump() const;
    static Circuit parse(std::string_view text);

   private:
    std::vector<std::string> names_;
    std::vector<bool> ancilla_;
    std::vector<Gate> gates_;
};

inline constexpr std::size_t kMaxSimulatedWires = 24;

/// Runs the circuit gate by gate. The input must hold 2^num_wires amplitudes
/// (any register split). Throws CapExceededError beyond kMaxSimulatedWires.
StateVector simulate_circuit(const Circuit &c, const StateVector &input);

/// Evaluates a circuit made only of classical gates on a basis state.
std::vector<bool> evaluate_classical(const Circuit &c, std::vector<bool> bits);

/// The seven-gate H, T, T, CNOT, T-dagger, CNOT, H realization of a
/// controlled square root of X.
Circuit sqrt_cnot_decomposition();

}  // namespace gradload

#endif
