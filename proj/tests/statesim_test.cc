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

#include "gradload/statesim.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gradload/errors.h"

namespace gradload {
namespace {

const double kS = 1 / std::numbers::sqrt2;

StateVector random_state(std::mt19937_64 &rng, std::vector<std::size_t> dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    std::normal_distribution<double> d;
    std::vector<cplx> a(n);
    for (auto &x : a) x = cplx(d(rng), d(rng));
    return normalized(StateVector(std::move(dims), std::move(a)));
}

// Matrix of a circuit on `k` wires in the gate-matrix convention (wire 0 is
// the most significant bit), built column by column from simulations.
Matrix circuit_matrix(const Circuit &c) {
    const std::size_t k = c.num_wires();
    const std::size_t n = std::size_t{1} << k;
    auto to_sim = [&](std::size_t msb_index) {
        std::size_t idx = 0;
        for (std::size_t w = 0; w < k; w++)
            if ((msb_index >> (k - 1 - w)) & 1) idx |= std::size_t{1} << w;
        return idx;
    };
    Matrix m(n, n);
    for (std::size_t col = 0; col < n; col++) {
        std::vector<cplx> a(n);
        a[to_sim(col)] = 1;
        auto out = simulate_circuit(c, StateVector({n}, a));
        for (std::size_t row = 0; row < n; row++) m(row, col) = out[to_sim(row)];
    }
    return m;
}

TEST(StateVector, DefaultIsZeroBasisState) {
    StateVector s({3, 2});
    EXPECT_EQ(s.size(), 6u);
    EXPECT_EQ(s[0], cplx(1, 0));
    EXPECT_DOUBLE_EQ(s.norm(), 1.0);
}

TEST(StateVector, RowMajorIndexing) {
    auto s = StateVector::basis({3, 4}, {2, 1});
    EXPECT_EQ(s.index({2, 1}), 9u);
    EXPECT_EQ(s[9], cplx(1, 0));
    EXPECT_THROW(StateVector({3}, std::vector<cplx>(4)), DimensionMismatchError);
}

TEST(Overlap, BasicValues) {
    std::mt19937_64 rng(1);
    auto psi = random_state(rng, {4, 3});
    EXPECT_NEAR(std::abs(overlap(psi, psi) - 1.0), 0.0, 1e-12);
    EXPECT_EQ(overlap(StateVector::basis({4}, {1}), StateVector::basis({4}, {2})), cplx(0, 0));
    EXPECT_THROW(overlap(StateVector({4}), StateVector({2, 2})), DimensionMismatchError);
}

TEST(Overlap, UniformStartAgainstMarkedState) {
    // N=4, g=2, every A_i = 1/2: only the j=0 column is set.
    std::vector<double> s(8), w(8, 0.0);
    double g0 = std::sqrt(2.0 / 3.0), g1 = std::sqrt(1.0 / 3.0);
    for (int i = 0; i < 4; i++) {
        s[2 * i] = g0 / 2;
        s[2 * i + 1] = g1 / 2;
        w[2 * i] = 0.5;
    }
    auto ip = overlap(StateVector::from_real({4, 2}, w), StateVector::from_real({4, 2}, s));
    EXPECT_NEAR(ip.real(), std::sqrt(2.0 / 3.0), 1e-12);
}

TEST(ApplyUnitary, IdentityHadamardAndZ) {
    std::mt19937_64 rng(2);
    auto psi = random_state(rng, {3, 2});
    EXPECT_LT(distance(apply_unitary(psi, Matrix::identity(2), 1), psi), 1e-15);

    Matrix h = gate_matrix(GateKind::kH);
    StateVector zero({2, 2, 2});
    auto s = apply_unitary(apply_unitary(apply_unitary(zero, h, 0), h, 1), h, 2);
    for (std::size_t k = 0; k < 8; k++) EXPECT_NEAR(s[k].real(), 1 / std::sqrt(8.0), 1e-15);

    auto plus = StateVector::from_real({2}, {kS, kS});
    auto minus = apply_unitary(plus, gate_matrix(GateKind::kZ), 0);
    EXPECT_NEAR(minus[0].real(), kS, 1e-15);
    EXPECT_NEAR(minus[1].real(), -kS, 1e-15);

    EXPECT_THROW(apply_unitary(psi, Matrix::identity(2), 0), DimensionMismatchError);
}

TEST(ApplyUnitary, PreservesNorm) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; t++) {
        auto psi = random_state(rng, {2, 4, 3});
        auto u = gate_matrix(GateKind::kSqrtSwap);
        auto out = apply_unitary(psi, u, 1);
        EXPECT_NEAR(out.norm(), 1.0, 1e-12);
    }
}

TEST(Gates, AllMatricesUnitary) {
    for (auto k : {GateKind::kH, GateKind::kX, GateKind::kZ, GateKind::kT, GateKind::kTdg, GateKind::kCnot,
                   GateKind::kCs, GateKind::kToffoli, GateKind::kFredkin, GateKind::kSqrtSwap, GateKind::kSqrtCnot}) {
        Matrix u = gate_matrix(k);
        EXPECT_EQ(u.rows(), std::size_t{1} << gate_arity(k));
        EXPECT_TRUE(u.is_unitary(1e-12)) << gate_name(k);
        EXPECT_EQ(gate_from_name(gate_name(k)), k);
    }
    EXPECT_THROW(gate_from_name("NOPE"), ValidationError);
}

TEST(Gates, SquareRootsSquareToParents) {
    Matrix sc = gate_matrix(GateKind::kSqrtCnot);
    EXPECT_LT((sc * sc).max_abs_diff(gate_matrix(GateKind::kCnot)), 1e-12);
    Matrix ss = gate_matrix(GateKind::kSqrtSwap);
    Matrix swap(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
    EXPECT_LT((ss * ss).max_abs_diff(swap), 1e-12);
}

TEST(SimulateCircuit, EmptyAndCnot) {
    std::mt19937_64 rng(4);
    Circuit c;
    c.add_wire("a");
    c.add_wire("b");
    auto psi = random_state(rng, {4});
    EXPECT_LT(distance(simulate_circuit(c, psi), psi), 1e-15);

    c.append(GateKind::kCnot, {0, 1});
    // |10> with a = 1, b = 0 is index 1 under wire w = bit w.
    auto out = simulate_circuit(c, StateVector::basis({4}, {1}));
    EXPECT_NEAR(std::abs(out[3]), 1.0, 1e-15);
}

TEST(SimulateCircuit, SqrtCnotDecompositionMatchesGate) {
    Circuit c = sqrt_cnot_decomposition();
    ASSERT_EQ(c.num_wires(), 2u);
    EXPECT_EQ(c.gates().size(), 7u);
    EXPECT_EQ(c.count(GateKind::kT) + c.count(GateKind::kTdg), 3u);
    EXPECT_LT(circuit_matrix(c).max_abs_diff(gate_matrix(GateKind::kSqrtCnot)), 1e-12);
}

TEST(SimulateCircuit, ControlledSFromTAndCnot) {
    Circuit c;
    c.add_wire("c");
    c.add_wire("t");
    c.append(GateKind::kT, {0});
    c.append(GateKind::kT, {1});
    c.append(GateKind::kCnot, {0, 1});
    c.append(GateKind::kTdg, {1});
    c.append(GateKind::kCnot, {0, 1});
    EXPECT_LT(circuit_matrix(c).max_abs_diff(gate_matrix(GateKind::kCs)), 1e-12);
}

TEST(SimulateCircuit, LinearOnSuperpositions) {
    std::mt19937_64 rng(5);
    Circuit c;
    for (int w = 0; w < 4; w++) c.add_wire("w" + std::to_string(w));
    c.append(GateKind::kH, {2});
    c.append(GateKind::kSqrtSwap, {0, 3});
    c.append(GateKind::kFredkin, {2, 1, 0});
    c.append(GateKind::kSqrtCnot, {3, 1});
    c.append(GateKind::kToffoli, {0, 1, 2});
    auto a = random_state(rng, {16});
    auto b = random_state(rng, {16});
    cplx x(0.3, 0.2), y(-0.5, 0.7);
    std::vector<cplx> mix(16);
    for (std::size_t k = 0; k < 16; k++) mix[k] = x * a[k] + y * b[k];
    auto lhs = simulate_circuit(c, StateVector({16}, mix));
    auto ra = simulate_circuit(c, a);
    auto rb = simulate_circuit(c, b);
    for (std::size_t k = 0; k < 16; k++) EXPECT_LT(std::abs(lhs[k] - (x * ra[k] + y * rb[k])), 1e-12);
    EXPECT_NEAR(ra.norm(), 1.0, 1e-12);
}

TEST(SimulateCircuit, RegisterSplitDoesNotMatter) {
    std::mt19937_64 rng(6);
    Circuit c;
    for (int w = 0; w < 3; w++) c.add_wire("w" + std::to_string(w));
    c.append(GateKind::kH, {0});
    c.append(GateKind::kCnot, {0, 2});
    auto flat = random_state(rng, {8});
    StateVector split({2, 4}, flat.amplitudes());
    auto a = simulate_circuit(c, flat);
    auto b = simulate_circuit(c, split);
    EXPECT_EQ(b.dims(), split.dims());
    for (std::size_t k = 0; k < 8; k++) EXPECT_LT(std::abs(a[k] - b[k]), 1e-15);
}

TEST(SimulateCircuit, WireCap) {
    Circuit c;
    for (std::size_t w = 0; w <= kMaxSimulatedWires; w++) c.add_wire("w" + std::to_string(w));
    EXPECT_THROW(simulate_circuit(c, StateVector({2})), CapExceededError);
}

TEST(SimulateCircuit, ClassicalEvaluationAgrees) {
    Circuit c;
    for (int w = 0; w < 4; w++) c.add_wire("w" + std::to_string(w));
    c.append(GateKind::kX, {0});
    c.append(GateKind::kToffoli, {0, 1, 3});
    c.append(GateKind::kFredkin, {3, 1, 2});
    c.append(GateKind::kCnot, {2, 0});
    for (std::size_t k = 0; k < 16; k++) {
        std::vector<bool> bits(4);
        for (int w = 0; w < 4; w++) bits[w] = (k >> w) & 1;
        auto out = evaluate_classical(c, bits);
        std::size_t ko = 0;
        for (int w = 0; w < 4; w++) ko |= std::size_t{out[w]} << w;
        auto sim = simulate_circuit(c, StateVector::basis({16}, {k}));
        EXPECT_NEAR(std::abs(sim[ko]), 1.0, 1e-15);
    }
    c.append(GateKind::kH, {0});
    EXPECT_THROW(evaluate_classical(c, std::vector<bool>(4)), ValidationError);
}

TEST(Circuit, DumpParseRoundTrip) {
    Circuit c;
    c.add_wire("x");
    c.add_wire("anc", true);
    c.add_wire("y");
    c.append(GateKind::kSqrtCnot, {0, 1});
    c.append(GateKind::kFredkin, {2, 0, 1});
    c.append(GateKind::kTdg, {1});
    auto text = c.dump();
    EXPECT_NE(text.find("SQRT_CNOT x,anc"), std::string::npos);
    auto back = Circuit::parse(text);
    EXPECT_EQ(back.dump(), text);
    EXPECT_EQ(back.ancilla_count(), 1u);
    EXPECT_THROW(Circuit::parse("# wires a,b\nCNOT\n"), ValidationError);
    EXPECT_THROW(Circuit::parse("# wires a,b\nSWIZZLE a,b\n"), ValidationError);
}

TEST(Circuit, RejectsBadGates) {
    Circuit c;
    c.add_wire("a");
    c.add_wire("b");
    EXPECT_THROW(c.append(GateKind::kCnot, {0}), ValidationError);
    EXPECT_THROW(c.append(GateKind::kCnot, {0, 0}), ValidationError);
    EXPECT_THROW(c.append(GateKind::kX, {5}), ValidationError);
    EXPECT_THROW(c.add_wire("a"), ValidationError);
}

TEST(StatePrep, MapsZeroToTargetAndInverts) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; t++) {
        auto target = random_state(rng, {5, 3});
        StatePrep p(target);
        auto out = p.apply(StateVector({5, 3}));
        EXPECT_LT(distance(out, target), 1e-12);
        auto x = random_state(rng, {5, 3});
        EXPECT_LT(distance(p.apply_adjoint(p.apply(x)), x), 1e-12);
        Matrix m = to_matrix([&](const StateVector &s) { return p.apply(s); }, {5, 3});
        EXPECT_TRUE(m.is_unitary(1e-12));
    }
}

}  // namespace
}  // namespace gradload
