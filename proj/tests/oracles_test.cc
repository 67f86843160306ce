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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

#include "brute.h"
#include "gradload/amplify.h"
#include "gradload/errors.h"
#include "gradload/gradient.h"

namespace gradload {
namespace {

StateVector random_state(std::mt19937_64 &rng, std::vector<std::size_t> dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    std::normal_distribution<double> d;
    std::vector<cplx> a(n);
    for (auto &x : a) x = cplx(d(rng), d(rng));
    return normalized(StateVector(std::move(dims), std::move(a)));
}

TEST(PhaseOracle, SingleSignFlip) {
    auto q = QuantizedAmplitudes::from_codes({1, 0}, 1);
    OracleModel o(OracleKind::kPhaseBit, q);
    auto in = StateVector::from_real({2, 1}, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
    auto out = apply_phase_oracle(in, o);
    EXPECT_NEAR(out[0].real(), -1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(out[1].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(o.query_count(), 1u);
}

TEST(PhaseOracle, ZeroTableIsIdentity) {
    std::mt19937_64 rng(1);
    auto q = QuantizedAmplitudes::from_codes({0, 0, 0}, 3);
    OracleModel o(OracleKind::kPhaseBit, q);
    auto psi = random_state(rng, {3, 3});
    EXPECT_LT(distance(apply_phase_oracle(psi, o), psi), 1e-15);
}

TEST(PhaseOracle, SelfInverseAndCounted) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; t++) {
        auto codes = brute::random_codes(rng, 5, 4);
        OracleModel o(OracleKind::kPhaseBit, QuantizedAmplitudes::from_codes(codes, 4));
        auto psi = random_state(rng, {5, 4});
        EXPECT_LT(distance(apply_phase_oracle(apply_phase_oracle(psi, o), o), psi), 1e-14);
        EXPECT_EQ(o.query_count(), 2u);
    }
}

TEST(PhaseOracle, MarkedStateEigenvector) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng() % 16;
        int g = 1 + static_cast<int>(rng() % 4);
        auto codes = brute::random_codes(rng, n, g);
        OracleModel o(OracleKind::kPhaseBit, QuantizedAmplitudes::from_codes(codes, g));
        auto w = StateVector::from_real({n, static_cast<std::size_t>(g)}, brute::omega(codes, g));
        auto out = apply_phase_oracle(w, o);
        for (std::size_t k = 0; k < w.size(); k++) EXPECT_LT(std::abs(out[k] + w[k]), 1e-12);
    }
}

TEST(PhaseOracle, ReflectionOnStartState) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng() % 16;
        int g = 1 + static_cast<int>(rng() % 4);
        auto codes = brute::random_codes(rng, n, g);
        OracleModel o(OracleKind::kPhaseBit, QuantizedAmplitudes::from_codes(codes, g));
        auto s = brute::start_state(n, g);
        auto w = brute::omega(codes, g);
        double ws = brute::dot(w, s);
        auto out = apply_phase_oracle(StateVector::from_real({n, static_cast<std::size_t>(g)}, s), o);
        for (std::size_t k = 0; k < s.size(); k++) EXPECT_NEAR(out[k].real(), s[k] - 2 * ws * w[k], 1e-12);
    }
}

TEST(PhaseOracle, RejectsWrongShapeOrKind) {
    auto q = QuantizedAmplitudes::from_codes({1, 2}, 2);
    OracleModel phase(OracleKind::kPhaseBit, q);
    OracleModel digit(OracleKind::kDigit, q);
    EXPECT_THROW(apply_phase_oracle(StateVector({2, 3}), phase), DimensionMismatchError);
    EXPECT_THROW(apply_phase_oracle(StateVector({2, 2}), digit), ValidationError);
}

TEST(PhaseOracle, ConcurrentCounting) {
    auto q = QuantizedAmplitudes::from_codes({3, 1}, 2);
    OracleModel o(OracleKind::kPhaseBit, q);
    StateVector psi({2, 2});
    std::vector<std::thread> ts;
    for (int t = 0; t < 4; t++)
        ts.emplace_back([&] {
            for (int k = 0; k < 250; k++) apply_phase_oracle(psi, o);
        });
    for (auto &t : ts) t.join();
    EXPECT_EQ(o.query_count(), 1000u);
}

TEST(DigitOracle, WritesCodes) {
    std::mt19937_64 rng(5);
    const int g = 3;
    auto codes = brute::random_codes(rng, 6, g);
    OracleModel o(OracleKind::kDigit, QuantizedAmplitudes::from_codes(codes, g));
    for (std::size_t i = 0; i < 6; i++) {
        auto out = apply_digit_oracle(StateVector::basis({6, 8}, {i, 0}), o);
        EXPECT_NEAR(std::abs(out.at({i, codes[i]})), 1.0, 1e-15);
        EXPECT_EQ(query_digit(o, i), codes[i]);
    }
    EXPECT_EQ(o.query_count(), 12u);
    EXPECT_THROW(query_digit(o, 6), OutOfRangeError);
}

TEST(DigitOracle, Involution) {
    std::mt19937_64 rng(6);
    auto codes = brute::random_codes(rng, 4, 2);
    OracleModel o(OracleKind::kDigit, QuantizedAmplitudes::from_codes(codes, 2));
    auto psi = random_state(rng, {4, 4, 2});
    EXPECT_LT(distance(apply_digit_oracle(apply_digit_oracle(psi, o), o), psi), 1e-15);
    EXPECT_THROW(apply_digit_oracle(StateVector({4, 2, 2}), o), DimensionMismatchError);
}

TEST(DigitOracle, OnStartStateWithGradient) {
    const int g = 3;
    std::vector<std::uint64_t> codes = {4, 7, 1, 5};
    OracleModel o(OracleKind::kDigit, QuantizedAmplitudes::from_codes(codes, g));
    // (1/sqrt N) sum_i |i>|0>|G>.
    auto grad = brute::gradient(g);
    std::vector<double> in(4 * 8 * g, 0.0);
    for (std::size_t i = 0; i < 4; i++)
        for (int j = 0; j < g; j++) in[(i * 8 + 0) * g + j] = grad[j] / 2;
    auto out = apply_digit_oracle(StateVector::from_real({4, 8, g}, in), o);
    for (std::size_t i = 0; i < 4; i++)
        for (std::size_t d = 0; d < 8; d++)
            for (int j = 0; j < g; j++) {
                double want = d == codes[i] ? grad[j] / 2 : 0.0;
                EXPECT_NEAR(out.at({i, d, static_cast<std::size_t>(j)}).real(), want, 1e-15);
            }
}

TEST(Comparator, ExhaustiveFourBits) {
    for (std::uint64_t a = 0; a < 16; a++)
        for (std::uint64_t b = 0; b < 16; b++) EXPECT_EQ(comparator(a, b, 4), a >= b) << a << " " << b;
    EXPECT_TRUE(comparator(5, 5, 3));
    EXPECT_FALSE(comparator(0, 7, 3));
    EXPECT_THROW(comparator(16, 0, 4), ValidationError);
}

TEST(Comparator, CostAndReversibility) {
    for (int g = 1; g <= 6; g++) {
        auto c = build_comparator_circuit(g);
        EXPECT_EQ(c.count(GateKind::kToffoli), static_cast<std::size_t>(2 * g));
        EXPECT_EQ(c.ancilla_count(), static_cast<std::size_t>(g + 1));
    }
    // Scratch and carry return to zero on every input; a and b are untouched.
    const int g = 3;
    auto c = build_comparator_circuit(g);
    for (std::uint64_t a = 0; a < 8; a++)
        for (std::uint64_t b = 0; b < 8; b++) {
            std::vector<bool> bits(c.num_wires(), false);
            for (int k = 0; k < g; k++) {
                bits[k] = (a >> k) & 1;
                bits[g + k] = (b >> k) & 1;
            }
            auto out = evaluate_classical(c, bits);
            for (std::size_t w = 0; w + 1 < out.size(); w++) EXPECT_EQ(out[w], bits[w]);
        }
}

// Exhaustive check of the permutation network on every address and data basis state.
TEST(PermutationNetwork, ExhaustiveTwoAddressQubits) {
    for (bool opt : {true, false}) {
        auto c = build_permutation_network(2, opt);
        ASSERT_EQ(c.num_wires(), 6u);
        for (std::size_t k = 0; k < 64; k++) {
            std::size_t x = k & 3;
            std::size_t data = k >> 2;
            auto out = simulate_circuit(c, StateVector::basis({64}, {k}));
            double sign = ((data >> x) & 1) ? -1.0 : 1.0;
            EXPECT_NEAR(out[k].real(), sign, 1e-15) << "k=" << k;
        }
    }
}

TEST(PermutationNetwork, FredkinCounts) {
    for (int q = 1; q <= 5; q++) {
        std::size_t m = std::size_t{1} << q;
        auto full = build_permutation_network(q, false);
        auto opt = build_permutation_network(q, true);
        EXPECT_EQ(full.count(GateKind::kFredkin), q * m);
        EXPECT_LE(full.count(GateKind::kFredkin), 2 * m * q);
        EXPECT_EQ(opt.count(GateKind::kFredkin), 2 * (m - 1));
        if (q >= 2) EXPECT_LT(opt.count(GateKind::kFredkin), full.count(GateKind::kFredkin));
        EXPECT_EQ(opt.count(GateKind::kZ), 1u);
    }
}

TEST(PermutationNetwork, EmptyDataUnaffected) {
    auto c = build_permutation_network(3);
    for (std::size_t x = 0; x < 8; x++) {
        auto out = simulate_circuit(c, StateVector::basis({std::size_t{1} << c.num_wires()}, {x}));
        EXPECT_NEAR(out[x].real(), 1.0, 1e-15);
    }
}

TEST(Emulator, MatchesPhaseOracleOnBasis) {
    auto q = QuantizedAmplitudes::from_codes({5, 9, 15, 0}, 4);
    OracleModel phase(OracleKind::kPhaseBit, q);
    OracleModel digit(OracleKind::kDigit, q);
    auto em = phase_oracle_from_digit(digit);
    for (std::size_t i = 0; i < 4; i++)
        for (std::size_t j = 0; j < 4; j++) {
            auto b = StateVector::basis({4, 4}, {i, j});
            EXPECT_LT(distance(em(b), apply_phase_oracle(b, phase)), 1e-12);
        }
    EXPECT_EQ(em.emulated_queries(), 16u);
    EXPECT_EQ(digit.query_count(), 32u);
}

TEST(Emulator, MatchesOnRandomStates) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; t++) {
        std::size_t n = 1 + rng() % 8;
        int g = 1 + static_cast<int>(rng() % 4);
        auto q = QuantizedAmplitudes::from_codes(brute::random_codes(rng, n, g, false), g);
        OracleModel phase(OracleKind::kPhaseBit, q);
        OracleModel digit(OracleKind::kDigit, q);
        PhaseOracleEmulator em(digit);
        auto psi = random_state(rng, {n, static_cast<std::size_t>(g)});
        EXPECT_LT(distance(em(psi), apply_phase_oracle(psi, phase)), 1e-10);
        EXPECT_EQ(digit.query_count(), 2u);
        auto cost = em.cost();
        int lg = 0;
        while ((1 << lg) < g) lg++;
        EXPECT_LE(cost.toffoli, static_cast<std::size_t>(2 * g * lg));
        EXPECT_EQ(cost.ancillas, static_cast<std::size_t>(g + lg));
    }
}

TEST(Emulator, TwoBitToy) {
    auto q = QuantizedAmplitudes::from_codes({2, 0}, 2);
    OracleModel digit(OracleKind::kDigit, q);
    PhaseOracleEmulator em(digit);
    auto in = StateVector::from_real({2, 2}, {1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0), 0});
    auto out = em(in);
    EXPECT_NEAR(out[0].real(), -1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(out[2].real(), 1 / std::sqrt(2.0), 1e-12);
}

TEST(Emulator, RejectsPhaseOracle) {
    auto q = QuantizedAmplitudes::from_codes({1}, 1);
    OracleModel phase(OracleKind::kPhaseBit, q);
    EXPECT_THROW(PhaseOracleEmulator em(phase), ValidationError);
}

}  // namespace
}  // namespace gradload
