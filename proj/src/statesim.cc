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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gradload/errors.h"

namespace gradload {

namespace {

std::size_t product(const std::vector<std::size_t> &dims) {
    std::size_t p = 1;
    for (auto d : dims) {
        if (d == 0) {
            throw ValidationError("register dimension must be positive");
        }
        p *= d;
    }
    return p;
}

void check_same_layout(const StateVector &a, const StateVector &b) {
    if (a.dims() != b.dims()) {
        throw DimensionMismatchError("states have different register layouts");
    }
}

}  // namespace

StateVector::StateVector(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    amps_.assign(product(dims_), cplx(0, 0));
    amps_[0] = 1;
}

StateVector::StateVector(std::vector<std::size_t> dims, std::vector<cplx> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    if (amps_.size() != product(dims_)) {
        throw DimensionMismatchError("amplitude count does not match register dims");
    }
}

StateVector StateVector::basis(std::vector<std::size_t> dims, const std::vector<std::size_t> &digits) {
    StateVector s(std::move(dims));
    s.amps_[0] = 0;
    s.amps_[s.index(digits)] = 1;
    return s;
}

StateVector StateVector::from_real(std::vector<std::size_t> dims, const std::vector<double> &values) {
    return StateVector(std::move(dims), std::vector<cplx>(values.begin(), values.end()));
}

std::size_t StateVector::index(const std::vector<std::size_t> &digits) const {
    if (digits.size() != dims_.size()) {
        throw DimensionMismatchError("digit tuple length does not match register count");
    }
    std::size_t k = 0;
    for (std::size_t r = 0; r < dims_.size(); r++) {
        if (digits[r] >= dims_[r]) {
            throw DimensionMismatchError("digit exceeds register dimension");
        }
        k = k * dims_[r] + digits[r];
    }
    return k;
}

double StateVector::norm() const {
    double s = 0;
    for (auto a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

cplx overlap(const StateVector &a, const StateVector &b) {
    check_same_layout(a, b);
    cplx s = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

double fidelity(const StateVector &a, const StateVector &b) { return std::norm(overlap(a, b)); }

StateVector normalized(const StateVector &s) {
    double n = s.norm();
    if (!(n > 0)) {
        throw ZeroVectorError("cannot normalize a zero state");
    }
    std::vector<cplx> out(s.amplitudes());
    for (auto &a : out) {
        a /= n;
    }
    return StateVector(s.dims(), std::move(out));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<std::size_t> dims(a.dims());
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    std::vector<cplx> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b.size(); j++) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(dims), std::move(out));
}

double distance(const StateVector &a, const StateVector &b) {
    check_same_layout(a, b);
    double s = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        s += std::norm(a[k] - b[k]);
    }
    return std::sqrt(s);
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw DimensionMismatchError("matrix data size mismatch");
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (cols_ != other.rows_) {
        throw DimensionMismatchError("matrix product shape mismatch");
    }
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            cplx a = (*this)(r, k);
            if (a == cplx(0, 0)) {
                continue;
            }
            for (std::size_t c = 0; c < other.cols_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::operator-(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatchError("matrix difference shape mismatch");
    }
    Matrix out(*this);
    for (std::size_t k = 0; k < data_.size(); k++) {
        out.data_[k] -= other.data_[k];
    }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Matrix Matrix::kron(const Matrix &other) const {
    Matrix out(rows_ * other.rows_, cols_ * other.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            for (std::size_t r2 = 0; r2 < other.rows_; r2++) {
                for (std::size_t c2 = 0; c2 < other.cols_; c2++) {
                    out(r * other.rows_ + r2, c * other.cols_ + c2) = (*this)(r, c) * other(r2, c2);
                }
            }
        }
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatchError("matrix comparison shape mismatch");
    }
    double m = 0;
    for (std::size_t k = 0; k < data_.size(); k++) {
        m = std::max(m, std::abs(data_[k] - other.data_[k]));
    }
    return m;
}

bool Matrix::is_unitary(double tol) const {
    if (rows_ != cols_) {
        return false;
    }
    return (adjoint() * *this).max_abs_diff(identity(rows_)) <= tol;
}

StateVector apply_unitary(const StateVector &state, const Matrix &u, std::size_t target) {
    const auto &dims = state.dims();
    if (target >= dims.size()) {
        throw DimensionMismatchError("target register index out of range");
    }
    std::size_t d = dims[target];
    if (u.rows() != d || u.cols() != d) {
        throw DimensionMismatchError("operator dimension does not match target register");
    }
    std::size_t inner = 1;
    for (std::size_t r = target + 1; r < dims.size(); r++) {
        inner *= dims[r];
    }
    std::size_t outer = state.size() / (d * inner);
    const auto &in = state.amplitudes();
    std::vector<cplx> out(state.size());
    std::vector<cplx> col(d);
    for (std::size_t o = 0; o < outer; o++) {
        for (std::size_t i = 0; i < inner; i++) {
            std::size_t base = o * d * inner + i;
            for (std::size_t k = 0; k < d; k++) {
                col[k] = in[base + k * inner];
            }
            for (std::size_t r = 0; r < d; r++) {
                cplx s = 0;
                for (std::size_t k = 0; k < d; k++) {
                    s += u(r, k) * col[k];
                }
                out[base + r * inner] = s;
            }
        }
    }
    return StateVector(dims, std::move(out));
}

Matrix to_matrix(const LinearOp &op, const std::vector<std::size_t> &dims) {
    std::size_t n = product(dims);
    Matrix m(n, n);
    for (std::size_t c = 0; c < n; c++) {
        std::vector<cplx> e(n);
        e[c] = 1;
        StateVector col = op(StateVector(dims, std::move(e)));
        if (col.size() != n) {
            throw DimensionMismatchError("operator changed the state size");
        }
        for (std::size_t r = 0; r < n; r++) {
            m(r, c) = col[r];
        }
    }
    return m;
}

StatePrep::StatePrep(StateVector target) : target_(normalized(target)) {
    const auto &s = target_.amplitudes();
    double a0 = std::abs(s[0]);
    phase_ = a0 > 0 ? s[0] / a0 : cplx(1, 0);
    v_.resize(s.size());
    v_norm_sq_ = 0;
    for (std::size_t k = 0; k < s.size(); k++) {
        v_[k] = (k == 0 ? cplx(1, 0) : cplx(0, 0)) - std::conj(phase_) * s[k];
        v_norm_sq_ += std::norm(v_[k]);
    }
}

StateVector StatePrep::apply(const StateVector &x) const {
    if (x.size() != v_.size()) {
        throw DimensionMismatchError("state size does not match preparation");
    }
    std::vector<cplx> out(x.amplitudes());
    if (v_norm_sq_ > 1e-30) {
        cplx ip = 0;
        for (std::size_t k = 0; k < out.size(); k++) {
            ip += std::conj(v_[k]) * out[k];
        }
        cplx f = 2.0 * ip / v_norm_sq_;
        for (std::size_t k = 0; k < out.size(); k++) {
            out[k] -= f * v_[k];
        }
    }
    for (auto &a : out) {
        a *= phase_;
    }
    return StateVector(x.dims(), std::move(out));
}

StateVector StatePrep::apply_adjoint(const StateVector &x) const {
    // The reflection is Hermitian, so only the global phase needs undoing.
    std::vector<cplx> scaled(x.amplitudes());
    for (auto &a : scaled) {
        a *= std::conj(phase_) * std::conj(phase_);
    }
    return apply(StateVector(x.dims(), std::move(scaled)));
}

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<GateInfo, 11> kGates = {{
    {GateKind::kH, "H", 1},
    {GateKind::kX, "X", 1},
    {GateKind::kZ, "Z", 1},
    {GateKind::kT, "T", 1},
    {GateKind::kTdg, "T_DAG", 1},
    {GateKind::kCnot, "CNOT", 2},
    {GateKind::kCs, "CS", 2},
    {GateKind::kToffoli, "TOFFOLI", 3},
    {GateKind::kFredkin, "FREDKIN", 3},
    {GateKind::kSqrtSwap, "SQRT_SWAP", 2},
    {GateKind::kSqrtCnot, "SQRT_CNOT", 2},
}};

const GateInfo &info(GateKind kind) {
    for (const auto &g : kGates) {
        if (g.kind == kind) {
            return g;
        }
    }
    throw ValidationError("unknown gate kind");
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_from_name(std::string_view name) {
    for (const auto &g : kGates) {
        if (g.name == name) {
            return g.kind;
        }
    }
    throw ValidationError("unknown gate name: " + std::string(name));
}

std::size_t gate_arity(GateKind kind) { return info(kind).arity; }

bool gate_is_classical(GateKind kind) {
    return kind == GateKind::kX || kind == GateKind::kCnot || kind == GateKind::kToffoli ||
           kind == GateKind::kFredkin;
}

Matrix gate_matrix(GateKind kind) {
    using std::numbers::pi;
    const double r = 1 / std::sqrt(2.0);
    const cplx p(0.5, 0.5);
    const cplx m(0.5, -0.5);
    const cplx t = std::polar(1.0, pi / 4);
    switch (kind) {
        case GateKind::kH:
            return Matrix(2, 2, {r, r, r, -r});
        case GateKind::kX:
            return Matrix(2, 2, {0, 1, 1, 0});
        case GateKind::kZ:
            return Matrix(2, 2, {1, 0, 0, -1});
        case GateKind::kT:
            return Matrix(2, 2, {1, 0, 0, t});
        case GateKind::kTdg:
            return Matrix(2, 2, {1, 0, 0, std::conj(t)});
        case GateKind::kCnot: {
            Matrix u = Matrix::identity(4);
            u(2, 2) = u(3, 3) = 0;
            u(2, 3) = u(3, 2) = 1;
            return u;
        }
        case GateKind::kCs: {
            Matrix u = Matrix::identity(4);
            u(3, 3) = cplx(0, 1);
            return u;
        }
        case GateKind::kToffoli: {
            Matrix u = Matrix::identity(8);
            u(6, 6) = u(7, 7) = 0;
            u(6, 7) = u(7, 6) = 1;
            return u;
        }
        case GateKind::kFredkin: {
            Matrix u = Matrix::identity(8);
            u(5, 5) = u(6, 6) = 0;
            u(5, 6) = u(6, 5) = 1;
            return u;
        }
        case GateKind::kSqrtSwap: {
            Matrix u = Matrix::identity(4);
            u(1, 1) = u(2, 2) = p;
            u(1, 2) = u(2, 1) = m;
            return u;
        }
        case GateKind::kSqrtCnot: {
            Matrix u = Matrix::identity(4);
            u(2, 2) = u(3, 3) = p;
            u(2, 3) = u(3, 2) = m;
            return u;
        }
    }
    throw ValidationError("unknown gate kind");
}

std::size_t Circuit::add_wire(std::string name, bool ancilla) {
    if (name.empty() || name.find_first_of(", \t\n#") != std::string::npos) {
        throw ValidationError("invalid wire name: '" + name + "'");
    }
    if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
        throw ValidationError("duplicate wire name: " + name);
    }
    names_.push_back(std::move(name));
    ancilla_.push_back(ancilla);
    return names_.size() - 1;
}

std::size_t Circuit::wire(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw ValidationError("undeclared wire: " + std::string(name));
    }
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Circuit::ancilla_count() const {
    return static_cast<std::size_t>(std::count(ancilla_.begin(), ancilla_.end(), true));
}

void Circuit::append(GateKind kind, std::vector<std::size_t> wires) {
    if (wires.size() != gate_arity(kind)) {
        throw ValidationError("wrong wire count for gate " + std::string(gate_name(kind)));
    }
    for (std::size_t k = 0; k < wires.size(); k++) {
        if (wires[k] >= names_.size()) {
            throw ValidationError("gate references an undeclared wire");
        }
        for (std::size_t l = 0; l < k; l++) {
            if (wires[l] == wires[k]) {
                throw ValidationError("gate repeats a wire");
            }
        }
    }
    gates_.push_back(Gate{kind, std::move(wires)});
}

void Circuit::extend(const Circuit &other) {
    std::vector<std::size_t> map(other.num_wires());
    for (std::size_t w = 0; w < other.num_wires(); w++) {
        map[w] = wire(other.wire_name(w));
    }
    for (const auto &g : other.gates()) {
        std::vector<std::size_t> ws;
        for (auto w : g.wires) {
            ws.push_back(map[w]);
        }
        append(g.kind, std::move(ws));
    }
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate &g) { return g.kind == kind; }));
}

Circuit Circuit::prefix(std::size_t n) const {
    Circuit out;
    out.names_ = names_;
    out.ancilla_ = ancilla_;
    out.gates_.assign(gates_.begin(), gates_.begin() + std::min(n, gates_.size()));
    return out;
}

std::string Circuit::dump() const {
    std::ostringstream out;
    out << "# wires ";
    for (std::size_t w = 0; w < names_.size(); w++) {
        out << (w ? "," : "") << names_[w] << (ancilla_[w] ? "*" : "");
    }
    out << "\n";
    for (const auto &g : gates_) {
        out << gate_name(g.kind) << ' ';
        for (std::size_t k = 0; k < g.wires.size(); k++) {
            out << (k ? "," : "") << names_[g.wires[k]];
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> split_commas(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(',', start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
    Circuit c;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        std::string_view body(line);
        body.remove_prefix(first);
        while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) {
            body.remove_suffix(1);
        }
        if (body.starts_with("#")) {
            constexpr std::string_view tag = "# wires ";
            if (body.starts_with(tag)) {
                for (auto &name : split_commas(body.substr(tag.size()))) {
                    bool anc = !name.empty() && name.back() == '*';
                    if (anc) {
                        name.pop_back();
                    }
                    c.add_wire(name, anc);
                }
            }
            continue;
        }
        auto sp = body.find(' ');
        if (sp == std::string_view::npos) {
            throw ValidationError("malformed gate line: " + line);
        }
        GateKind kind = gate_from_name(body.substr(0, sp));
        std::vector<std::size_t> wires;
        for (const auto &name : split_commas(body.substr(sp + 1))) {
            auto it = std::find(c.names_.begin(), c.names_.end(), name);
            wires.push_back(it == c.names_.end() ? c.add_wire(name) : static_cast<std::size_t>(it - c.names_.begin()));
        }
        c.append(kind, std::move(wires));
    }
    return c;
}

namespace {

void apply_gate(std::vector<cplx> &amps, const Gate &g, const Matrix &u) {
    const std::size_t k = g.wires.size();
    const std::size_t dim = std::size_t{1} << k;
    std::size_t mask = 0;
    for (auto w : g.wires) {
        mask |= std::size_t{1} << w;
    }
    // offsets[l] is the index displacement for local basis state l, with the
    // first listed wire as the most significant local bit.
    std::array<std::size_t, 8> offsets{};
    for (std::size_t l = 0; l < dim; l++) {
        std::size_t off = 0;
        for (std::size_t b = 0; b < k; b++) {
            if ((l >> (k - 1 - b)) & 1) {
                off |= std::size_t{1} << g.wires[b];
            }
        }
        offsets[l] = off;
    }
    std::array<cplx, 8> buf{};
    for (std::size_t base = 0; base < amps.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (std::size_t l = 0; l < dim; l++) {
            buf[l] = amps[base + offsets[l]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            cplx s = 0;
            for (std::size_t l = 0; l < dim; l++) {
                s += u(r, l) * buf[l];
            }
            amps[base + offsets[r]] = s;
        }
    }
}

}  // namespace

StateVector simulate_circuit(const Circuit &c, const StateVector &input) {
    if (c.num_wires() > kMaxSimulatedWires) {
        throw CapExceededError("circuit has " + std::to_string(c.num_wires()) + " wires; cap is " +
                               std::to_string(kMaxSimulatedWires));
    }
    if (input.size() != (std::size_t{1} << c.num_wires())) {
        throw DimensionMismatchError("input state size is not 2^wires");
    }
    std::vector<cplx> amps(input.amplitudes());
    std::array<Matrix, 11> cache;
    std::array<bool, 11> have{};
    for (const auto &g : c.gates()) {
        auto slot = static_cast<std::size_t>(g.kind);
        if (!have[slot]) {
            cache[slot] = gate_matrix(g.kind);
            have[slot] = true;
        }
        apply_gate(amps, g, cache[slot]);
    }
    return StateVector(input.dims(), std::move(amps));
}

std::vector<bool> evaluate_classical(const Circuit &c, std::vector<bool> bits) {
    if (bits.size() != c.num_wires()) {
        throw DimensionMismatchError("bit count does not match wire count");
    }
    for (const auto &g : c.gates()) {
        const auto &w = g.wires;
        switch (g.kind) {
            case GateKind::kX:
                bits[w[0]] = !bits[w[0]];
                break;
            case GateKind::kCnot:
                if (bits[w[0]]) bits[w[1]] = !bits[w[1]];
                break;
            case GateKind::kToffoli:
                if (bits[w[0]] && bits[w[1]]) bits[w[2]] = !bits[w[2]];
                break;
            case GateKind::kFredkin:
                if (bits[w[0]]) {
                    bool tmp = bits[w[1]];
                    bits[w[1]] = bits[w[2]];
                    bits[w[2]] = tmp;
                }
                break;
            default:
                throw ValidationError("gate " + std::string(gate_name(g.kind)) + " is not classical");
        }
    }
    return bits;
}

Circuit sqrt_cnot_decomposition() {
    Circuit c;
    auto ctrl = c.add_wire("c");
    auto tgt = c.add_wire("t");
    c.append(GateKind::kH, {tgt});
    c.append(GateKind::kT, {ctrl});
    c.append(GateKind::kT, {tgt});
    c.append(GateKind::kCnot, {ctrl, tgt});
    c.append(GateKind::kTdg, {tgt});
    c.append(GateKind::kCnot, {ctrl, tgt});
    c.append(GateKind::kH, {tgt});
    return c;
}

}  // namespace gradload
