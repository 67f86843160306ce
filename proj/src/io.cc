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

#include "gradload/io.h"

#include "gradload/errors.h"

namespace gradload {

using nlohmann::json;

json to_json(const QuantizedAmplitudes &q) {
    json bits = json::array();
    for (std::size_t i = 0; i < q.n(); i++) {
        json row = json::array();
        for (int j = 0; j < q.g(); j++) row.push_back(q.bit(i, j) ? 1 : 0);
        bits.push_back(std::move(row));
    }
    return json{{"n", q.n()},
                {"g", q.g()},
                {"shift", q.shift()},
                {"values", q.source().empty() ? q.values() : q.source()},
                {"bits", std::move(bits)}};
}

QuantizedAmplitudes quantized_from_json(const json &j) {
    try {
        std::size_t n = j.at("n").get<std::size_t>();
        int g = j.at("g").get<int>();
        int shift = j.value("shift", 0);
        const json &rows = j.at("bits");
        if (!rows.is_array() || rows.size() != n) {
            throw ValidationError("bits must hold n rows");
        }
        std::vector<std::uint8_t> bits;
        bits.reserve(n * static_cast<std::size_t>(std::max(g, 0)));
        for (const auto &row : rows) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(g)) {
                throw ValidationError("each bit row must hold g entries");
            }
            for (const auto &b : row) {
                int v = b.get<int>();
                if (v != 0 && v != 1) throw ValidationError("bits must be 0 or 1");
                bits.push_back(static_cast<std::uint8_t>(v));
            }
        }
        std::vector<double> values;
        if (j.contains("values")) values = j.at("values").get<std::vector<double>>();
        return QuantizedAmplitudes(n, g, shift, std::move(bits), std::move(values));
    } catch (const json::exception &e) {
        throw ValidationError(std::string("malformed amplitude file: ") + e.what());
    } catch (const DimensionMismatchError &e) {
        throw ValidationError(std::string("malformed amplitude file: ") + e.what());
    }
}

json to_json(const BitWeightProfile &p) {
    return json{{"g", p.g},
                {"n", p.n_elements},
                {"raw_frequencies", p.raw_frequencies},
                {"weighted", p.weighted},
                {"source", p.source == ProfileSource::kExact ? "exact" : "sampled"},
                {"shots", p.shots}};
}

BitWeightProfile profile_from_json(const json &j) {
    try {
        auto raw = j.at("raw_frequencies").get<std::vector<double>>();
        std::string src = j.at("source").get<std::string>();
        if (src != "exact" && src != "sampled") throw ValidationError("unknown profile source: " + src);
        auto source = src == "exact" ? ProfileSource::kExact : ProfileSource::kSampled;
        if (j.at("g").get<std::size_t>() != raw.size()) throw ValidationError("g does not match frequencies");
        return profile_from_frequencies(std::move(raw), j.at("n").get<std::size_t>(), source,
                                        j.value("shots", std::uint64_t{0}));
    } catch (const json::exception &e) {
        throw ValidationError(std::string("malformed profile: ") + e.what());
    }
}

std::string mode_name(StageTwoMode m) { return m == StageTwoMode::kAmplify ? "amplify" : "postselect"; }

StageTwoMode parse_mode(const std::string &name) {
    if (name == "amplify") return StageTwoMode::kAmplify;
    if (name == "postselect") return StageTwoMode::kPostselect;
    throw ValidationError("unknown mode: " + name);
}

json to_json(const RunReport &r) {
    json bounds{{"valid", r.bounds_valid}};
    if (r.bounds_valid) {
        bounds["L_bound"] = r.L_bound;
        bounds["L_bound_resolved"] = r.L_bound_resolved;
        bounds["Lp_bound"] = r.Lp_bound;
    } else {
        bounds["L_bound"] = nullptr;
        bounds["L_bound_resolved"] = nullptr;
        bounds["Lp_bound"] = nullptr;
        bounds["warning"] = r.bounds_warning;
    }
    return json{
        {"n", r.n},
        {"g", r.g},
        {"shift", r.shift},
        {"bootstrap", r.bootstrap},
        {"mode", mode_name(r.mode)},
        {"seed", r.seed},
        {"delta1", r.delta1},
        {"delta2", r.delta2},
        {"lambda1", r.lambda1},
        {"lambda2", r.lambda2},
        {"lambda1_prime", r.lambda1_prime},
        {"L1", r.L1},
        {"L2", r.L2},
        {"L", r.L},
        {"L1_prime", r.L1_prime},
        {"L_prime", r.L_prime},
        {"L_core", r.L_core},
        {"Lp_core", r.Lp_core},
        {"run",
         {{"lambda1_effective", r.lambda1_effective},
          {"lambda2_effective", r.lambda2_effective},
          {"stage1_rounds", r.stage1_rounds},
          {"stage2_rounds", r.stage2_rounds},
          {"success_probability", r.success_probability},
          {"postselect_success", r.postselect_success}}},
        {"fidelity_stage1", r.fidelity_stage1},
        {"final_fidelity", r.final_fidelity},
        {"alpha_fidelity", r.alpha_fidelity},
        {"queries",
         {{"phase_oracle", r.queries.phase_oracle},
          {"prep_calls", r.queries.prep_calls},
          {"stage1_invocations", r.queries.stage1_invocations}}},
        {"bounds", std::move(bounds)},
    };
}

json to_json(const ResourceTally &t) {
    json j{{"variant", t.variant ? json(variant_name(*t.variant)) : json(nullptr)},
           {"toffoli", t.toffoli},
           {"sqrt_swap", t.sqrt_swap},
           {"t_gates", t.t_gates},
           {"ancillas", t.ancillas},
           {"cnot", t.cnot}};
    j["toffoli_bound"] = t.toffoli_bound ? json(*t.toffoli_bound) : json(nullptr);
    return j;
}

std::string pretty(const json &j) { return j.dump(2) + "\n"; }

}  // namespace gradload
