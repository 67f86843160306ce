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

#ifndef GRADLOAD_SWEEP_H
#define GRADLOAD_SWEEP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "gradload/amplify.h"
#include "gradload/distributions.h"

namespace gradload {

inline constexpr std::string_view kSweepColumns =
    "family,param,N,g,shift,l1,l2,lambda1,lambda2,lambda1_prime,L_core,Lp_core,L_bound,Lp_bound,fidelity,queries,seed";

struct SweepSeries {
    Family family = Family::kUniform;
    double param = 0;
};

struct SweepConfig {
    std::vector<SweepSeries> series;
    std::vector<std::size_t> sizes = default_sweep_sizes();
    /// 0 picks default_precision per size.
    int g = 0;
    bool shift = true;
    /// Also run the bootstrapped two-stage protocol at every point.
    bool simulate = false;
    double delta1 = 0;
    double delta2 = kDefaultDelta2;
    std::uint64_t seed = 0;
    /// 0 uses the hardware concurrency.
    unsigned threads = 0;
};

/// One CSV row. l1 and l2 are norms of the quantized values A; bound,
/// fidelity and query cells are empty when not available.
struct SweepRow {
    Family family = Family::kUniform;
    double param = 0;
    std::size_t n = 0;
    int g = 0;
    int shift = 0;
    double l1 = 0;
    double l2 = 0;
    double lambda1 = 0;
    double lambda2 = 0;
    double lambda1_prime = 0;
    int L_core = 0;
    int Lp_core = 0;
    std::optional<double> L_bound;
    std::optional<double> Lp_bound;
    std::optional<double> fidelity;
    std::optional<std::uint64_t> queries;
    std::uint64_t seed = 0;
};

SweepRow sweep_point(const SweepSeries &series, std::size_t n, const SweepConfig &config);

/// Rows ordered by series, then by N as listed, whatever order workers finish in.
std::vector<SweepRow> run_sweep(const SweepConfig &config);

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);

}  // namespace gradload

#endif
