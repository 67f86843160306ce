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

#include "gradload/sweep.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "gradload/bootstrap.h"
#include "gradload/errors.h"

namespace gradload {

SweepRow sweep_point(const SweepSeries &series, std::size_t n, const SweepConfig &config) {
    DistributionSpec spec{series.family, n, series.param, config.seed};
    AmplitudeVector alpha = generate(spec);
    const int g = config.g > 0 ? config.g : default_precision(n);
    QuantizedAmplitudes q = quantize(alpha, g, config.shift);

    SweepRow row;
    row.family = series.family;
    row.param = series.param;
    row.n = n;
    row.g = g;
    row.shift = q.shift();
    NormSummary nrm = q.norms();
    row.l1 = nrm.l1;
    row.l2 = nrm.l2;
    StageOverlaps ov = stage_overlaps(q);
    BitWeightProfile prof = average_bit_weights(q);
    row.lambda1 = ov.lambda1;
    row.lambda2 = ov.lambda2;
    row.lambda1_prime = lambda1_prime(q, prof).value;
    row.L_core = core_rounds(row.lambda1 * row.lambda2);
    row.Lp_core = core_rounds(row.lambda1_prime * row.lambda2);
    row.seed = config.seed;

    const double d1 = config.delta1 > 0 ? config.delta1 : default_delta1(g, alpha);
    try {
        row.L_bound = runtime_bounds(q, alpha, d1, config.delta2).L_bound;
        row.Lp_bound = runtime_bound_prime(q, alpha, d1, config.delta2, prof).bound;
    } catch (const BoundInvalidError &) {
        row.L_bound.reset();
        row.Lp_bound.reset();
    }

    if (config.simulate) {
        LoadOptions opt;
        opt.delta1 = d1;
        opt.delta2 = config.delta2;
        opt.bootstrap = true;
        opt.seed = config.seed;
        opt.alpha = alpha;
        LoadResult res = load_state(q, opt);
        row.fidelity = res.report.final_fidelity;
        row.queries = res.report.queries.phase_oracle;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    struct Job {
        std::size_t series;
        std::size_t n;
    };
    std::vector<Job> jobs;
    for (std::size_t s = 0; s < config.series.size(); s++) {
        validate(DistributionSpec{config.series[s].family, 2, config.series[s].param, config.seed});
        for (std::size_t n : config.sizes) {
            validate(DistributionSpec{config.series[s].family, n, config.series[s].param, config.seed});
            jobs.push_back(Job{s, n});
        }
    }
    std::vector<SweepRow> rows(jobs.size());
    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) return;
            try {
                rows[k] = sweep_point(config.series[jobs[k].series], jobs[k].n, config);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

namespace {

std::string num(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

}  // namespace

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kSweepColumns << "\n";
    for (const auto &r : rows) {
        out << family_name(r.family) << ',' << (family_has_param(r.family) ? num(r.param) : "") << ',' << r.n << ','
            << r.g << ',' << r.shift << ',' << num(r.l1) << ',' << num(r.l2) << ',' << num(r.lambda1) << ','
            << num(r.lambda2) << ',' << num(r.lambda1_prime) << ',' << r.L_core << ',' << r.Lp_core << ','
            << (r.L_bound ? num(*r.L_bound) : "") << ',' << (r.Lp_bound ? num(*r.Lp_bound) : "") << ','
            << (r.fidelity ? num(*r.fidelity) : "") << ',' << (r.queries ? std::to_string(*r.queries) : "") << ','
            << r.seed << "\n";
    }
}

}  // namespace gradload
