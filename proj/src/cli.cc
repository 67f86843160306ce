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

#include "gradload/cli.h"

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "gradload/amplify.h"
#include "gradload/bootstrap.h"
#include "gradload/distributions.h"
#include "gradload/errors.h"
#include "gradload/gradient.h"
#include "gradload/io.h"
#include "gradload/oracles.h"
#include "gradload/resources.h"
#include "gradload/sweep.h"

namespace gradload {

namespace {

struct SourceOptions {
    std::string dist;
    std::size_t n = 0;
    double k = 0;
    double sigma = 0;
    std::uint64_t seed = 0;
    int g = 0;
    bool shift = false;
    std::string input;
};

void add_source_options(CLI::App *cmd, SourceOptions &o) {
    cmd->add_option("--dist", o.dist, "distribution family");
    cmd->add_option("--n", o.n, "number of amplitudes");
    cmd->add_option("--k", o.k, "powerlaw exponent");
    cmd->add_option("--sigma", o.sigma, "normal standard deviation");
    cmd->add_option("--seed", o.seed, "seed (random family, sampling, postselection)");
    cmd->add_option("--g", o.g, "bit precision (0: min(16, ceil(log2 N) + 4))");
    cmd->add_flag("--shift", o.shift, "apply the dynamic-range shift");
    cmd->add_option("--input", o.input, "amplitude JSON file instead of --dist");
}

struct Source {
    QuantizedAmplitudes q;
    AmplitudeVector alpha;
};

Source load_source(const SourceOptions &o) {
    if (!o.input.empty()) {
        if (!o.dist.empty()) throw ValidationError("use either --input or --dist");
        std::ifstream f(o.input);
        if (!f) throw ValidationError("cannot read " + o.input);
        nlohmann::json j;
        try {
            f >> j;
        } catch (const nlohmann::json::exception &e) {
            throw ValidationError(std::string("malformed JSON: ") + e.what());
        }
        QuantizedAmplitudes q = quantized_from_json(j);
        return Source{q, q.alpha()};
    }
    if (o.dist.empty()) throw ValidationError("--dist or --input is required");
    DistributionSpec spec;
    spec.family = parse_family(o.dist);
    spec.n = o.n;
    spec.seed = o.seed;
    if (spec.family == Family::kPowerlaw) spec.param = o.k;
    if (spec.family == Family::kNormal) spec.param = o.sigma;
    AmplitudeVector alpha = generate(spec);
    int g = o.g > 0 ? o.g : default_precision(spec.n);
    if (o.g < 0) throw ValidationError("--g must be positive");
    return Source{quantize(alpha, g, o.shift), alpha};
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write " + path);
    f << text;
}

std::vector<std::string> split_list(const std::vector<std::string> &items) {
    std::vector<std::string> out;
    for (const auto &item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) out.push_back(part);
        }
    }
    return out;
}

std::string resources_table(const std::vector<int> &gs) {
    std::ostringstream s;
    auto row = [&](const std::string &metric, const std::string &variant, auto value) {
        s << std::left << std::setw(14) << metric << std::setw(12) << variant;
        for (int g : gs) s << std::right << std::setw(8) << value(g);
        s << "\n";
    };
    s << std::left << std::setw(14) << "metric" << std::setw(12) << "variant";
    for (int g : gs) s << std::right << std::setw(8) << ("g=" + std::to_string(g));
    s << "\n";
    for (Variant v : all_variants()) {
        row("toffoli", variant_name(v), [&](int g) { return tally_variant(v, g).toffoli; });
    }
    row("toffoli_bound", "ours_v2", [&](int g) { return *tally_variant(Variant::kOursV2, g).toffoli_bound; });
    row("sqrt_swap", "sanders", [&](int g) { return tally_variant(Variant::kSandersV1, g).sqrt_swap; });
    row("sqrt_swap", "ours", [&](int g) { return tally_variant(Variant::kOursV1, g).sqrt_swap; });
    for (Variant v : all_variants()) {
        row("ancillas", variant_name(v), [&](int g) { return tally_variant(v, g).ancillas; });
    }
    return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gradient-state black-box state preparation toolkit", "gradload"};
    app.require_subcommand(1);

    SourceOptions qo;
    std::string q_out;
    auto *quant = app.add_subcommand("quantize", "write an amplitude JSON file");
    add_source_options(quant, qo);
    quant->add_option("--out", q_out, "output path (default stdout)");

    SourceOptions so;
    double s_delta1 = 0, s_delta2 = kDefaultDelta2;
    bool s_bootstrap = false;
    std::string s_mode = "amplify", s_out, s_sampling = "with";
    std::uint64_t s_shots = 0;
    auto *sim = app.add_subcommand("simulate", "run the two-stage loading protocol");
    add_source_options(sim, so);
    sim->add_option("--delta1", s_delta1, "stage-1 failure amplitude (0: precision-matched default)");
    sim->add_option("--delta2", s_delta2, "stage-2 failure amplitude");
    sim->add_flag("--bootstrap", s_bootstrap, "start from the bit-weight optimized state");
    sim->add_option("--mode", s_mode, "stage-2 mode")->check(CLI::IsMember({"amplify", "postselect"}));
    sim->add_option("--profile-shots", s_shots, "estimate the bootstrap profile from this many shots (0: exact)");
    sim->add_option("--sampling", s_sampling, "sampling scheme")->check(CLI::IsMember({"with", "without"}));
    sim->add_option("--out", s_out, "output path (default stdout)");

    std::vector<std::string> w_family{"delta", "uniform", "triangle", "random", "sine"};
    std::vector<double> w_params;
    std::vector<std::size_t> w_sizes;
    int w_g = 0;
    bool w_no_shift = false, w_simulate = false;
    double w_delta1 = 0, w_delta2 = kDefaultDelta2;
    std::uint64_t w_seed = 0;
    unsigned w_threads = 0;
    std::string w_out;
    auto *sweep = app.add_subcommand("sweep", "tabulate round counts across N as CSV");
    sweep->add_option("--family", w_family, "families (comma separated or repeated)");
    sweep->add_option("--param", w_params, "parameters for powerlaw/normal families")->delimiter(',');
    sweep->add_option("--n", w_sizes, "sizes (default 2^6..2^14)")->delimiter(',');
    sweep->add_option("--g", w_g, "bit precision (0: per-size default)");
    sweep->add_flag("--no-shift", w_no_shift, "disable the dynamic-range shift");
    sweep->add_flag("--simulate", w_simulate, "also simulate the bootstrapped protocol");
    sweep->add_option("--delta1", w_delta1, "stage-1 failure amplitude (0: default)");
    sweep->add_option("--delta2", w_delta2, "stage-2 failure amplitude");
    sweep->add_option("--seed", w_seed, "seed");
    sweep->add_option("--threads", w_threads, "worker threads (0: all cores)");
    sweep->add_option("--out", w_out, "output path (default stdout)");

    SourceOptions eo;
    std::uint64_t e_shots = 1024;
    std::string e_sampling = "with", e_out;
    auto *est = app.add_subcommand("estimate", "estimate bit weights by sampling the digit oracle");
    add_source_options(est, eo);
    est->add_option("--shots", e_shots, "number of sampled indices");
    est->add_option("--sampling", e_sampling, "sampling scheme")->check(CLI::IsMember({"with", "without"}));
    est->add_option("--out", e_out, "output path (default stdout)");

    std::vector<int> r_g;
    bool r_json = false;
    auto *res = app.add_subcommand("resources", "per-round gate and ancilla counts");
    res->add_option("--g", r_g, "precisions (default 2,4,8,16,32,64)")->delimiter(',');
    res->add_flag("--json", r_json, "emit JSON");

    std::string c_what, c_out;
    int c_q = -1, c_g = -1;
    bool c_no_opt = false;
    auto *circ = app.add_subcommand("circuit", "dump a primitive circuit");
    circ->add_option("--what", c_what, "permutation | gradient | comparator")
        ->required()
        ->check(CLI::IsMember({"permutation", "gradient", "comparator"}));
    circ->add_option("--q", c_q, "address qubits (permutation)");
    circ->add_option("--g", c_g, "precision (gradient, comparator)");
    circ->add_flag("--no-optimize", c_no_opt, "keep light-cone redundant swaps");
    circ->add_option("--out", c_out, "output path (default stdout)");

    std::vector<std::string> argv_store{"gradload"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (*quant) {
            Source s = load_source(qo);
            emit(pretty(to_json(s.q)), q_out, out);
            return kExitOk;
        }
        if (*sim) {
            Source s = load_source(so);
            LoadOptions opt;
            opt.delta1 = s_delta1;
            opt.delta2 = s_delta2;
            opt.bootstrap = s_bootstrap;
            opt.mode = parse_mode(s_mode);
            opt.seed = so.seed;
            opt.alpha = s.alpha;
            BitWeightProfile prof;
            if (s_shots > 0) {
                OracleModel digit(OracleKind::kDigit, s.q);
                prof = estimate_bit_weights(digit, s_shots, so.seed,
                                            s_sampling == "with" ? SamplingMode::kWithReplacement
                                                                 : SamplingMode::kWithoutReplacement);
                opt.profile = &prof;
            }
            LoadResult r = load_state(s.q, opt);
            emit(pretty(to_json(r.report)), s_out, out);
            if (!r.report.bounds_valid) {
                err << "warning: " << r.report.bounds_warning << "\n";
                return kExitBoundInvalid;
            }
            return kExitOk;
        }
        if (*sweep) {
            SweepConfig cfg;
            for (const auto &name : split_list(w_family)) {
                Family f = parse_family(name);
                if (family_has_param(f)) {
                    if (w_params.empty()) throw ValidationError(name + " needs --param");
                    for (double p : w_params) cfg.series.push_back(SweepSeries{f, p});
                } else {
                    cfg.series.push_back(SweepSeries{f, 0});
                }
            }
            if (!w_sizes.empty()) cfg.sizes = w_sizes;
            cfg.g = w_g;
            cfg.shift = !w_no_shift;
            cfg.simulate = w_simulate;
            cfg.delta1 = w_delta1;
            cfg.delta2 = w_delta2;
            cfg.seed = w_seed;
            cfg.threads = w_threads;
            auto rows = run_sweep(cfg);
            std::ostringstream csv;
            write_csv(csv, rows);
            emit(csv.str(), w_out, out);
            return kExitOk;
        }
        if (*est) {
            Source s = load_source(eo);
            OracleModel digit(OracleKind::kDigit, s.q);
            auto mode = e_sampling == "with" ? SamplingMode::kWithReplacement : SamplingMode::kWithoutReplacement;
            BitWeightProfile p = estimate_bit_weights(digit, e_shots, eo.seed, mode);
            emit(pretty(to_json(p)), e_out, out);
            return kExitOk;
        }
        if (*res) {
            if (r_g.empty()) r_g = {2, 4, 8, 16, 32, 64};
            if (r_json) {
                nlohmann::json j = nlohmann::json::array();
                for (int g : r_g) {
                    nlohmann::json col{{"g", g}, {"variants", nlohmann::json::array()}};
                    for (Variant v : all_variants()) col["variants"].push_back(to_json(tally_variant(v, g)));
                    j.push_back(std::move(col));
                }
                out << pretty(j);
            } else {
                out << resources_table(r_g);
            }
            return kExitOk;
        }
        if (*circ) {
            Circuit c;
            if (c_what == "permutation") {
                if (c_q < 0) throw ValidationError("--q is required for the permutation network");
                c = build_permutation_network(c_q, !c_no_opt);
            } else if (c_what == "gradient") {
                if (c_g < 1) throw ValidationError("--g is required for the gradient circuit");
                c = build_gradient_circuit(c_g).circuit;
            } else {
                if (c_g < 1) throw ValidationError("--g is required for the comparator");
                c = build_comparator_circuit(c_g);
            }
            emit(c.dump(), c_out, out);
            return kExitOk;
        }
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace gradload
