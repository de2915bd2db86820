// Copyright 2026 The cghz Authors
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

#include "cghz/cli.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <locale>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cghz/cavity.hpp"
#include "cghz/error.hpp"
#include "cghz/noise.hpp"
#include "cghz/protocol.hpp"
#include "cghz/report.hpp"
#include "cghz/states.hpp"

namespace cghz::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(12);
    os << x;
    return os.str();
}

void check_format(const RunConfig &cfg) {
    if (cfg.format != "json" && cfg.format != "csv") {
        throw InvalidArgument("format must be json or csv");
    }
}

void check_trials(const RunConfig &cfg) {
    if (cfg.trials == 0) {
        throw InvalidArgument("--trials must be at least 1");
    }
}

// Rows of equal-keyed objects as a JSON array or a CSV table.
void emit_table(const RunConfig &cfg, const std::vector<std::string> &columns,
                const std::vector<std::vector<double>> &rows, std::ostream &out) {
    if (cfg.format == "csv") {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << columns[c];
        }
        out << '\n';
        for (const auto &row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << num(row[c]);
            }
            out << '\n';
        }
        return;
    }
    Json arr = Json::array();
    for (const auto &row : rows) {
        Json obj;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            obj[columns[c]] = row[c];
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

const std::vector<std::string> kNoiseColumns = {
    "n", "m", "eta_p", "eta_a", "p_error", "sigma",
    "trials", "analytic", "estimate", "std_error"};

double wrap_phase(double x) {
    const double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(x, two_pi);
    if (w < 0.0) {
        w += two_pi;
    }
    return w >= two_pi ? 0.0 : w;
}

} // namespace

int cmd_analyze(const RunConfig &cfg, std::ostream &out) {
    check_format(cfg);
    if (cfg.sigma.size() > 1) {
        throw InvalidArgument("analyze takes at most one --sigma");
    }
    const CghzLabel label = CghzLabel::parse(cfg.state, cfg.n, cfg.m);
    const FaradayPhases ph =
        cfg.sigma.empty() ? ideal_phases() : detuned_phases(cfg.sigma.front());
    const AnalysisReport report = analyze(label, ph, cfg.seed);
    if (cfg.format == "csv") {
        out << report_csv(report);
    } else {
        out << report_json(report) << '\n';
    }
    return report.correct() ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    check_format(cfg);
    check_trials(cfg);
    const auto labels = enumerate_labels(cfg.n, cfg.m);
    // Fail fast on the qubit cap before spawning trials.
    (void)cghz(labels.front());

    const auto total = static_cast<std::int64_t>(labels.size() * cfg.trials);
    std::vector<std::optional<AnalysisReport>> failures(static_cast<std::size_t>(total));
    std::vector<char> ok(static_cast<std::size_t>(total), 0);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < total; ++t) {
        const auto idx = static_cast<std::size_t>(t);
        const auto &label = labels[idx / cfg.trials];
        const std::uint64_t seed = cfg.seed + idx % cfg.trials;
        try {
            auto report = analyze(label, ideal_phases(), seed);
            ok[idx] = report.correct() ? 1 : 0;
            if (!ok[idx]) {
                failures[idx] = std::move(report);
            }
        } catch (...) {
#pragma omp critical(cghz_verify_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    std::uint64_t correct = 0;
    std::vector<std::uint64_t> per_label(labels.size(), 0);
    for (std::size_t i = 0; i < ok.size(); ++i) {
        per_label[i / cfg.trials] += static_cast<std::uint64_t>(ok[i]);
        correct += static_cast<std::uint64_t>(ok[i]);
    }
    const auto runs = static_cast<std::uint64_t>(total);

    if (cfg.format == "csv") {
        out << "label,trials,correct\n";
        for (std::size_t l = 0; l < labels.size(); ++l) {
            out << labels[l].text() << ',' << cfg.trials << ',' << per_label[l] << '\n';
        }
        for (const auto &f : failures) {
            if (f) {
                out << report_csv(*f);
            }
        }
    } else {
        Json j;
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        j["trials"] = cfg.trials;
        j["seed"] = cfg.seed;
        j["total"] = runs;
        j["correct"] = correct;
        j["labels"] = Json::array();
        for (std::size_t l = 0; l < labels.size(); ++l) {
            j["labels"].push_back(Json{{"label", labels[l].text()},
                                       {"trials", cfg.trials},
                                       {"correct", per_label[l]}});
        }
        j["failures"] = Json::array();
        for (const auto &f : failures) {
            if (f) {
                j["failures"].push_back(Json::parse(report_json(*f)));
            }
        }
        out << j.dump(2) << '\n';
    }
    return correct == runs ? kExitOk : kExitFailure;
}

int cmd_noise(const RunConfig &cfg, std::ostream &out) {
    check_format(cfg);
    check_trials(cfg);
    validate_shape(cfg.n, cfg.m);
    std::vector<std::vector<double>> rows;
    for (double ep : cfg.eta_p) {
        for (double ea : cfg.eta_a) {
            for (double pe : cfg.p_error) {
                const NoiseParams p{ep, ea, pe};
                const double analytic = analytic_success(cfg.n, cfg.m, p);
                const TrialStats st = mc_success(cfg.n, cfg.m, p, cfg.trials, cfg.seed);
                rows.push_back({double(cfg.n), double(cfg.m), ep, ea, pe, 0.0,
                                double(cfg.trials), analytic, st.estimate,
                                st.std_error});
            }
        }
    }
    emit_table(cfg, kNoiseColumns, rows, out);
    return kExitOk;
}

int cmd_sigma_sweep(const RunConfig &cfg, std::ostream &out) {
    check_format(cfg);
    check_trials(cfg);
    validate_shape(cfg.n, cfg.m);
    if (cfg.sigma.empty()) {
        throw InvalidArgument("sigma-sweep needs at least one --sigma");
    }
    if (cfg.eta_p.size() != 1 || cfg.eta_a.size() != 1) {
        throw InvalidArgument("sigma-sweep takes a single --eta-p and --eta-a");
    }
    std::vector<std::vector<double>> rows;
    for (double s : cfg.sigma) {
        const TrialStats st = error_prob_sigma(cfg.n, cfg.m, s, cfg.trials, cfg.seed);
        const NoiseParams p{cfg.eta_p.front(), cfg.eta_a.front(), st.estimate};
        rows.push_back({double(cfg.n), double(cfg.m), p.eta_p, p.eta_a,
                        st.estimate, s, double(cfg.trials),
                        analytic_success(cfg.n, cfg.m, p), st.estimate,
                        st.std_error});
    }
    emit_table(cfg, kNoiseColumns, rows, out);
    return kExitOk;
}

int cmd_cavity(const RunConfig &cfg, std::ostream &out) {
    check_format(cfg);
    if (!(cfg.kappa > 0.0)) {
        throw InvalidArgument("--kappa must be positive");
    }
    const double lo = cfg.omega_p_min.value_or(cfg.omega_c - 2.0 * cfg.kappa);
    const double hi = cfg.omega_p_max.value_or(cfg.omega_c + 2.0 * cfg.kappa);
    if (!(lo < hi) || cfg.points < 2) {
        throw InvalidArgument("sweep needs omega-p-min < omega-p-max and at least 2 points");
    }
    CavityParams p;
    p.omega_c = cfg.omega_c;
    p.omega_0 = cfg.omega_0.value_or(cfg.omega_c);
    p.kappa = cfg.kappa;
    p.gamma = cfg.gamma;
    p.lambda = cfg.lambda.value_or(cfg.kappa / 2.0);

    std::vector<std::vector<double>> rows;
    const double last = static_cast<double>(cfg.points - 1);
    for (std::size_t i = 0; i < cfg.points; ++i) {
        const double t = static_cast<double>(i);
        p.omega_p = (lo * (last - t) + hi * t) / last;
        const auto r = reflection(p);
        const auto r0 = empty_reflection(p);
        rows.push_back({p.omega_p, r.real(), r.imag(), std::abs(r),
                        wrap_phase(std::arg(r)), r0.real(), r0.imag(),
                        wrap_phase(std::arg(r0))});
    }
    emit_table(cfg,
               {"omega_p", "re_r", "im_r", "abs_r", "phi", "re_r0", "im_r0", "phi0"},
               rows, out);
    return kExitOk;
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Concatenated GHZ state analyzer"};
    app.require_subcommand(1);

    auto shape = [&cfg](CLI::App *sub) {
        sub->add_option("--n", cfg.n, "Number of logic qubits");
        sub->add_option("--m", cfg.m, "Photons per logic qubit");
    };
    auto common = [&cfg](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "Master seed");
        sub->add_option("--output", cfg.output, "Write results to this file");
        sub->add_option("--format", cfg.format, "json or csv");
    };
    auto noise_flags = [&cfg](CLI::App *sub) {
        sub->add_option("--eta-p", cfg.eta_p, "Photon detection efficiency");
        sub->add_option("--eta-a", cfg.eta_a, "Atom detection efficiency");
        sub->add_option("--trials", cfg.trials, "Monte Carlo trials");
    };

    auto *analyze_cmd = app.add_subcommand("analyze", "Analyze one C-GHZ state");
    shape(analyze_cmd);
    common(analyze_cmd);
    analyze_cmd->add_option("--state", cfg.state, "Label such as 2-")->required();
    analyze_cmd->add_option("--sigma", cfg.sigma, "Faraday phase detuning");

    auto *verify_cmd = app.add_subcommand("verify", "Analyze every label over many seeds");
    shape(verify_cmd);
    common(verify_cmd);
    verify_cmd->add_option("--trials", cfg.trials, "Seeds per label");

    auto *noise_cmd = app.add_subcommand("noise", "Success probability under detector loss");
    shape(noise_cmd);
    common(noise_cmd);
    noise_flags(noise_cmd);
    noise_cmd->add_option("--p-error", cfg.p_error, "Misidentification probability");

    auto *sigma_cmd = app.add_subcommand("sigma-sweep", "Misidentification under phase detuning");
    shape(sigma_cmd);
    common(sigma_cmd);
    noise_flags(sigma_cmd);
    sigma_cmd->add_option("--sigma", cfg.sigma, "Detuning values")->required();

    auto *cavity_cmd = app.add_subcommand("cavity", "Reflection coefficients over a probe sweep");
    cavity_cmd->add_option("--output", cfg.output, "Write results to this file");
    cavity_cmd->add_option("--format", cfg.format, "json or csv");
    cavity_cmd->add_option("--kappa", cfg.kappa, "Cavity damping rate");
    cavity_cmd->add_option("--omega-c", cfg.omega_c, "Cavity frequency");
    cavity_cmd->add_option("--omega-0", cfg.omega_0, "Atomic frequency");
    cavity_cmd->add_option("--lambda", cfg.lambda, "Atom-cavity coupling");
    cavity_cmd->add_option("--gamma", cfg.gamma, "Atomic decay rate");
    cavity_cmd->add_option("--omega-p-min", cfg.omega_p_min, "Sweep start");
    cavity_cmd->add_option("--omega-p-max", cfg.omega_p_max, "Sweep end");
    cavity_cmd->add_option("--points", cfg.points, "Grid points");

    std::vector<std::string> argv_store{"cghz"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    std::ostringstream buffer;
    int status = kExitOk;
    try {
        if (cfg.command == "analyze") {
            status = cmd_analyze(cfg, buffer);
        } else if (cfg.command == "verify") {
            status = cmd_verify(cfg, buffer);
        } else if (cfg.command == "noise") {
            status = cmd_noise(cfg, buffer);
        } else if (cfg.command == "sigma-sweep") {
            status = cmd_sigma_sweep(cfg, buffer);
        } else {
            status = cmd_cavity(cfg, buffer);
        }
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (cfg.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        file << buffer.str();
        if (!file) {
            err << "error: cannot write " << cfg.output << '\n';
            return kExitUsage;
        }
    }
    return status;
}

} // namespace cghz::cli
