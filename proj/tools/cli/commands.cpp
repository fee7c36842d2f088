// Copyright 2026 The qgxor Authors
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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "qgxor/errors.hpp"
#include "qgxor/gates.hpp"
#include "qgxor/linalg.hpp"
#include "qgxor/purify.hpp"
#include "qgxor/teleport.hpp"
#include "qgxor/version.hpp"

namespace qgxor::cli {

namespace {

using Clock = std::chrono::steady_clock;

Dim checked_dim(int d, int max_dim) {
    const Dim dim(d);
    if (d > max_dim) {
        throw CapacityExceeded("D=" + std::to_string(d) + " exceeds the dense capacity limit of " +
                               std::to_string(max_dim) + " for this command");
    }
    return dim;
}

void check_target(double target) {
    if (!(target > 0.0 && target <= 1.0)) throw InvalidArgument("--target must lie in (0, 1]");
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::string ket_label(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

RunReport start_report(const std::string& command, Json config, std::optional<std::uint64_t> seed) {
    RunReport report;
    report.meta.version = kVersion;
    report.meta.command = command;
    report.meta.seed = seed;
    report.meta.config = std::move(config);
    return report;
}

void finish_report(RunReport& report, Clock::time_point started) {
    report.meta.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<int> parse_dim_list(const std::string& spec) {
    auto to_int = [&](const std::string& token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("invalid dimension '" + token + "' in '" + spec + "'");
        }
        if (used != token.size()) throw InvalidArgument("invalid dimension '" + token + "' in '" + spec + "'");
        return value;
    };

    std::vector<int> out;
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
        const int lo = to_int(spec.substr(0, dots));
        const int hi = to_int(spec.substr(dots + 2));
        if (hi < lo) throw InvalidArgument("empty dimension range '" + spec + "'");
        for (int d = lo; d <= hi; ++d) out.push_back(d);
    } else {
        std::stringstream stream(spec);
        std::string token;
        while (std::getline(stream, token, ',')) out.push_back(to_int(token));
    }
    if (out.empty()) throw InvalidArgument("empty dimension list");
    return out;
}

RunReport cmd_bell(const BellConfig& config) {
    const auto started = Clock::now();
    const Dim D = checked_dim(config.dim, kMaxBellDim);
    RunReport report = start_report("bell", Json{{"dim", config.dim}}, std::nullopt);

    const int d = D.value();
    CMatrix basis(d * d, d * d);
    Json states = Json::array();
    report.table.header = {"l", "m", "index", "ket", "re", "im"};
    for (int l = 0; l < d; ++l) {
        for (int m = 0; m < d; ++m) {
            const CVector amps = gates::bell_state(Dit(l), Dit(m), D).amplitudes();
            basis.col(l * d + m) = amps;
            Json amplitudes = Json::array();
            Json support = Json::array();
            for (int idx = 0; idx < d * d; ++idx) {
                amplitudes.push_back(complex_json(amps(idx)));
                if (std::abs(amps(idx)) > 1e-12) support.push_back(ket_label(idx / d, idx % d));
                report.table.rows.push_back({std::to_string(l), std::to_string(m), std::to_string(idx),
                                             ket_label(idx / d, idx % d), format_double(amps(idx).real()),
                                             format_double(amps(idx).imag())});
            }
            states.push_back(Json{{"l", l}, {"m", m}, {"support", support}, {"amplitudes", amplitudes}});
        }
    }
    CMatrix gram = basis.adjoint() * basis;
    double offdiag = 0.0;
    for (int a = 0; a < d * d; ++a)
        for (int b = 0; b < d * d; ++b)
            if (a != b) offdiag = std::max(offdiag, std::abs(gram(a, b)));

    report.data = Json{{"D", d},
                       {"basis_order", "flat index l*D + m; amplitude index a*D + b for |a,b>"},
                       {"gram_max_offdiag_residual", offdiag},
                       {"gram_max_residual", max_abs_diff(gram, CMatrix::Identity(d * d, d * d))},
                       {"states", states}};
    finish_report(report, started);
    return report;
}

RunReport cmd_teleport(const TeleportConfig& config) {
    const auto started = Clock::now();
    const Dim D = checked_dim(config.dim, kMaxTeleportDim);
    if (config.trials < 1) throw InvalidArgument("--trials must be >= 1");
    RunReport report = start_report(
        "teleport", Json{{"dim", config.dim}, {"trials", config.trials}, {"seed", config.seed}}, config.seed);

    const auto summary = teleport::teleport_demo(D, config.trials, config.seed);
    const int d = D.value();
    Json histogram = Json::array();
    for (int l = 0; l < d; ++l) {
        for (int m = 0; m < d; ++m) {
            const auto count = summary.outcome_counts[static_cast<std::size_t>(l * d + m)];
            histogram.push_back(Json{{"l", l},
                                     {"m", m},
                                     {"count", count},
                                     {"frequency", static_cast<double>(count) / static_cast<double>(config.trials)}});
        }
    }
    Json trials = Json::array();
    report.table.header = {"trial", "j", "k", "l", "m", "probability", "fidelity"};
    for (const auto& t : summary.trials) {
        const int l = t.record.outcome.l.value();
        const int m = t.record.outcome.m.value();
        trials.push_back(Json{{"trial", t.index},
                              {"j", t.j},
                              {"k", t.k},
                              {"l", l},
                              {"m", m},
                              {"probability", t.record.probability},
                              {"fidelity", t.record.fidelity_with_input}});
        report.table.rows.push_back({std::to_string(t.index), std::to_string(t.j), std::to_string(t.k),
                                     std::to_string(l), std::to_string(m), format_double(t.record.probability),
                                     format_double(t.record.fidelity_with_input)});
    }
    report.data = Json{{"D", d},
                       {"trials", config.trials},
                       {"classical_bits", summary.classical_bits},
                       {"min_fidelity", summary.min_fidelity},
                       {"mean_fidelity", summary.mean_fidelity},
                       {"max_probability_deviation", summary.max_probability_deviation},
                       {"chi_square", summary.chi_square},
                       {"outcome_histogram", histogram},
                       {"trial_records", trials}};
    finish_report(report, started);
    return report;
}

RunReport cmd_purify(const PurifyRunConfig& config) {
    const auto started = Clock::now();
    const Dim D = checked_dim(config.dim, kMaxPurifyDim);
    check_target(config.target);
    purify::PurifyConfig run_config;
    run_config.D = D;
    run_config.initial = config.lambda;
    run_config.max_iters = config.max_iters;
    run_config.fidelity_target = config.target;
    run_config.copies = config.copies;
    run_config.schedule.clear();
    for (const auto& name : config.schedule) run_config.schedule.push_back(purify::twirl_kind_from_string(name));
    run_config.validate();

    RunReport report = start_report("purify",
                                    Json{{"dim", config.dim},
                                         {"lambda", config.lambda},
                                         {"max_iters", config.max_iters},
                                         {"target", config.target},
                                         {"copies", config.copies},
                                         {"schedule", config.schedule}},
                                    std::nullopt);

    const auto trace = purify::run_purification(run_config);
    const double threshold = purify::separability_threshold(D);
    Json steps = Json::array();
    report.table.header = {"iteration", "fidelity", "step_success_prob", "cumulative_success_prob"};
    for (const auto& s : trace.steps) {
        steps.push_back(Json{{"iteration", s.iteration},
                             {"fidelity", s.fidelity},
                             {"step_success_prob", s.step_success_prob},
                             {"cumulative_success_prob", s.cumulative_success_prob}});
        report.table.rows.push_back({std::to_string(s.iteration), format_double(s.fidelity),
                                     format_double(s.step_success_prob), format_double(s.cumulative_success_prob)});
    }
    report.data = Json{{"D", D.value()},
                       {"lambda", config.lambda},
                       {"separability_threshold", threshold},
                       {"entangled", config.lambda > threshold},
                       {"converged", trace.converged},
                       {"iterations_used", trace.iterations_used},
                       {"final_fidelity", trace.final_fidelity()},
                       {"cumulative_success_prob", trace.cumulative_success_prob()},
                       {"failure_reason", trace.failure_reason ? Json(*trace.failure_reason) : Json(nullptr)},
                       {"trace", steps}};
    finish_report(report, started);
    return report;
}

RunReport cmd_sweep(const SweepConfig& config) {
    const auto started = Clock::now();
    purify::SweepSpec spec;
    spec.dims = parse_dim_list(config.dims);
    for (int d : spec.dims) (void)checked_dim(d, kMaxPurifyDim);
    check_target(config.target);
    if (config.threads < 1) throw InvalidArgument("--threads must be >= 1");
    spec.lambdas = config.lambdas;
    spec.threshold_offsets = config.lambda_offsets;
    spec.entangled_only = config.entangled_only;
    spec.max_iters = config.max_iters;
    spec.fidelity_target = config.target;
    spec.threads = config.threads;

    RunReport report = start_report("sweep",
                                    Json{{"dims", config.dims},
                                         {"lambdas", config.lambdas},
                                         {"lambda_offsets", config.lambda_offsets},
                                         {"entangled_only", config.entangled_only},
                                         {"max_iters", config.max_iters},
                                         {"target", config.target},
                                         {"threads", config.threads}},
                                    std::nullopt);

    const auto rows = purify::sweep(spec);
    Json json_rows = Json::array();
    bool all_converged = true;
    std::size_t worst_iterations = 0;
    report.table.header = {"D", "lambda", "separability_threshold", "converged", "iterations_used",
                           "cumulative_success_prob", "final_fidelity"};
    for (const auto& row : rows) {
        const double threshold = purify::separability_threshold(Dim(row.D));
        all_converged = all_converged && row.converged;
        if (row.converged) worst_iterations = std::max(worst_iterations, row.iterations_used);
        json_rows.push_back(Json{{"D", row.D},
                                 {"lambda", row.lambda},
                                 {"separability_threshold", threshold},
                                 {"converged", row.converged},
                                 {"iterations_used", row.iterations_used},
                                 {"cumulative_success_prob", row.cumulative_success_prob},
                                 {"final_fidelity", row.final_fidelity}});
        report.table.rows.push_back({std::to_string(row.D), format_double(row.lambda), format_double(threshold),
                                     bool_str(row.converged), std::to_string(row.iterations_used),
                                     format_double(row.cumulative_success_prob), format_double(row.final_fidelity)});
    }
    report.data = Json{{"all_converged", all_converged},
                       {"max_iterations_converged", worst_iterations},
                       {"rows", json_rows}};
    finish_report(report, started);
    return report;
}

RunReport cmd_kerr_check(const KerrConfig& config) {
    const auto started = Clock::now();
    const auto dims = parse_dim_list(config.dims);
    std::vector<gates::KerrParams> params;
    for (int d : dims) params.emplace_back(checked_dim(d, kMaxKerrDim), config.chi);

    RunReport report = start_report("kerr-check", Json{{"dims", config.dims}, {"chi", config.chi}}, std::nullopt);

    Json rows = Json::array();
    double worst = 0.0;
    report.table.header = {"D", "max_residual", "chi", "interaction_time", "phase_per_step"};
    for (const auto& p : params) {
        const double residual = max_abs_diff(gates::kerr_gxor_images(p), gates::gxor_unitary(p.dim()).matrix());
        worst = std::max(worst, residual);
        rows.push_back(Json{{"D", p.dim().value()},
                            {"max_residual", residual},
                            {"chi", p.chi()},
                            {"interaction_time", p.interaction_time()},
                            {"phase_per_step", p.phase_per_step()}});
        report.table.rows.push_back({std::to_string(p.dim().value()), format_double(residual), format_double(p.chi()),
                                     format_double(p.interaction_time()), format_double(p.phase_per_step())});
    }
    report.data = Json{
        {"phase_convention",
         Json{{"fourier_kernel", "F|l> = D^-1/2 sum_k exp(+i 2 pi l k / D) |k>"},
              {"mixed_basis", "mode 1 Fock |i>, mode 2 Fourier-transformed Fock F|k>"},
              {"kerr_propagator", "exp(-i chi t n1 n2), hbar = 1"},
              {"interaction_time", "t = 2 pi / (D chi)"},
              {"time_reversal", "complex conjugation of Fock-basis coordinates"},
              {"comparison", "basis-state images only; conjugation is antilinear"}}},
        {"max_residual", worst},
        {"rows", rows}};
    finish_report(report, started);
    return report;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qudit GXOR experiments: Bell basis, teleportation, purification, Kerr check", "qgxor"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");

    std::string format_name = "json";
    std::string out_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format: json or csv")->capture_default_str();
        sub->add_option("--out", out_path, "Write the report to PATH instead of stdout");
    };

    BellConfig bell;
    auto* bell_cmd = app.add_subcommand("bell", "Emit the generalized Bell basis and its Gram residual");
    bell_cmd->add_option("--dim", bell.dim, "Qudit dimension D")->capture_default_str();
    add_common(bell_cmd);

    TeleportConfig tele;
    auto* tele_cmd = app.add_subcommand("teleport", "Teleport random qudit states");
    tele_cmd->add_option("--dim", tele.dim, "Qudit dimension D")->capture_default_str();
    tele_cmd->add_option("--trials", tele.trials, "Number of random inputs")->capture_default_str();
    tele_cmd->add_option("--seed", tele.seed, "Master seed")->capture_default_str();
    add_common(tele_cmd);

    PurifyRunConfig pur;
    auto* pur_cmd = app.add_subcommand("purify", "Iterate the purification map from a Werner state");
    pur_cmd->add_option("--dim", pur.dim, "Qudit dimension D")->capture_default_str();
    pur_cmd->add_option("--lambda", pur.lambda, "Werner weight")->capture_default_str();
    pur_cmd->add_option("--max-iters", pur.max_iters, "Iteration cap")->capture_default_str();
    pur_cmd->add_option("--target", pur.target, "Fidelity target")->capture_default_str();
    pur_cmd->add_option("--copies", pur.copies, "Target copies N per step")->capture_default_str();
    pur_cmd->add_option("--schedule", pur.schedule, "Twirl schedule (full_dft, truncated_dft, identity)")
        ->delimiter(',')
        ->capture_default_str();
    add_common(pur_cmd);

    SweepConfig sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Purification verdicts over a (D, lambda) grid");
    sweep_cmd->add_option("--dim", sw.dims, "Dimensions: 3, 2,3,5 or 2..20")->capture_default_str();
    sweep_cmd->add_option("--lambda", sw.lambdas, "Absolute Werner weights")->delimiter(',');
    sweep_cmd->add_option("--lambda-offset", sw.lambda_offsets, "Weights 1/(1+D) + offset")->delimiter(',');
    sweep_cmd->add_flag("--entangled-only", sw.entangled_only, "Drop cells with lambda <= 1/(1+D)");
    sweep_cmd->add_option("--max-iters", sw.max_iters, "Iteration cap")->capture_default_str();
    sweep_cmd->add_option("--target", sw.target, "Fidelity target")->capture_default_str();
    sweep_cmd->add_option("--threads", sw.threads, "Worker threads")->capture_default_str();
    add_common(sweep_cmd);

    KerrConfig kerr;
    auto* kerr_cmd = app.add_subcommand("kerr-check", "Compare Kerr + phase conjugation with GXOR");
    kerr_cmd->add_option("--dim", kerr.dims, "Dimensions: 3, 2,3,5 or 2..8")->capture_default_str();
    kerr_cmd->add_option("--chi", kerr.chi, "Kerr susceptibility (positive)")->capture_default_str();
    add_common(kerr_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        const Format format = parse_format(format_name);
        RunReport report;
        if (bell_cmd->parsed()) {
            report = cmd_bell(bell);
        } else if (tele_cmd->parsed()) {
            report = cmd_teleport(tele);
        } else if (pur_cmd->parsed()) {
            report = cmd_purify(pur);
        } else if (sweep_cmd->parsed()) {
            report = cmd_sweep(sw);
        } else {
            report = cmd_kerr_check(kerr);
        }
        report.meta.config["format"] = format_name;

        std::ostringstream rendered;
        emit(rendered, report, format);
        if (out_path.empty()) {
            out << rendered.str();
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw InvalidArgument("cannot open output file '" + out_path + "'");
            file << rendered.str();
        }
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "qgxor: invalid configuration: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const CapacityExceeded& e) {
        err << "qgxor: capacity guard: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "qgxor: internal error: " << e.what() << '\n';
        return kExitInternalError;
    }
}

}  // namespace qgxor::cli
