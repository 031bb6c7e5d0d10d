// Copyright 2026 The opent Authors
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

// opent: command-line front end.
//
//   opent gate <name> [gate flags] [--out FILE]
//   opent measure <name> [gate flags] [--json] [--allow-nonunitary] [--force-fold4]
//   opent sweep <spin|zchain> [--two-j J2 | --n N --k K] [--from A --to B --steps S] [--out FILE]
//   opent power <name> [gate flags] [--method direct|relation|mc|all] [--seed S] [--samples N] [--json]
//   opent verify [--quick]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid input or size cap.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "opent/acceptance.hpp"
#include "opent/opent.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;

struct GateFlags {
    std::string name;
    std::optional<double> theta;
    std::optional<int> two_j;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<std::size_t> d;
    std::optional<std::size_t> d1;
    std::optional<std::size_t> d2;
    std::string file;
};

void add_gate_flags(CLI::App* sub, GateFlags& g, bool positional_name = true) {
    if (positional_name) {
        sub->add_option("name", g.name, "Gate: cnot, cnnot, spin, parity, zchain, swap, custom")
            ->required()
            ->check(CLI::IsMember({"cnot", "cnnot", "spin", "parity", "zchain", "swap", "custom"}));
    }
    sub->add_option("--theta", g.theta, "Angle in radians (spin, zchain)");
    sub->add_option("--two-j", g.two_j, "Twice the spin j (spin)");
    sub->add_option("--n", g.n, "Number of controls (cnnot) or qubits (zchain)");
    sub->add_option("--k", g.k, "Qubits on the first side of the split (cnnot, zchain)");
    sub->add_option("--d", g.d, "Local dimension (swap)");
    sub->add_option("--d1", g.d1, "First-factor dimension (parity, custom)");
    sub->add_option("--d2", g.d2, "Second-factor dimension (parity, custom)");
    sub->add_option("--file", g.file, "Matrix file (custom)");
}

opent::GateSpec to_spec(const GateFlags& g) {
    const double theta = g.theta.value_or(std::numbers::pi / 4.0);
    if (g.name == "cnot") return opent::CnotGate{};
    if (g.name == "cnnot") return opent::CnnotGate{g.n.value_or(1), g.k.value_or(1)};
    if (g.name == "spin") return opent::SpinGate{theta, g.two_j.value_or(1)};
    if (g.name == "parity") return opent::ParityGate{g.d1.value_or(2), g.d2.value_or(2)};
    if (g.name == "zchain") return opent::ZchainGate{theta, g.n.value_or(2), g.k.value_or(1)};
    if (g.name == "swap") return opent::SwapGate{g.d.value_or(2)};
    if (g.name == "custom") return opent::CustomGate{g.file, g.d1.value_or(0), g.d2.value_or(0)};
    throw opent::InvalidSpecError("unknown gate '" + g.name + "'");
}

/// Writes to the named file, or stdout when `path` is empty.
template <class F>
void emit(const std::string& path, F&& body) {
    if (path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw opent::IoError("cannot open '" + path + "' for writing");
    body(out);
    if (!out) throw opent::IoError("failed writing '" + path + "'");
}

void require_unitary(const opent::OperatorState& u, bool allow_nonunitary) {
    if (allow_nonunitary) return;
    const auto report = opent::check_unitary(u.op());
    if (!report.unitary) {
        throw opent::InvalidInputError("operator is not unitary (max |U^dagger U - I| = " +
                                       opent::format_g17(report.deviation) + "); pass --allow-nonunitary");
    }
}

std::optional<opent::TwoTermDecomposition> catalog_decomposition(const opent::GateSpec& spec) {
    if (std::holds_alternative<opent::SwapGate>(spec) || std::holds_alternative<opent::CustomGate>(spec)) return {};
    return opent::two_term_decomposition(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator entanglement of bipartite unitaries"};
    app.require_subcommand(1);

    GateFlags gate_flags;
    std::string out_path;
    auto* gate_cmd = app.add_subcommand("gate", "Write a catalog gate to a matrix file");
    add_gate_flags(gate_cmd, gate_flags);
    gate_cmd->add_option("--out", out_path, "Output file (default stdout)");

    GateFlags measure_flags;
    bool json = false;
    bool allow_nonunitary = false;
    bool force_fold4 = false;
    auto* measure_cmd = app.add_subcommand("measure", "Entropies, entangling power and concurrence of a gate");
    add_gate_flags(measure_cmd, measure_flags);
    measure_cmd->add_flag("--json", json, "Machine-readable report");
    measure_cmd->add_flag("--allow-nonunitary", allow_nonunitary, "Accept non-unitary operators");
    measure_cmd->add_flag("--force-fold4", force_fold4, "Lift the d1*d2 <= 16 cap on fold-4 routes");

    std::string family;
    GateFlags sweep_flags;
    double from = 0.0;
    double to = std::numbers::pi / 2.0;
    std::size_t steps = 400;
    bool closed_interval = false;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "Concurrence against theta, closed form vs numeric, as CSV");
    sweep_cmd->add_option("family", family, "spin or zchain")->required()->check(CLI::IsMember({"spin", "zchain"}));
    add_gate_flags(sweep_cmd, sweep_flags, false);
    sweep_cmd->add_option("--from", from, "Start angle (radians)");
    sweep_cmd->add_option("--to", to, "End angle (radians)");
    sweep_cmd->add_option("--steps", steps, "Number of angles");
    sweep_cmd->add_flag("--closed", closed_interval, "Include both endpoints");
    sweep_cmd->add_option("--out", sweep_out, "Output CSV (default stdout)");

    GateFlags power_flags;
    std::string method = "all";
    std::uint64_t seed = 42;
    std::uint64_t samples = 20000;
    bool power_json = false;
    bool power_force = false;
    bool power_nonunitary = false;
    auto* power_cmd = app.add_subcommand("power", "Entangling power over Haar product states");
    add_gate_flags(power_cmd, power_flags);
    power_cmd->add_option("--method", method, "direct, relation, mc or all")
        ->check(CLI::IsMember({"direct", "relation", "mc", "all"}));
    power_cmd->add_option("--seed", seed, "Monte-Carlo seed (decimal 64-bit)");
    power_cmd->add_option("--samples", samples, "Monte-Carlo sample count");
    power_cmd->add_flag("--json", power_json, "Machine-readable output");
    power_cmd->add_flag("--force-fold4", power_force, "Lift the d1*d2 <= 16 cap on fold-4 routes");
    power_cmd->add_flag("--allow-nonunitary", power_nonunitary, "Accept non-unitary operators");

    bool quick = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification suite");
    verify_cmd->add_flag("--quick", quick, "Skip Monte-Carlo checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gate_cmd) {
            const auto spec = to_spec(gate_flags);
            const auto u = opent::resolve_gate(spec);
            const opent::MatrixFile file{u.op(), u.bipartition()};
            emit(out_path, [&](std::ostream& out) { out << opent::write_matrix_string(file) << '\n'; });
            return kExitOk;
        }

        if (*measure_cmd) {
            const auto spec = to_spec(measure_flags);
            const auto u = opent::resolve_gate(spec);
            require_unitary(u, allow_nonunitary);
            const auto report = opent::measure_report(u, catalog_decomposition(spec), {force_fold4});
            if (json) {
                std::cout << opent::to_json(report).dump(2) << '\n';
            } else {
                std::cout << "gate              " << opent::gate_name(spec) << '\n';
                opent::render_report(std::cout, report, u.bipartition());
            }
            if (report.fold4_unavailable) {
                std::cerr << "error: " << *report.fold4_unavailable << '\n';
                return kExitInvalidInput;
            }
            return kExitOk;
        }

        if (*sweep_cmd) {
            sweep_flags.name = family;
            const auto base = to_spec(sweep_flags);
            opent::validate(base);
            const auto thetas = opent::sweep_angles(from, to, steps, closed_interval);
            const auto rows = opent::sweep(base, thetas);
            emit(sweep_out, [&](std::ostream& out) { opent::write_sweep_csv(out, rows); });
            return kExitOk;
        }

        if (*power_cmd) {
            const auto spec = to_spec(power_flags);
            const auto u = opent::resolve_gate(spec);
            require_unitary(u, power_nonunitary);
            const opent::Fold4Policy policy{power_force};
            nlohmann::json j;
            if (method == "direct" || method == "all") {
                const double v = opent::entangling_power_direct(u, policy);
                j["direct"] = v;
                if (!power_json) std::cout << "e_p (projector trace)  " << opent::format_g17(v) << '\n';
            }
            if (method == "relation" || method == "all") {
                const double e = opent::linear_entropy(opent::schmidt_spectrum(u));
                const double et = opent::exchange_entropy(u, policy);
                const double v = opent::entangling_power_via_relation(e, et, u.bipartition());
                j["relation"] = v;
                if (!power_json) std::cout << "e_p (relation E + E~)  " << opent::format_g17(v) << '\n';
            }
            if (method == "mc" || method == "all") {
                if (samples < 2) throw opent::InvalidSpecError("--samples must be at least 2");
                const auto mc = opent::entangling_power_mc(u, samples, seed);
                j["mc"] = opent::to_json(mc);
                if (!power_json) opent::render_mc(std::cout, mc);
            }
            if (power_json) std::cout << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*verify_cmd) {
            const auto results = opent::run_acceptance({.quick = quick});
            opent::print_acceptance(std::cout, results);
            const bool ok = opent::all_passed(results);
            std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << '\n';
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const opent::InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const opent::UnsupportedSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const opent::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitUsage;
}
