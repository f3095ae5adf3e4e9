// Copyright 2026 The qarrow Authors
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

#include "qarrow/cli.h"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qarrow/circuits.h"
#include "qarrow/laws.h"
#include "qarrow/textcircuit.h"

namespace qarrow {

namespace {

constexpr double kValidationTol = 1e-6;
constexpr double kDemoTol = 1e-9;

struct OutputOptions {
    std::string format = "text";
    std::optional<int> precision;
};

void add_output_options(CLI::App *cmd, OutputOptions &o) {
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--precision", o.precision, "decimal places; text defaults to 4, json to full precision")
        ->check(CLI::Range(0, 17));
}

std::string scientific(double x) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << x;
    return s.str();
}

void emit_density(std::ostream &out, const OutputOptions &o, const DensityMatrix &d,
                  const std::vector<std::string> &wires, std::optional<double> deviation) {
    if (o.format == "json") {
        auto j = nlohmann::json::parse(to_json(d, o.precision));
        j["wires"] = wires;
        if (deviation) {
            j["max_deviation"] = *deviation;
        }
        out << j.dump() << '\n';
        return;
    }
    out << "wires:";
    for (const auto &w : wires) {
        out << ' ' << w;
    }
    out << '\n' << to_text(d, o.precision.value_or(4));
    if (deviation) {
        out << "max deviation: " << scientific(*deviation) << '\n';
    }
}

int run_file(const std::string &path, const OutputOptions &o, bool validate, std::ostream &out, std::ostream &err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot read '" << path << "'\n";
        return kExitBadInput;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    CircuitIR ir;
    try {
        ir = parse_circuit(buffer.str());
    } catch (const CircuitError &e) {
        err << path << ": " << e.what() << '\n';
        return kExitBadInput;
    }
    RoutedPipeline pipeline = route(ir);
    DensityMatrix input = initial_density(ir);
    if (validate) {
        auto diag = diagnose(input, kValidationTol);
        if (!diag.physical()) {
            err << "error: input density is not physical (hermitian " << diag.hermitian << ", psd " << diag.psd
                << ", unit trace " << diag.unit_trace << ", max violation " << scientific(diag.max_violation) << ")\n";
            return kExitNumerical;
        }
    }
    emit_density(out, o, apply(pipeline.combined, input), pipeline.output_wires, std::nullopt);
    return kExitOk;
}

int run_demo(const std::string &name, const OutputOptions &o, std::ostream &out, std::ostream &err) {
    const CatalogCircuit *circuit = nullptr;
    try {
        circuit = &find_circuit(name);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    DensityMatrix result = apply(circuit->op, circuit->default_input);
    double deviation = max_abs_diff(result, circuit->expected_output);
    std::vector<std::string> wires;
    if (name == "teleport") {
        wires = {"q"};
    } else {
        wires = {"a", "b", "c"};
    }
    if (o.format == "text") {
        out << circuit->name << ": " << circuit->description << '\n';
    }
    emit_density(out, o, result, wires, deviation);
    return deviation <= kDemoTol ? kExitOk : kExitNumerical;
}

int run_laws(std::uint64_t seed, double tol, std::size_t cases, std::ostream &out) {
    SeededGenerator gen(seed);
    auto reports = check_monad_laws(gen, default_monad_bases(), cases, tol);
    auto arrow = check_arrow_laws(gen, default_arrow_pool(), tol);
    reports.insert(reports.end(), arrow.begin(), arrow.end());

    std::size_t width = 0;
    for (const auto &r : reports) {
        width = std::max(width, r.name.size());
    }
    out << "seed " << seed << ", tolerance " << scientific(tol) << '\n';
    bool all = true;
    for (const auto &r : reports) {
        all = all && r.pass;
        out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
            << std::right << "  instances " << std::setw(5) << r.instances << "  max residual "
            << scientific(r.max_residual);
        if (!r.pass) {
            out << "  worst: " << r.witness;
        }
        out << '\n';
    }
    std::size_t passed = 0;
    for (const auto &r : reports) {
        passed += r.pass;
    }
    out << passed << "/" << reports.size() << " laws hold\n";
    return all ? kExitOk : kExitLawFailure;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Density-matrix circuits built from superoperator arrows", "qarrow"};
    app.require_subcommand(1);

    std::string file;
    OutputOptions run_opts;
    bool validate = false;
    auto *run = app.add_subcommand("run", "Route a circuit file and print the final density");
    run->add_option("file", file, "circuit file")->required();
    add_output_options(run, run_opts);
    run->add_flag("--validate-input", validate, "refuse inputs that are not Hermitian, PSD and unit trace (tol 1e-6)");

    std::string demo_name;
    OutputOptions demo_opts;
    auto *demo = app.add_subcommand(
        "demo",
        "Run a built-in circuit on its default input: toffoli on |True,True,False>, teleport on "
        "0.6|False> + 0.8i|True>");
    demo->add_option("circuit", demo_name, "toffoli or teleport")->required();
    add_output_options(demo, demo_opts);

    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::size_t cases = 50;
    auto *laws = app.add_subcommand("laws", "Check the monad and arrow laws numerically");
    laws->add_option("--seed", seed, "generator seed (unsigned 64-bit)");
    laws->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
    laws->add_option("--cases", cases, "random cases per basis for the monad laws")->check(CLI::Range(1, 100000));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n' << "run 'qarrow --help' for usage\n";
        return kExitBadInput;
    }

    try {
        if (run->parsed()) {
            return run_file(file, run_opts, validate, out, err);
        }
        if (demo->parsed()) {
            return run_demo(demo_name, demo_opts, out, err);
        }
        return run_laws(seed, tol, cases, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

}  // namespace qarrow
