// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver for the qcopt shared library. Talks to the optimizer
// exclusively through the C API in qcopt/qcopt.h.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcopt/qcopt.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUnsupported = 3;

constexpr double kValidationTol = 1e-9;

struct CircuitDeleter {
    void operator()(qcopt_circuit* c) const { qcopt_circuit_free(c); }
};
using CircuitPtr = std::unique_ptr<qcopt_circuit, CircuitDeleter>;

int status_to_exit(qcopt_status st) {
    switch (st) {
    case QCOPT_OK: return kExitOk;
    case QCOPT_ERR_PARSE:
    case QCOPT_ERR_IO: return kExitParse;
    default: return kExitUnsupported;
    }
}

CircuitPtr load_circuit(const std::string& path, int& exit_code) {
    char err[512] = {};
    qcopt_circuit* raw = nullptr;
    const qcopt_status st = qcopt_parse_file(path.c_str(), &raw, err, sizeof err);
    if (st != QCOPT_OK) {
        std::cerr << path << ": " << err << "\n";
        exit_code = status_to_exit(st);
        return nullptr;
    }
    exit_code = kExitOk;
    return CircuitPtr(raw);
}

ordered_json counts_json(const qcopt_circuit* c) {
    qcopt_gate_counts counts{};
    qcopt_count_gates(c, &counts);
    return ordered_json{{"total", counts.total}, {"h", counts.h},
                        {"x", counts.x},         {"rz", counts.rz},
                        {"cnot", counts.cnot},   {"t_count", counts.t_count},
                        {"other_rz", counts.other_rz}};
}

const char* verdict_name(int kind) {
    switch (kind) {
    case QCOPT_EQUIV_EQUAL: return "equal";
    case QCOPT_EQUIV_UP_TO_PHASE: return "equal_up_to_phase";
    default: return "not_equivalent";
    }
}

void write_report(const ordered_json& report, const std::string& report_path) {
    if (report_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(report_path, std::ios::binary);
    out << report.dump(2) << "\n";
}

// --- optimize ------------------------------------------------------------

int run_optimize(const std::string& input, const std::string& output,
                 const std::string& passes, int validate_dim,
                 const std::string& report_path) {
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    CircuitPtr circuit = load_circuit(input, code);
    if (!circuit) return code;

    char err[512] = {};
    qcopt_circuit* raw = nullptr;
    const char* schedule = passes.empty() ? nullptr : passes.c_str();
    qcopt_status st = qcopt_optimize(circuit.get(), schedule, &raw, err, sizeof err);
    if (st != QCOPT_OK) {
        std::cerr << input << ": " << err << "\n";
        return status_to_exit(st);
    }
    CircuitPtr optimized(raw);

    ordered_json validation = nullptr;
    bool validation_failed = false;
    if (validate_dim >= 0 &&
        qcopt_circuit_dim(circuit.get()) <= static_cast<unsigned>(validate_dim)) {
        qcopt_equiv_verdict verdict{};
        st = qcopt_check_equiv(circuit.get(), optimized.get(), "matrix", kValidationTol,
                               &verdict, err, sizeof err);
        if (st != QCOPT_OK) {
            std::cerr << input << ": validation: " << err << "\n";
            return status_to_exit(st);
        }
        validation = ordered_json{{"mode", "matrix"},
                                  {"verdict", verdict_name(verdict.kind)},
                                  {"theta", verdict.theta},
                                  {"tol", kValidationTol}};
        validation_failed = verdict.kind == QCOPT_EQUIV_NOT_EQUIVALENT;
    }

    ordered_json after = counts_json(optimized.get());
    if (!output.empty()) {
        st = qcopt_emit_file(optimized.get(), output.c_str(), err, sizeof err);
        if (st != QCOPT_OK) {
            std::cerr << output << ": " << err << "\n";
            return status_to_exit(st);
        }
        // Counts are reported from the file that was actually written.
        int reload_code = kExitOk;
        if (CircuitPtr reloaded = load_circuit(output, reload_code))
            after = counts_json(reloaded.get());
        else
            return reload_code;
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    ordered_json report{
        {"schema", "1"},
        {"input", input},
        {"before", counts_json(circuit.get())},
        {"after", after},
        {"passes", passes.empty() ? "0132312432" : passes},
        {"validation", validation},
        {"duration_ms",
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
    };
    write_report(report, report_path);
    return validation_failed ? kExitValidation : kExitOk;
}

// --- map -----------------------------------------------------------------

int run_map(const std::string& input, const std::string& arch, const std::string& output,
            const std::string& perm_out) {
    int code = kExitOk;
    CircuitPtr circuit = load_circuit(input, code);
    if (!circuit) return code;

    const unsigned dim = qcopt_circuit_dim(circuit.get());
    std::vector<unsigned> layout_in(dim), layout_out(dim);
    char err[512] = {};
    qcopt_circuit* raw = nullptr;
    qcopt_status st = qcopt_map(circuit.get(), arch.c_str(), &raw, layout_in.data(),
                                layout_out.data(), err, sizeof err);
    if (st != QCOPT_OK) {
        std::cerr << input << ": " << err << "\n";
        return status_to_exit(st);
    }
    CircuitPtr mapped(raw);

    if (!output.empty()) {
        st = qcopt_emit_file(mapped.get(), output.c_str(), err, sizeof err);
        if (st != QCOPT_OK) {
            std::cerr << output << ": " << err << "\n";
            return status_to_exit(st);
        }
    }
    if (!perm_out.empty()) {
        std::ofstream out(perm_out, std::ios::binary);
        out << ordered_json{{"in", layout_in}, {"out", layout_out}}.dump(2) << "\n";
    }
    std::cout << ordered_json{{"schema", "1"},
                              {"input", input},
                              {"arch", arch},
                              {"before", counts_json(circuit.get())},
                              {"after", counts_json(mapped.get())}}
                     .dump(2)
              << "\n";
    return kExitOk;
}

// --- check-equiv -----------------------------------------------------------

int run_check_equiv(const std::string& a_path, const std::string& b_path,
                    const std::string& mode, double tol, const std::string& perm_file) {
    int code = kExitOk;
    CircuitPtr a = load_circuit(a_path, code);
    if (!a) return code;
    CircuitPtr b = load_circuit(b_path, code);
    if (!b) return code;

    char err[512] = {};
    if (!perm_file.empty()) {
        std::ifstream in(perm_file);
        if (!in) {
            std::cerr << perm_file << ": cannot open\n";
            return kExitParse;
        }
        ordered_json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            std::cerr << perm_file << ": " << e.what() << "\n";
            return kExitParse;
        }
        std::vector<unsigned> pin, pout;
        if (j.contains("perm")) {
            pin = j["perm"].get<std::vector<unsigned>>();
            pout = pin;
        } else {
            pin = j["in"].get<std::vector<unsigned>>();
            pout = j["out"].get<std::vector<unsigned>>();
        }
        int equal = 0;
        const qcopt_status st = qcopt_check_equiv_perm(a.get(), b.get(), pin.data(),
                                                       pout.data(), tol, &equal, err,
                                                       sizeof err);
        if (st != QCOPT_OK) {
            std::cerr << err << "\n";
            return status_to_exit(st);
        }
        std::cout << ordered_json{{"schema", "1"},
                                  {"verdict", equal ? "equal_up_to_permutation"
                                                    : "not_equivalent"},
                                  {"tol", tol}}
                         .dump(2)
                  << "\n";
        return equal ? kExitOk : kExitValidation;
    }

    qcopt_equiv_verdict verdict{};
    const qcopt_status st = qcopt_check_equiv(a.get(), b.get(), mode.c_str(), tol,
                                              &verdict, err, sizeof err);
    if (st != QCOPT_OK) {
        std::cerr << err << "\n";
        return status_to_exit(st);
    }
    ordered_json out{{"schema", "1"},
                     {"mode", mode},
                     {"verdict", verdict_name(verdict.kind)},
                     {"tol", tol}};
    if (verdict.kind == QCOPT_EQUIV_UP_TO_PHASE) out["theta"] = verdict.theta;
    if (verdict.kind == QCOPT_EQUIV_NOT_EQUIVALENT) {
        out["max_deviation"] = verdict.max_deviation;
        if (verdict.has_witness) out["witness"] = verdict.witness;
    }
    std::cout << out.dump(2) << "\n";
    return verdict.kind == QCOPT_EQUIV_NOT_EQUIVALENT ? kExitValidation : kExitOk;
}

// --- stats -----------------------------------------------------------------

int run_stats(const std::vector<std::string>& inputs, bool as_json) {
    struct FileStats {
        int code = kExitOk;
        ordered_json counts;
        unsigned dim = 0;
    };
    // Files are independent; process them in parallel but report in order.
    std::vector<std::future<FileStats>> futures;
    futures.reserve(inputs.size());
    for (const auto& path : inputs) {
        futures.push_back(std::async(std::launch::async, [path]() {
            FileStats fs;
            CircuitPtr c = load_circuit(path, fs.code);
            if (c) {
                fs.counts = counts_json(c.get());
                fs.dim = qcopt_circuit_dim(c.get());
            }
            return fs;
        }));
    }
    int worst = kExitOk;
    ordered_json all = ordered_json::array();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        FileStats fs = futures[i].get();
        if (fs.code != kExitOk) {
            worst = std::max(worst, fs.code);
            continue;
        }
        if (as_json) {
            all.push_back(ordered_json{
                {"schema", "1"}, {"input", inputs[i]}, {"qubits", fs.dim},
                {"counts", fs.counts}});
        } else {
            std::cout << inputs[i] << ": qubits=" << fs.dim
                      << " total=" << fs.counts["total"] << " h=" << fs.counts["h"]
                      << " x=" << fs.counts["x"] << " rz=" << fs.counts["rz"]
                      << " cnot=" << fs.counts["cnot"]
                      << " t_count=" << fs.counts["t_count"] << "\n";
        }
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcopt: an optimizing compiler for quantum circuits"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qcopt_version()));

    std::string input, output, passes, report_path, arch, perm_file, perm_out;
    std::string mode = "matrix";
    double tol = kValidationTol;
    int validate_dim = -1;
    bool as_json = false;
    std::vector<std::string> inputs;
    std::string b_input;

    auto* opt = app.add_subcommand("optimize", "Run the optimization pipeline");
    opt->add_option("input", input, "OpenQASM 2.0 input file")->required();
    opt->add_option("-o,--output", output, "optimized OpenQASM output file");
    opt->add_option("--passes", passes, "pass schedule digits (default 0132312432)");
    opt->add_option("--validate-dim", validate_dim,
                    "validate output against input when dim <= N");
    opt->add_option("--report", report_path, "write the JSON report here");

    auto* map = app.add_subcommand("map", "Map a circuit onto an architecture");
    map->add_option("input", input, "OpenQASM 2.0 input file")->required();
    map->add_option("--arch", arch, "tenerife | lnn:N | lnn_ring:N | grid:RxC")->required();
    map->add_option("-o,--output", output, "mapped OpenQASM output file");
    map->add_option("--perm-out", perm_out, "write the qubit correspondences here");

    auto* check = app.add_subcommand("check-equiv", "Check two circuits for equivalence");
    check->add_option("a", input, "first circuit")->required();
    check->add_option("b", b_input, "second circuit")->required();
    check->add_option("--mode", mode, "matrix | phasepoly");
    check->add_option("--tol", tol, "numeric tolerance");
    check->add_option("--perm", perm_file, "JSON qubit correspondence file");

    auto* stats = app.add_subcommand("stats", "Report gate counts");
    stats->add_option("inputs", inputs, "OpenQASM 2.0 input files")->required();
    stats->add_flag("--json", as_json, "emit a JSON array");

    CLI11_PARSE(app, argc, argv);

    if (*opt) return run_optimize(input, output, passes, validate_dim, report_path);
    if (*map) return run_map(input, arch, output, perm_out);
    if (*check) return run_check_equiv(input, b_input, mode, tol, perm_file);
    return run_stats(inputs, as_json);
}
