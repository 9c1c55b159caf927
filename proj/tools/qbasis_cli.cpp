// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Command-line front end. Links only the C API.

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbasis.h"

namespace {

constexpr int kExitInvalidInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitInvalidInput);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << output_path << "\n";
        std::exit(kExitInvalidInput);
    }
    f << text << "\n";
}

// UTC timestamp spliced into reports of non-verify commands; verify
// output must stay byte-identical between runs.
std::string timestamp_utc() {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string with_timestamp(const std::string& json_text) {
    // Reports are objects; splice the field before the closing brace.
    const std::size_t pos = json_text.rfind('}');
    if (pos == std::string::npos || json_text.find('{') == pos) {
        return json_text;
    }
    return json_text.substr(0, pos) + ",\n  \"generated_at\": \"" +
           timestamp_utc() + "\"\n}";
}

[[noreturn]] void fail(int status) {
    std::cerr << "error: " << qb_last_error() << "\n";
    std::exit(status);
}

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { qb_string_free(s); }
};

struct MatrixGuard {
    qb_matrix* m = nullptr;
    ~MatrixGuard() { qb_matrix_free(m); }
};

struct CircuitGuard {
    qb_circuit* c = nullptr;
    ~CircuitGuard() { qb_circuit_free(c); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fermionic basis-rotation circuit compiler and simulator"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string output;
    std::string method = "swap";
    double epsilon = 1e-6;
    double tolerance = 1e-10;
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    std::size_t verify_n = 4;
    std::size_t trials = 20;
    bool inject_fault = false;

    auto add_common = [&](CLI::App* cmd, std::size_t n_inputs) {
        if (n_inputs > 0) {
            cmd->add_option("--input", inputs, "Input JSON file(s)")
                ->required()
                ->expected(static_cast<int>(n_inputs));
        }
        cmd->add_option("--output", output, "Output file (default stdout)");
        cmd->add_option("--tolerance", tolerance,
                        "Unitarity/contraction validation tolerance");
    };

    CLI::App* qr = app.add_subcommand("qr", "Phased-Givens QR of a unitary");
    add_common(qr, 1);

    CLI::App* svd_cmd = app.add_subcommand("svd", "Singular value decomposition");
    add_common(svd_cmd, 1);

    CLI::App* su = app.add_subcommand("synth-unitary",
                                      "Basis-rotation circuit for a unitary");
    add_common(su, 1);

    CLI::App* sn = app.add_subcommand(
        "synth-nonunitary", "Block-encoded circuit for a contraction");
    add_common(sn, 1);
    sn->add_option("--epsilon", epsilon, "Singular-value rounding threshold");

    CLI::App* ov = app.add_subcommand(
        "overlap", "State overlap via an interference circuit");
    ov->add_option("--input", inputs,
                   "psi state/circuit, phi state/circuit, overlap matrix")
        ->required()
        ->expected(3);
    ov->add_option("--output", output, "Output file (default stdout)");
    ov->add_option("--method", method, "swap | alt-swap | hadamard");
    ov->add_option("--epsilon", epsilon, "Singular-value rounding threshold");
    ov->add_option("--tolerance", tolerance, "Validation tolerance");
    ov->add_option("--shots", shots, "Finite-shot estimate count (0 = exact)");
    ov->add_option("--seed", seed, "Sampling seed");

    CLI::App* ve = app.add_subcommand("verify", "Oracle-equivalence suites");
    ve->add_option("--n", verify_n, "Largest mode count (2..6)");
    ve->add_option("--trials", trials, "Trials per suite");
    ve->add_option("--seed", seed, "Trial seed");
    ve->add_option("--output", output, "Output file (default stdout)");
    ve->add_flag("--inject-fault", inject_fault,
                 "Perturb one synthesized gate to force a failure");

    CLI11_PARSE(app, argc, argv);

    if (qr->parsed() || svd_cmd->parsed() || su->parsed() || sn->parsed()) {
        MatrixGuard m;
        if (int rc = qb_matrix_parse(read_file(inputs[0]).c_str(), &m.m)) {
            fail(rc);
        }
        if (qr->parsed()) {
            StringGuard out;
            if (int rc = qb_qr(m.m, tolerance, &out.s)) fail(rc);
            emit(with_timestamp(out.s), output);
        } else if (svd_cmd->parsed()) {
            StringGuard out;
            if (int rc = qb_svd(m.m, &out.s)) fail(rc);
            emit(with_timestamp(out.s), output);
        } else {
            CircuitGuard circuit;
            StringGuard report;
            const int rc =
                su->parsed()
                    ? qb_synth_unitary(m.m, tolerance, &circuit.c, &report.s)
                    : qb_synth_nonunitary(m.m, epsilon, tolerance, &circuit.c,
                                          &report.s);
            if (rc) fail(rc);
            StringGuard circuit_json;
            if (int rc2 = qb_circuit_to_json(circuit.c, &circuit_json.s)) {
                fail(rc2);
            }
            // Circuit goes to --output (or stdout); report to stderr-free
            // stdout when a file is given, so both artifacts are available.
            emit(circuit_json.s, output);
            if (!output.empty()) {
                std::cout << with_timestamp(report.s) << "\n";
            } else {
                emit(with_timestamp(report.s), "");
            }
        }
        return 0;
    }

    if (ov->parsed()) {
        MatrixGuard m;
        if (int rc = qb_matrix_parse(read_file(inputs[2]).c_str(), &m.m)) {
            fail(rc);
        }
        StringGuard out;
        const int rc = qb_overlap(read_file(inputs[0]).c_str(),
                                  read_file(inputs[1]).c_str(), m.m,
                                  method.c_str(), epsilon, tolerance, shots,
                                  seed, &out.s);
        if (rc) fail(rc);
        emit(with_timestamp(out.s), output);
        return 0;
    }

    // verify
    StringGuard out;
    int all_pass = 0;
    if (int rc = qb_verify(verify_n, trials, seed, inject_fault ? 1 : 0,
                           &out.s, &all_pass)) {
        fail(rc);
    }
    emit(out.s, output);
    return all_pass ? 0 : 4;
}
