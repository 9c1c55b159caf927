// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "qbasis.h"

#include <cstring>
#include <string>

#include "core/circuit.hpp"
#include "core/cmatrix.hpp"
#include "core/errors.hpp"
#include "core/givens.hpp"
#include "core/io.hpp"
#include "core/overlap.hpp"
#include "core/synth.hpp"
#include "core/verify.hpp"
#include "json.hpp"

struct qb_matrix {
    qbasis::CMatrix m;
};

struct qb_circuit {
    qbasis::Circuit c;
};

namespace {

thread_local std::string g_last_error;

int set_error(const std::exception& e, int code) {
    g_last_error = e.what();
    return code;
}

template <typename F>
int guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return QB_OK;
    } catch (const qbasis::invalid_input_error& e) {
        return set_error(e, QB_ERR_INVALID_INPUT);
    } catch (const qbasis::impossible_outcome_error& e) {
        return set_error(e, QB_ERR_IMPOSSIBLE_OUTCOME);
    } catch (const std::exception& e) {
        return set_error(e, QB_ERR_INTERNAL);
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return QB_ERR_INVALID_INPUT;
    }
    return QB_OK;
}

}  // namespace

extern "C" {

const char* qb_last_error(void) { return g_last_error.c_str(); }

void qb_string_free(char* s) { delete[] s; }

int qb_matrix_parse(const char* json, qb_matrix** out) {
    if (int rc = require(json && out, "null argument")) return rc;
    return guarded([&] { *out = new qb_matrix{qbasis::matrix_from_json(json)}; });
}

int qb_matrix_dims(const qb_matrix* m, size_t* rows, size_t* cols) {
    if (int rc = require(m && rows && cols, "null argument")) return rc;
    *rows = m->m.rows;
    *cols = m->m.cols;
    return QB_OK;
}

void qb_matrix_free(qb_matrix* m) { delete m; }

int qb_circuit_parse(const char* json, qb_circuit** out) {
    if (int rc = require(json && out, "null argument")) return rc;
    return guarded(
        [&] { *out = new qb_circuit{qbasis::circuit_from_json(json)}; });
}

int qb_circuit_to_json(const qb_circuit* c, char** out_json) {
    if (int rc = require(c && out_json, "null argument")) return rc;
    return guarded(
        [&] { *out_json = copy_string(qbasis::circuit_to_json(c->c)); });
}

void qb_circuit_free(qb_circuit* c) { delete c; }

int qb_qr(const qb_matrix* m, double tolerance, char** out_json) {
    if (int rc = require(m && out_json, "null argument")) return rc;
    return guarded([&] {
        const qbasis::QrResult qr = qbasis::givens_qr(m->m, tolerance);
        nlohmann::json out;
        out["n"] = m->m.rows;
        nlohmann::json steps = nlohmann::json::array();
        for (const qbasis::PhasedGivens& g : qr.steps) {
            nlohmann::json js;
            js["p"] = g.p;
            js["q"] = g.q;
            js["theta"] = g.theta;
            js["phi_p"] = g.phi_p;
            js["phi_q"] = g.phi_q;
            js["layer"] = g.layer;
            steps.push_back(std::move(js));
        }
        out["steps"] = std::move(steps);
        out["final_phase"] = qr.final_phase;
        out["residual"] = qr.residual;
        *out_json = copy_string(out.dump(2));
    });
}

int qb_svd(const qb_matrix* m, char** out_json) {
    if (int rc = require(m && out_json, "null argument")) return rc;
    return guarded([&] {
        const qbasis::SvdResult dec = qbasis::svd(m->m);
        nlohmann::json out;
        out["L"] = nlohmann::json::parse(qbasis::matrix_to_json(dec.L));
        out["sigma"] = dec.sigma;
        out["R"] = nlohmann::json::parse(qbasis::matrix_to_json(dec.R));
        *out_json = copy_string(out.dump(2));
    });
}

namespace {

nlohmann::json report_to_json(const qbasis::SynthesisReport& r,
                              const qbasis::Circuit& c) {
    nlohmann::json out;
    out["s"] = r.s;
    out["r"] = r.r;
    out["ancillas"] = r.ancilla_count;
    out["depth_givens_layers"] = r.givens_layer_depth;
    nlohmann::json counts;
    counts["givens"] = r.givens_count;
    counts["phase"] = r.phase_count;
    counts["cry"] = r.cry_count;
    counts["mcx_width"] = r.mcx_width;
    counts["emitted"] = c.gates.size();
    out["gate_counts"] = std::move(counts);
    out["truncation_bound"] = r.truncation_bound;
    return out;
}

}  // namespace

int qb_synth_unitary(const qb_matrix* m, double tolerance,
                     qb_circuit** out_circuit, char** out_report_json) {
    if (int rc = require(m && out_circuit && out_report_json, "null argument")) {
        return rc;
    }
    return guarded([&] {
        auto [circuit, report] = qbasis::synth_unitary(m->m, tolerance);
        *out_report_json = copy_string(report_to_json(report, circuit).dump(2));
        *out_circuit = new qb_circuit{std::move(circuit)};
    });
}

int qb_synth_nonunitary(const qb_matrix* m, double epsilon, double tolerance,
                        qb_circuit** out_circuit, char** out_report_json) {
    if (int rc = require(m && out_circuit && out_report_json, "null argument")) {
        return rc;
    }
    return guarded([&] {
        qbasis::TruncationPolicy policy;
        policy.epsilon = epsilon;
        auto [be, report] = qbasis::synth_nonunitary(m->m, policy, tolerance);
        *out_report_json =
            copy_string(report_to_json(report, be.circuit).dump(2));
        *out_circuit = new qb_circuit{std::move(be.circuit)};
    });
}

int qb_overlap(const char* psi_json, const char* phi_json,
               const qb_matrix* overlap_matrix, const char* method,
               double epsilon, double tolerance, uint64_t shots,
               uint64_t seed, char** out_json) {
    if (int rc = require(psi_json && phi_json && overlap_matrix && method &&
                             out_json,
                         "null argument")) {
        return rc;
    }
    return guarded([&] {
        qbasis::OverlapOptions opt;
        opt.method = qbasis::overlap_method_from_name(method);
        opt.epsilon = epsilon;
        opt.tolerance = tolerance;
        opt.shots = shots;
        opt.seed = seed;
        const qbasis::OverlapInput psi = qbasis::OverlapInput::parse(psi_json);
        const qbasis::OverlapInput phi = qbasis::OverlapInput::parse(phi_json);
        *out_json = copy_string(
            qbasis::compute_overlap(psi, phi, overlap_matrix->m, opt));
    });
}

int qb_verify(size_t n, size_t trials, uint64_t seed, int inject_fault,
              char** out_json, int* all_pass) {
    if (int rc = require(out_json && all_pass, "null argument")) return rc;
    return guarded([&] {
        qbasis::VerifyOptions opt;
        opt.n = n;
        opt.trials = trials;
        opt.seed = seed;
        opt.inject_fault = inject_fault != 0;
        const qbasis::VerifySummary summary = qbasis::run_verification(opt);
        *out_json = copy_string(qbasis::verify_summary_to_json(summary));
        *all_pass = summary.all_pass ? 1 : 0;
    });
}

}  // extern "C"
