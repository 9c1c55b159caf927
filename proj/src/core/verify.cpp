// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "fock.hpp"
#include "givens.hpp"
#include "json.hpp"
#include "random_matrix.hpp"
#include "sim.hpp"
#include "synth.hpp"

namespace qbasis {

namespace {

std::size_t trial_size(std::size_t n_max, std::size_t trial) {
    return 2 + trial % (n_max - 1);
}

// Unnormalized ancilla-projected realization of a block-encoded circuit.
CMatrix projected_realization(const Circuit& c) {
    const std::size_t n = c.n_working;
    const std::size_t dim = std::size_t{1} << n;
    CMatrix out(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        StateVector s =
            StateVector::basis(c.n_total(), col << c.n_ancilla);
        s.apply_circuit(c);
        for (std::uint64_t row = 0; row < dim; ++row) {
            out(row, col) = s.amplitudes[row << c.n_ancilla];
        }
    }
    return out;
}

SuiteResult qr_roundtrip(const VerifyOptions& opt) {
    SuiteResult r{"qr_roundtrip", opt.trials, 0.0, 1e-11, true};
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = trial_size(opt.n, t);
        const CMatrix u = random_unitary(n, opt.seed + t);
        const QrResult qr = givens_qr(u);
        CMatrix rec(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            rec(i, i) = (i == n - 1)
                            ? std::exp(cplx(0.0, -qr.final_phase))
                            : cplx(1.0, 0.0);
        }
        for (auto it = qr.steps.rbegin(); it != qr.steps.rend(); ++it) {
            rec = givens_dense(*it, n).adjoint() * rec;
        }
        r.worst = std::max(r.worst, (rec - u).max_abs());
        r.worst = std::max(r.worst, qr.residual);
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

SuiteResult wedge_multiplicative(const VerifyOptions& opt) {
    SuiteResult r{"wedge_multiplicative", opt.trials, 0.0, 1e-10, true};
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = trial_size(opt.n, t);
        const CMatrix a = random_contraction(n, opt.seed + 3 * t);
        const CMatrix b = random_unitary(n, opt.seed + 3 * t + 1);
        const double d =
            (wedge_oracle(a * b) - wedge_oracle(a) * wedge_oracle(b)).max_abs();
        r.worst = std::max(r.worst, d);
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

SuiteResult thouless_equivalence(const VerifyOptions& opt) {
    SuiteResult r{"thouless_equivalence", opt.trials, 0.0, 1e-8, true};
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = trial_size(opt.n, t);
        const CMatrix u = random_unitary(n, opt.seed + 7 * t + 5);
        r.worst =
            std::max(r.worst, (thouless_oracle(u) - wedge_oracle(u)).max_abs());
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

SuiteResult encoded_gate_identities(const VerifyOptions& opt) {
    SuiteResult r{"encoded_gate_identities", opt.trials, 0.0, 1e-14, true};
    std::mt19937_64 rng(opt.seed ^ 0xabcdef12u);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const double theta =
            (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 6.0;
        Circuit c;
        c.n_working = 2;
        c.gates.push_back({Op::Cnot, {2, 1}, 0.0, {}, 1});
        c.gates.push_back({Op::Cry, {1, 2}, -2.0 * theta, {}, 1});
        c.gates.push_back({Op::Cnot, {2, 1}, 0.0, {}, 1});
        CMatrix expect = CMatrix::identity(4);
        expect(1, 1) = std::cos(theta);
        expect(1, 2) = -std::sin(theta);
        expect(2, 1) = std::sin(theta);
        expect(2, 2) = std::cos(theta);
        r.worst = std::max(r.worst, (circuit_to_matrix(c) - expect).max_abs());

        const double phi =
            (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 6.0;
        Circuit p;
        p.n_working = 1;
        p.gates.push_back({Op::Phase, {1}, phi, {}, 1});
        CMatrix pe = CMatrix::identity(2);
        pe(1, 1) = std::exp(cplx(0.0, -phi));
        r.worst = std::max(r.worst, (circuit_to_matrix(p) - pe).max_abs());
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

SuiteResult block_encoding_exactness(const VerifyOptions& opt) {
    SuiteResult r{"block_encoding_exactness", opt.trials, 0.0, 1e-10, true};
    TruncationPolicy policy;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = trial_size(opt.n, t);
        const CMatrix u = random_contraction(n, opt.seed + 11 * t + 3);
        auto [be, report] = synth_nonunitary(u, policy);
        if (opt.inject_fault && t == 0) {
            for (Gate& g : be.circuit.gates) {
                if (g.op == Op::Cry) {
                    g.angle += 1e-3;
                    break;
                }
            }
        }
        const SvdResult dec = svd(u);
        const TruncationResult tr =
            truncate_singular_values(dec.sigma, policy);
        CMatrix sd(n, n);
        for (std::size_t i = 0; i < n; ++i) sd(i, i) = tr.sigma_tilde[i];
        const CMatrix u_tilde = dec.L * sd * dec.R;
        const double d =
            (projected_realization(be.circuit) - wedge_oracle(u_tilde))
                .max_abs();
        r.worst = std::max(r.worst, d);
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

SuiteResult truncation_bound(const VerifyOptions& opt) {
    // worst = largest (measured deviation - bound); pass when <= 0 slack.
    SuiteResult r{"truncation_bound", opt.trials, 0.0, 1e-12, true};
    TruncationPolicy policy;
    policy.epsilon = 1e-2;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = trial_size(opt.n, t);
        const CMatrix u = random_contraction(n, opt.seed + 13 * t + 7);
        const SvdResult dec = svd(u);
        const TruncationResult tr =
            truncate_singular_values(dec.sigma, policy);
        CMatrix sd(n, n);
        for (std::size_t i = 0; i < n; ++i) sd(i, i) = tr.sigma_tilde[i];
        const CMatrix u_tilde = dec.L * sd * dec.R;
        const double measured =
            two_norm(wedge_oracle(u) - wedge_oracle(u_tilde));
        r.worst = std::max(r.worst, measured - tr.bound);
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

}  // namespace

VerifySummary run_verification(const VerifyOptions& opt) {
    if (opt.n < 2 || opt.n > 6) {
        throw invalid_input_error("verification mode count must be in [2, 6]");
    }
    VerifySummary summary;
    if (opt.trials == 0) {
        return summary;
    }
    summary.suites.push_back(qr_roundtrip(opt));
    summary.suites.push_back(wedge_multiplicative(opt));
    summary.suites.push_back(thouless_equivalence(opt));
    summary.suites.push_back(encoded_gate_identities(opt));
    summary.suites.push_back(block_encoding_exactness(opt));
    summary.suites.push_back(truncation_bound(opt));
    for (const SuiteResult& s : summary.suites) {
        summary.all_pass = summary.all_pass && s.pass;
    }
    return summary;
}

std::string verify_summary_to_json(const VerifySummary& summary) {
    nlohmann::json out;
    out["all_pass"] = summary.all_pass;
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult& s : summary.suites) {
        nlohmann::json js;
        js["name"] = s.name;
        js["trials"] = s.trials;
        js["worst"] = s.worst;
        js["tolerance"] = s.tolerance;
        js["pass"] = s.pass;
        suites.push_back(std::move(js));
    }
    out["suites"] = std::move(suites);
    return out.dump(2);
}

}  // namespace qbasis
