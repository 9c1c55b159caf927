// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "givens.hpp"

namespace qbasis {

namespace {

constexpr double kPruneAngle = 1e-14;

std::size_t max_layer(const std::vector<Gate>& gates) {
    std::size_t m = 0;
    for (const Gate& g : gates) m = std::max(m, g.layer);
    return m;
}

// Append src gates with qubits renumbered through `map` (1-based, index 0
// unused) and layers shifted so the block starts after `layer_base`.
// With extra_control every gate gains a closed control and its own layer,
// since the shared control qubit forbids intra-layer parallelism.
// Returns the new maximum layer.
std::size_t splice(std::vector<Gate>& dst, const std::vector<Gate>& src,
                   const std::vector<std::size_t>& map,
                   std::size_t layer_base,
                   std::size_t extra_control = 0) {
    std::size_t top = layer_base;
    for (Gate g : src) {
        for (std::size_t& q : g.qubits) q = map[q];
        for (std::size_t& q : g.controls) q = map[q];
        if (extra_control) {
            g.controls.push_back(extra_control);
            g.layer = ++top;
        } else {
            g.layer += layer_base + 1;
            top = std::max(top, g.layer);
        }
        dst.push_back(std::move(g));
    }
    return top;
}

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> map(n + 1);
    for (std::size_t q = 1; q <= n; ++q) map[q] = q;
    return map;
}

// H = X * RY(pi/2); emitted in application order.
void emit_h(std::vector<Gate>& gates, std::size_t q, std::size_t layer) {
    gates.push_back({Op::RY, {q}, std::numbers::pi / 2.0, {}, layer});
    gates.push_back({Op::X, {q}, 0.0, {}, layer});
}

void check_prep(const Circuit& prep, std::size_t n, const char* what) {
    if (prep.n_working != n || prep.n_ancilla != 0) {
        throw invalid_input_error(std::string(what) +
                                  ": preparation circuit register mismatch");
    }
}

}  // namespace

void TruncationPolicy::validate() const {
    if (!(epsilon >= 0.0) || !(epsilon < 0.5)) {
        throw invalid_input_error("epsilon must lie in [0, 0.5)");
    }
}

std::vector<Gate> emit_adjacent_givens(std::size_t q, double theta,
                                       double phi_prev, double phi_q,
                                       std::size_t layer) {
    if (q < 2) {
        throw invalid_input_error("emit_adjacent_givens: q must be >= 2");
    }
    std::vector<Gate> gates;
    if (std::abs(theta) >= kPruneAngle) {
        gates.push_back({Op::Cnot, {q, q - 1}, 0.0, {}, layer});
        gates.push_back({Op::Cry, {q - 1, q}, 2.0 * theta, {}, layer});
        gates.push_back({Op::Cnot, {q, q - 1}, 0.0, {}, layer});
    }
    if (std::abs(phi_q) >= kPruneAngle) {
        gates.push_back({Op::Phase, {q}, -phi_q, {}, layer});
    }
    if (std::abs(phi_prev) >= kPruneAngle) {
        gates.push_back({Op::Phase, {q - 1}, -phi_prev, {}, layer});
    }
    return gates;
}

std::pair<Circuit, SynthesisReport> synth_unitary(const CMatrix& u,
                                                  double tol) {
    const QrResult qr = givens_qr(u, tol);
    if (qr.residual > std::max(tol, 1e-10)) {
        throw internal_error("Givens elimination left a non-trivial remainder");
    }
    const std::size_t n = u.rows;
    const std::size_t n_layers = 2 * n - 3 > 0 ? 2 * n - 3 : 1;
    Circuit c;
    c.n_working = n;
    if (std::abs(qr.final_phase) >= kPruneAngle) {
        c.gates.push_back({Op::Phase, {n}, qr.final_phase, {}, 0});
    }
    // u = g_1^dag ... g_K^dag D: the diagonal acts first, then the steps
    // in reverse elimination order. Layer tags are flipped to stay
    // non-decreasing while preserving the parallel schedule.
    for (auto it = qr.steps.rbegin(); it != qr.steps.rend(); ++it) {
        const std::size_t tag = n_layers - it->layer + 1;
        std::vector<Gate> block =
            emit_adjacent_givens(it->q, it->theta, it->phi_p, it->phi_q, tag);
        c.gates.insert(c.gates.end(), block.begin(), block.end());
    }
    c.validate();
    SynthesisReport report;
    report.n = n;
    report.givens_count = n * (n - 1) / 2;
    report.phase_count = 1;
    report.givens_layer_depth = depth(c, DepthMode::GivensLayers);
    report.s = n;
    report.r = n;
    return {std::move(c), report};
}

TruncationResult truncate_singular_values(const std::vector<double>& sigma,
                                          const TruncationPolicy& policy) {
    policy.validate();
    TruncationResult out;
    double prev = 2.0;
    for (double v : sigma) {
        if (v > 1.0 + 1e-12) {
            throw invalid_input_error(
                "singular value exceeds 1: input is not a contraction");
        }
        v = std::min(v, 1.0);
        if (v < 0.0 || v > prev + 1e-15) {
            throw invalid_input_error(
                "singular values must be non-increasing in [0, 1]");
        }
        prev = v;
        double t = v;
        if (v >= 1.0 - policy.epsilon) t = 1.0;
        else if (v <= policy.epsilon) t = 0.0;
        out.bound += std::abs(t - v);
        if (t == 1.0) ++out.s;
        if (t > 0.0) ++out.r;
        out.sigma_tilde.push_back(t);
    }
    return out;
}

std::pair<BlockEncodedCircuit, SynthesisReport> synth_nonunitary(
    const CMatrix& u, const TruncationPolicy& policy, double tol) {
    policy.validate();
    if (!u.is_square() || u.rows < 2) {
        throw invalid_input_error("synth_nonunitary: need a square matrix, n >= 2");
    }
    const std::size_t n = u.rows;
    const SvdResult dec = svd(u);
    const TruncationResult tr = truncate_singular_values(dec.sigma, policy);
    const std::size_t s = tr.s;
    const std::size_t r = tr.r;
    const bool zero_band = r < n;
    const std::size_t n_anc = (r - s) + (zero_band ? 1 : 0);

    auto [right, right_report] = synth_unitary(dec.R, tol);
    auto [left, left_report] = synth_unitary(dec.L, tol);

    BlockEncodedCircuit be;
    be.s = s;
    be.r = r;
    be.truncation_bound = tr.bound;
    be.circuit.n_working = n;
    be.circuit.n_ancilla = n_anc;

    const std::vector<std::size_t> map = identity_map(n);
    std::size_t top = splice(be.circuit.gates, right.gates, map, 0);

    SynthesisReport report;
    report.n = n;
    report.givens_count = right_report.givens_count + left_report.givens_count;
    report.phase_count = right_report.phase_count + left_report.phase_count;
    report.givens_layer_depth =
        right_report.givens_layer_depth + left_report.givens_layer_depth;
    report.s = s;
    report.r = r;
    report.ancilla_count = n_anc;
    report.truncation_bound = tr.bound;

    if (r > s) {
        ++top;
        for (std::size_t i = s + 1; i <= r; ++i) {
            const std::size_t anc = n + (i - s);
            be.ancilla_map[i] = anc;
            const double angle = 2.0 * std::acos(tr.sigma_tilde[i - 1]);
            be.circuit.gates.push_back({Op::Cry, {i, anc}, angle, {}, top});
            ++report.cry_count;
        }
    }
    if (zero_band) {
        const std::size_t anc = n + n_anc;
        be.circuit.gates.push_back({Op::X, {anc}, 0.0, {}, ++top});
        Gate mcx;
        mcx.op = Op::McxOpen;
        for (std::size_t q = r + 1; q <= n; ++q) mcx.qubits.push_back(q);
        mcx.qubits.push_back(anc);
        mcx.layer = ++top;
        report.mcx_width = n - r;
        be.circuit.gates.push_back(std::move(mcx));
    }
    splice(be.circuit.gates, left.gates, map, top);
    for (std::size_t a = 1; a <= n_anc; ++a) {
        be.circuit.postselect.push_back(n + a);
    }
    be.circuit.validate();
    return {std::move(be), report};
}

BlockEncodedCircuit synth_xi(const CMatrix& u_overlap,
                             const TruncationPolicy& policy) {
    return synth_nonunitary(u_overlap, policy).first;
}

BlockEncodedCircuit synth_xi_from_bases(const CMatrix& psi_basis,
                                        const CMatrix& phi_basis,
                                        const TruncationPolicy& policy) {
    if (psi_basis.rows != phi_basis.rows ||
        psi_basis.cols != phi_basis.cols) {
        throw invalid_input_error("basis matrices must have matching shape");
    }
    return synth_xi(psi_basis.adjoint() * phi_basis, policy);
}

Circuit adjoint_circuit(const Circuit& c) {
    Circuit out;
    out.n_working = c.n_working;
    out.n_ancilla = c.n_ancilla;
    out.postselect = c.postselect;
    const std::size_t top = max_layer(c.gates);
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        Gate g = *it;
        if (g.op == Op::RY || g.op == Op::Cry || g.op == Op::Phase) {
            g.angle = -g.angle;
        }
        g.layer = top - g.layer;
        out.gates.push_back(std::move(g));
    }
    return out;
}

Circuit build_swap_test(const BlockEncodedCircuit& xi, std::size_t n) {
    const std::size_t a = xi.circuit.n_ancilla;
    if (xi.circuit.n_working != n) {
        throw invalid_input_error("build_swap_test: register mismatch");
    }
    Circuit c;
    c.n_working = 1 + 2 * n;
    c.n_ancilla = a;
    // Qubit 1: swap control. 2..n+1: bra register. n+2..2n+1: ket
    // register. Trailing a qubits: block ancillas.
    std::vector<std::size_t> map(n + a + 1);
    for (std::size_t q = 1; q <= n; ++q) map[q] = 1 + n + q;
    for (std::size_t q = 1; q <= a; ++q) map[n + q] = 1 + 2 * n + q;
    std::size_t top = 0;
    emit_h(c.gates, 1, top);
    top = splice(c.gates, xi.circuit.gates, map, top);
    for (std::size_t q = 1; q <= n; ++q) {
        const std::size_t bra = 1 + q;
        const std::size_t ket = 1 + n + q;
        c.gates.push_back({Op::Cnot, {ket, bra}, 0.0, {}, ++top});
        c.gates.push_back({Op::Cnot, {bra, ket}, 0.0, {1}, ++top});
        c.gates.push_back({Op::Cnot, {ket, bra}, 0.0, {}, ++top});
    }
    emit_h(c.gates, 1, ++top);
    c.validate();
    return c;
}

Circuit build_alt_swap_test(const BlockEncodedCircuit& xi, std::size_t n) {
    const std::size_t a = xi.circuit.n_ancilla;
    if (a == 0) return build_swap_test(xi, n);
    Circuit c = build_swap_test(xi, n);
    // The flag qubit goes last; it is flipped when the swap control is 1
    // and every block ancilla is 0, folding the ancilla pattern into a
    // single swap-control measurement.
    c.n_ancilla = a + 1;
    const std::size_t flag = c.n_total();
    const std::size_t top = max_layer(c.gates);
    // The final H pair on the swap control occupies the last layer; the
    // flag flip goes just before it.
    std::vector<Gate> tail(c.gates.end() - 2, c.gates.end());
    c.gates.resize(c.gates.size() - 2);
    Gate mcx;
    mcx.op = Op::McxOpen;
    for (std::size_t q = 1; q <= a; ++q) {
        mcx.qubits.push_back(1 + 2 * n + q);
    }
    mcx.qubits.push_back(flag);
    mcx.controls.push_back(1);
    mcx.layer = top;
    c.gates.push_back(std::move(mcx));
    for (Gate& g : tail) {
        g.layer = top + 1;
        c.gates.push_back(std::move(g));
    }
    c.validate();
    return c;
}

Circuit build_hadamard_test(const Circuit& u_psi_prep,
                            const Circuit& u_phi_prep,
                            const BlockEncodedCircuit& xi, OverlapPart part) {
    const std::size_t n = xi.circuit.n_working;
    const std::size_t a = xi.circuit.n_ancilla;
    check_prep(u_psi_prep, n, "build_hadamard_test");
    check_prep(u_phi_prep, n, "build_hadamard_test");
    Circuit c;
    c.n_working = 1 + n;
    c.n_ancilla = a;
    // Qubit 1: control. 2..n+1: working register. Trailing: block ancillas.
    std::vector<std::size_t> map(n + a + 1);
    for (std::size_t q = 1; q <= n + a; ++q) map[q] = 1 + q;
    std::size_t top = 0;
    emit_h(c.gates, 1, top);
    top = splice(c.gates, u_phi_prep.gates, map, top, 1);
    top = splice(c.gates, xi.circuit.gates, map, top, 1);
    top = splice(c.gates, adjoint_circuit(u_psi_prep).gates, map, top, 1);
    if (part == OverlapPart::Imag) {
        c.gates.push_back({Op::Phase, {1}, std::numbers::pi / 2.0, {}, ++top});
    }
    emit_h(c.gates, 1, ++top);
    c.validate();
    return c;
}

}  // namespace qbasis
