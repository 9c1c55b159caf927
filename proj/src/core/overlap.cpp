// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "overlap.hpp"

#include <cmath>

#include "errors.hpp"
#include "io.hpp"
#include "json.hpp"
#include "sim.hpp"
#include "synth.hpp"

namespace qbasis {

namespace {

using nlohmann::json;

ManyBodyState normalized(const ManyBodyState& s) {
    const double nn = s.norm();
    if (nn < 1e-12) {
        throw invalid_input_error("state has zero norm");
    }
    ManyBodyState out = s;
    for (cplx& z : out.amplitudes) z /= nn;
    return out;
}

// Product input |0>_control |bra> |ket> |0...0>_ancilla for the swap-test
// register layout.
StateVector swap_test_input(const ManyBodyState& bra, const ManyBodyState& ket,
                            std::size_t n, std::size_t total) {
    StateVector in(total);
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t shift = total - 1 - 2 * n;
    for (std::uint64_t xp = 0; xp < dim; ++xp) {
        for (std::uint64_t xq = 0; xq < dim; ++xq) {
            in.amplitudes[((xp << n) | xq) << shift] =
                bra.amplitudes[xp] * ket.amplitudes[xq];
        }
    }
    return in;
}

double control_zero_minus_one(const StateVector& s) {
    return s.outcome_probability({{1, 0}}) - s.outcome_probability({{1, 1}});
}

}  // namespace

OverlapMethod overlap_method_from_name(const std::string& name) {
    if (name == "swap") return OverlapMethod::Swap;
    if (name == "alt-swap") return OverlapMethod::AltSwap;
    if (name == "hadamard") return OverlapMethod::Hadamard;
    throw invalid_input_error("unknown overlap method '" + name + "'");
}

OverlapInput OverlapInput::parse(const std::string& json_text) {
    json probe;
    try {
        probe = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw invalid_input_error(std::string("bad input JSON: ") + e.what());
    }
    OverlapInput in;
    if (probe.is_object() && probe.contains("gates")) {
        Circuit c = circuit_from_json(json_text);
        if (c.n_ancilla != 0) {
            throw invalid_input_error(
                "preparation circuits must not use ancillas");
        }
        StateVector s = StateVector::basis(c.n_working, 0);
        s.apply_circuit(c);
        in.state.n_modes = c.n_working;
        in.state.amplitudes = s.amplitudes;
        in.preparation = std::move(c);
    } else {
        in.state = state_from_json(json_text);
    }
    return in;
}

std::string compute_overlap(const OverlapInput& psi, const OverlapInput& phi,
                            const CMatrix& u_overlap,
                            const OverlapOptions& opt) {
    const std::size_t n = u_overlap.rows;
    if (!u_overlap.is_square() || psi.state.n_modes != n ||
        phi.state.n_modes != n) {
        throw invalid_input_error("overlap inputs have mismatched dimensions");
    }
    const ManyBodyState bra = normalized(psi.state);
    const ManyBodyState ket = normalized(phi.state);
    const cplx oracle = state_overlap_oracle(bra, ket, u_overlap);

    TruncationPolicy policy;
    policy.epsilon = opt.epsilon;
    const BlockEncodedCircuit xi = synth_xi(u_overlap, policy);
    const std::size_t a = xi.circuit.n_ancilla;

    json out;
    out["n"] = n;
    out["oracle_real"] = oracle.real();
    out["oracle_imag"] = oracle.imag();
    out["oracle_modulus"] = std::abs(oracle);
    out["truncation_bound"] = xi.truncation_bound;

    if (opt.method == OverlapMethod::Swap) {
        out["method"] = "swap";
        const Circuit st = build_swap_test(xi, n);
        StateVector run = swap_test_input(bra, ket, n, st.n_total());
        run.apply_circuit(st);
        std::map<std::size_t, int> joint{{1, 0}};
        std::map<std::size_t, int> anc;
        for (std::size_t i = 1; i <= a; ++i) {
            joint[1 + 2 * n + i] = 0;
            anc[1 + 2 * n + i] = 0;
        }
        const double p_joint = run.outcome_probability(joint);
        const double p_anc = run.outcome_probability(anc);
        const double modulus = std::sqrt(std::max(0.0, 2.0 * p_joint - p_anc));
        out["p_joint_zero"] = p_joint;
        out["p_ancilla_zero"] = p_anc;
        out["modulus_circuit"] = modulus;
        out["difference"] = std::abs(modulus - std::abs(oracle));
        if (opt.shots > 0) {
            std::vector<std::size_t> qubits{1};
            for (std::size_t i = 1; i <= a; ++i) qubits.push_back(1 + 2 * n + i);
            const auto counts = run.sample(qubits, opt.shots, opt.seed);
            double joint_hat = 0.0;
            double anc_hat = 0.0;
            for (const auto& [outcome, cnt] : counts) {
                const double f =
                    static_cast<double>(cnt) / static_cast<double>(opt.shots);
                const bool anc_zero = (outcome & ((1ull << a) - 1)) == 0;
                if (anc_zero) anc_hat += f;
                if (outcome == 0) joint_hat += f;
            }
            out["shots"] = opt.shots;
            out["modulus_estimate"] =
                std::sqrt(std::max(0.0, 2.0 * joint_hat - anc_hat));
        }
    } else if (opt.method == OverlapMethod::AltSwap) {
        out["method"] = "alt-swap";
        const Circuit plain = build_swap_test(xi, n);
        const Circuit alt = build_alt_swap_test(xi, n);
        StateVector run_plain = swap_test_input(bra, ket, n, plain.n_total());
        run_plain.apply_circuit(plain);
        StateVector run_alt = swap_test_input(bra, ket, n, alt.n_total());
        run_alt.apply_circuit(alt);
        const double p_plain = run_plain.outcome_probability({{1, 0}});
        const double p_alt = run_alt.outcome_probability({{1, 0}});
        // With block ancillas the two control distributions differ by
        // |overlap|^2 / 2. Without them the encoding is unitary, the two
        // circuits coincide, and P(0) = (1 + |overlap|^2) / 2 directly.
        const double modulus =
            a == 0 ? std::sqrt(std::max(0.0, 2.0 * p_plain - 1.0))
                   : std::sqrt(std::max(0.0, 2.0 * (p_plain - p_alt)));
        out["p_control_zero_plain"] = p_plain;
        out["p_control_zero_alt"] = p_alt;
        out["modulus_circuit"] = modulus;
        out["difference"] = std::abs(modulus - std::abs(oracle));
        if (opt.shots > 0) {
            const auto c1 = run_plain.sample({1}, opt.shots, opt.seed);
            const auto c2 = run_alt.sample({1}, opt.shots, opt.seed + 1);
            const double f1 = c1.count(0)
                                  ? static_cast<double>(c1.at(0)) /
                                        static_cast<double>(opt.shots)
                                  : 0.0;
            const double f2 = c2.count(0)
                                  ? static_cast<double>(c2.at(0)) /
                                        static_cast<double>(opt.shots)
                                  : 0.0;
            out["shots"] = opt.shots;
            out["modulus_estimate"] =
                a == 0 ? std::sqrt(std::max(0.0, 2.0 * f1 - 1.0))
                       : std::sqrt(std::max(0.0, 2.0 * (f1 - f2)));
        }
    } else {
        out["method"] = "hadamard";
        double re = 0.0;
        double im = 0.0;
        if (psi.preparation && phi.preparation) {
            const Circuit h_re = build_hadamard_test(
                *psi.preparation, *phi.preparation, xi, OverlapPart::Real);
            const Circuit h_im = build_hadamard_test(
                *psi.preparation, *phi.preparation, xi, OverlapPart::Imag);
            StateVector run_re = StateVector::basis(h_re.n_total(), 0);
            run_re.apply_circuit(h_re);
            StateVector run_im = StateVector::basis(h_im.n_total(), 0);
            run_im.apply_circuit(h_im);
            re = control_zero_minus_one(run_re);
            im = control_zero_minus_one(run_im);
            if (opt.shots > 0) {
                const auto c1 = run_re.sample({1}, opt.shots, opt.seed);
                const auto c2 = run_im.sample({1}, opt.shots, opt.seed + 1);
                auto p0m1 = [&](const std::map<std::uint64_t, std::uint64_t>& c) {
                    const double z = c.count(0) ? static_cast<double>(c.at(0))
                                                : 0.0;
                    return 2.0 * z / static_cast<double>(opt.shots) - 1.0;
                };
                out["shots"] = opt.shots;
                out["real_estimate"] = p0m1(c1);
                out["imag_estimate"] = p0m1(c2);
            }
        } else {
            // Without preparation circuits the interference readout is
            // taken analytically from the simulated block encoding.
            StateVector full(xi.circuit.n_total());
            const std::size_t dim = std::size_t{1} << n;
            for (std::uint64_t x = 0; x < dim; ++x) {
                full.amplitudes[x << a] = ket.amplitudes[x];
            }
            full.apply_circuit(xi.circuit);
            cplx acc = 0.0;
            for (std::uint64_t x = 0; x < dim; ++x) {
                acc += std::conj(bra.amplitudes[x]) * full.amplitudes[x << a];
            }
            re = acc.real();
            im = acc.imag();
        }
        const double modulus = std::hypot(re, im);
        out["real_circuit"] = re;
        out["imag_circuit"] = im;
        out["modulus_circuit"] = modulus;
        out["difference"] = std::abs(cplx(re, im) - oracle);
    }
    return out.dump(2);
}

}  // namespace qbasis
