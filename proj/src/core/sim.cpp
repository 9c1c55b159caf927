// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "errors.hpp"

namespace qbasis {

namespace {

std::uint64_t qubit_mask(std::size_t qubit, std::size_t m) {
    return std::uint64_t{1} << (m - qubit);
}

// Uniform double in [0, 1) from the top 53 bits of an mt19937_64 draw,
// identical on every platform.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

StateVector::StateVector(std::size_t m_qubits) : m(m_qubits) {
    if (m_qubits == 0 || m_qubits > 30) {
        throw invalid_input_error("state vector qubit count out of range");
    }
    amplitudes.assign(std::size_t{1} << m_qubits, 0.0);
}

StateVector StateVector::basis(std::size_t m_qubits, std::uint64_t index) {
    StateVector s(m_qubits);
    if (index >= s.amplitudes.size()) {
        throw invalid_input_error("basis index out of range");
    }
    s.amplitudes[index] = 1.0;
    return s;
}

StateVector StateVector::prepare_basis(const OccupationState& occ,
                                       std::size_t m_qubits) {
    if (occ.n_modes > m_qubits) {
        throw invalid_input_error("occupation wider than register");
    }
    return basis(m_qubits, occ.index << (m_qubits - occ.n_modes));
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const cplx& a : amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::apply_gate(const Gate& g) {
    for (std::size_t q : g.support()) {
        if (q < 1 || q > m) {
            throw invalid_input_error("gate qubit out of register range");
        }
    }
    const std::uint64_t tmask = qubit_mask(g.target(), m);
    std::uint64_t closed = 0;
    std::uint64_t open = 0;
    for (std::size_t q : g.controls) closed |= qubit_mask(q, m);
    switch (g.op) {
        case Op::Cnot:
        case Op::Cry:
            closed |= qubit_mask(g.qubits[0], m);
            break;
        case Op::McxOpen:
            for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) {
                open |= qubit_mask(g.qubits[i], m);
            }
            break;
        default:
            break;
    }
    const bool is_x = g.op == Op::X || g.op == Op::Cnot || g.op == Op::McxOpen;
    const bool is_ry = g.op == Op::RY || g.op == Op::Cry;
    const double c = std::cos(g.angle / 2.0);
    const double s = std::sin(g.angle / 2.0);
    const cplx phase = std::exp(cplx(0.0, -g.angle));
    const std::uint64_t dim = amplitudes.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & tmask) continue;
        if ((i & closed) != closed || (i & open) != 0) continue;
        const std::uint64_t j = i | tmask;
        if (is_x) {
            std::swap(amplitudes[i], amplitudes[j]);
        } else if (is_ry) {
            const cplx a0 = amplitudes[i];
            const cplx a1 = amplitudes[j];
            amplitudes[i] = c * a0 - s * a1;
            amplitudes[j] = s * a0 + c * a1;
        } else {
            amplitudes[j] *= phase;
        }
    }
}

void StateVector::apply_circuit(const Circuit& c) {
    if (c.n_total() != m) {
        throw invalid_input_error("circuit size does not match state vector");
    }
    for (const Gate& g : c.gates) apply_gate(g);
}

double StateVector::outcome_probability(
    const std::map<std::size_t, int>& outcomes) const {
    std::uint64_t mask = 0;
    std::uint64_t want = 0;
    for (const auto& [q, v] : outcomes) {
        if (q < 1 || q > m || (v != 0 && v != 1)) {
            throw invalid_input_error("bad measurement outcome specification");
        }
        const std::uint64_t bit = qubit_mask(q, m);
        mask |= bit;
        if (v) want |= bit;
    }
    double acc = 0.0;
    for (std::uint64_t i = 0; i < amplitudes.size(); ++i) {
        if ((i & mask) == want) acc += std::norm(amplitudes[i]);
    }
    return acc;
}

double StateVector::postselect_zero(const std::vector<std::size_t>& qubits) {
    std::uint64_t mask = 0;
    for (std::size_t q : qubits) {
        if (q < 1 || q > m) {
            throw invalid_input_error("post-selection qubit out of range");
        }
        mask |= qubit_mask(q, m);
    }
    double kept = 0.0;
    for (std::uint64_t i = 0; i < amplitudes.size(); ++i) {
        if (i & mask) {
            amplitudes[i] = 0.0;
        } else {
            kept += std::norm(amplitudes[i]);
        }
    }
    if (kept < 1e-300) {
        throw impossible_outcome_error("post-selected outcome has zero probability");
    }
    const double inv = 1.0 / std::sqrt(kept);
    for (cplx& a : amplitudes) a *= inv;
    norm_tracking *= kept;
    return kept;
}

std::map<std::uint64_t, std::uint64_t> StateVector::sample(
    const std::vector<std::size_t>& qubits, std::uint64_t shots,
    std::uint64_t seed) const {
    if (qubits.empty() || qubits.size() > 30) {
        throw invalid_input_error("sample: bad qubit list");
    }
    const std::size_t k = qubits.size();
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::uint64_t i = 0; i < amplitudes.size(); ++i) {
        std::uint64_t packed = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if (i & qubit_mask(qubits[b], m)) {
                packed |= std::uint64_t{1} << (k - 1 - b);
            }
        }
        probs[packed] += std::norm(amplitudes[i]);
    }
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double r = uniform01(rng) * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
        const std::uint64_t outcome = static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cdf.begin(),
                                     static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        ++counts[outcome];
    }
    return counts;
}

StateVector run_postselected(const Circuit& c, const StateVector& input,
                             double* success_probability) {
    if (input.m != c.n_total()) {
        throw invalid_input_error("input state does not match circuit width");
    }
    StateVector full = input;
    full.apply_circuit(c);
    double prob = 1.0;
    if (!c.postselect.empty()) {
        prob = full.postselect_zero(c.postselect);
    }
    if (success_probability) *success_probability = prob;
    if (c.n_ancilla == 0) return full;
    // Only reduce to the working register when every ancilla was projected.
    std::vector<bool> projected(c.n_ancilla, false);
    for (std::size_t q : c.postselect) {
        if (q <= c.n_working) {
            throw internal_error("post-selection on a working qubit");
        }
        projected[q - c.n_working - 1] = true;
    }
    for (bool p : projected) {
        if (!p) return full;
    }
    StateVector out(c.n_working);
    const std::size_t shift = c.n_ancilla;
    for (std::uint64_t x = 0; x < out.amplitudes.size(); ++x) {
        out.amplitudes[x] = full.amplitudes[x << shift];
    }
    return out;
}

}  // namespace qbasis
