// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_SIM_HPP
#define QBASIS_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "circuit.hpp"
#include "cmatrix.hpp"
#include "fock.hpp"

namespace qbasis {

// Dense state vector on m qubits (qubit 1 is the most significant bit).
struct StateVector {
    std::size_t m = 0;
    std::vector<cplx> amplitudes;
    // Accumulated probability of all post-selected outcomes so far.
    double norm_tracking = 1.0;

    explicit StateVector(std::size_t m_qubits);
    static StateVector basis(std::size_t m_qubits, std::uint64_t index);
    // Basis state for an occupation pattern, with m - n ancillas appended
    // in |0> after the modes.
    static StateVector prepare_basis(const OccupationState& occ, std::size_t m_qubits);

    double norm() const;

    void apply_gate(const Gate& g);
    void apply_circuit(const Circuit& c);  // gates only, no post-selection

    // Probability that the given qubits (1-based) are measured with the
    // given outcomes, without collapsing the state.
    double outcome_probability(const std::map<std::size_t, int>& outcomes) const;

    // Project the given qubits onto |0> and renormalize. Throws
    // impossible_outcome_error if the retained probability underflows.
    // Returns the probability of the projected outcome.
    double postselect_zero(const std::vector<std::size_t>& qubits);

    // Deterministic sampling of measurement outcomes for the listed
    // qubits (most significant first). Returns counts keyed by the packed
    // outcome bits.
    std::map<std::uint64_t, std::uint64_t> sample(
        const std::vector<std::size_t>& qubits, std::uint64_t shots,
        std::uint64_t seed) const;
};

// Run the gates, post-select the circuit's ancillas on 0, and return the
// working-register state. success_probability receives the post-selection
// probability.
StateVector run_postselected(const Circuit& c, const StateVector& input,
                             double* success_probability = nullptr);

}  // namespace qbasis

#endif
