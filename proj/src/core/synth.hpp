// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_SYNTH_HPP
#define QBASIS_SYNTH_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "circuit.hpp"
#include "cmatrix.hpp"

namespace qbasis {

// Singular-value rounding threshold. epsilon < 0.5 keeps the three bands
// (round to 1, keep, round to 0) disjoint.
struct TruncationPolicy {
    double epsilon = 1e-6;
    void validate() const;
};

struct SynthesisReport {
    std::size_t n = 0;
    std::size_t givens_count = 0;       // rotations before pruning, n(n-1)/2
    std::size_t phase_count = 0;        // trailing phase gates before pruning
    std::size_t cry_count = 0;          // singular-value encoding rotations
    std::size_t mcx_width = 0;          // open controls on the zero-band gate
    std::size_t givens_layer_depth = 0;
    std::size_t s = 0;                  // singular values rounded to 1
    std::size_t r = 0;                  // rank after truncation
    std::size_t ancilla_count = 0;
    double truncation_bound = 0.0;
};

struct BlockEncodedCircuit {
    Circuit circuit;
    std::size_t s = 0;
    std::size_t r = 0;
    // Singular-value index (1-based) -> ancilla qubit in the combined
    // register, for indices with sigma_tilde strictly between 0 and 1.
    std::map<std::size_t, std::size_t> ancilla_map;
    double truncation_bound = 0.0;
};

struct TruncationResult {
    std::vector<double> sigma_tilde;
    std::size_t s = 0;
    std::size_t r = 0;
    double bound = 0.0;
};

// Gates realizing the adjoint of one phased Givens step on modes q-1, q:
// P_{q-1}(-phi_prev) P_q(-phi_q) R(-theta) as an operator product, emitted
// in application order. Zero-angle gates are pruned.
std::vector<Gate> emit_adjacent_givens(std::size_t q, double theta,
                                       double phi_prev, double phi_q,
                                       std::size_t layer);

// Circuit on n working qubits whose dense realization is wedge_oracle(u).
std::pair<Circuit, SynthesisReport> synth_unitary(
    const CMatrix& u, double tol = kDefaultTolerance);

// Piecewise rounding: sigma >= 1 - eps -> 1, sigma <= eps -> 0, else kept.
// sigma must be non-increasing in [0, 1] (overshoot above 1 by <= 1e-12 is
// clamped). bound = sum |sigma_tilde - sigma|.
TruncationResult truncate_singular_values(const std::vector<double>& sigma,
                                          const TruncationPolicy& policy);

// Block-encoded circuit whose ancilla-projected action is
// wedge_oracle(u_tilde), where u_tilde is u with truncated singular values.
std::pair<BlockEncodedCircuit, SynthesisReport> synth_nonunitary(
    const CMatrix& u, const TruncationPolicy& policy,
    double tol = kDefaultTolerance);

// Block encoding of the overlap operator built from u_overlap_ij =
// <psi_i | phi_j>, or from two basis matrices via psi^dag phi.
BlockEncodedCircuit synth_xi(const CMatrix& u_overlap,
                             const TruncationPolicy& policy);
BlockEncodedCircuit synth_xi_from_bases(const CMatrix& psi_basis,
                                        const CMatrix& phi_basis,
                                        const TruncationPolicy& policy);

// Reverse of a circuit: gates inverted and re-ordered so the dense
// realization is the adjoint of the input's.
Circuit adjoint_circuit(const Circuit& c);

// Swap-test interference circuit. Register order: swap control (qubit 1),
// bra register (n), ket register (n), block ancillas of xi. The block
// encoding acts on the ket register; controlled swaps exchange the two
// n-qubit registers.
Circuit build_swap_test(const BlockEncodedCircuit& xi, std::size_t n);

// Swap test with one extra flag qubit set by an open-controlled X from the
// block ancillas (closed-controlled on the swap qubit), so a single
// measurement on the swap qubit carries the ancilla information. With no
// block ancillas this is exactly build_swap_test.
Circuit build_alt_swap_test(const BlockEncodedCircuit& xi, std::size_t n);

enum class OverlapPart { Real, Imag };

// Hadamard-test circuit on 1 control + n working + block ancillas:
// H, controlled-U_phi, controlled block encoding, controlled-U_psi
// adjoint, optional quarter phase for the imaginary part, H. The control
// statistics give P(0) - P(1) = Re or Im <0| U_psi^dag Xi U_phi |0>.
Circuit build_hadamard_test(const Circuit& u_psi_prep,
                            const Circuit& u_phi_prep,
                            const BlockEncodedCircuit& xi, OverlapPart part);

}  // namespace qbasis

#endif
