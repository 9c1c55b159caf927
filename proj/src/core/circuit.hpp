// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_CIRCUIT_HPP
#define QBASIS_CIRCUIT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cmatrix.hpp"

namespace qbasis {

enum class Op { X, RY, Phase, Cnot, Cry, McxOpen };

std::string op_name(Op op);
Op op_from_name(const std::string& name);

// One gate. Qubits are 1-based; qubit q of an m-qubit register sits at
// bit position m - q from the least significant bit.
//   X:        qubits = [target]
//   RY:       qubits = [target], angle t, matrix [[cos t/2, -sin t/2],
//                                                 [sin t/2,  cos t/2]]
//   PHASE:    qubits = [target], angle t, matrix diag(1, exp(-i t))
//   CNOT:     qubits = [control, target]
//   CRY:      qubits = [control, target], RY(angle) on target if control 1
//   MCX_OPEN: qubits = [open controls..., target], X on target if all
//             open controls are 0
// `controls` holds extra closed controls applied on top of any op.
struct Gate {
    Op op = Op::X;
    std::vector<std::size_t> qubits;
    double angle = 0.0;
    std::vector<std::size_t> controls;
    std::size_t layer = 0;

    std::size_t target() const { return qubits.back(); }
    // All qubits the gate touches, including closed controls.
    std::vector<std::size_t> support() const;
};

struct Circuit {
    std::size_t n_working = 0;
    std::size_t n_ancilla = 0;
    std::vector<Gate> gates;
    // Ancilla qubit indices (1-based, in the combined register) that are
    // post-selected on outcome 0 after the circuit runs.
    std::vector<std::size_t> postselect;

    std::size_t n_total() const { return n_working + n_ancilla; }

    // Checks qubit ranges, distinct qubits per gate, non-decreasing layer
    // tags, and that gates sharing a layer either act on pairwise disjoint
    // supports or jointly touch at most 2 qubits.
    void validate() const;
};

enum class DepthMode { GivensLayers, Primitive };

// GivensLayers counts distinct layer tags among RY and CRY gates.
// Primitive greedily packs gates into rounds of disjoint supports.
std::size_t depth(const Circuit& c, DepthMode mode);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

// Dense unitary of the gate list on the full register (no post-selection
// applied). Requires n_working + n_ancilla <= 14.
CMatrix circuit_to_matrix(const Circuit& c);

}  // namespace qbasis

#endif
