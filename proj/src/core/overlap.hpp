// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_OVERLAP_HPP
#define QBASIS_OVERLAP_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "circuit.hpp"
#include "cmatrix.hpp"
#include "fock.hpp"

namespace qbasis {

enum class OverlapMethod { Swap, AltSwap, Hadamard };

OverlapMethod overlap_method_from_name(const std::string& name);

struct OverlapOptions {
    OverlapMethod method = OverlapMethod::Swap;
    double epsilon = 1e-6;
    double tolerance = kDefaultTolerance;
    std::uint64_t shots = 0;  // 0 = exact probabilities only
    std::uint64_t seed = 1;
};

// Either a dense state or a preparation circuit acting on |0...0>.
struct OverlapInput {
    ManyBodyState state;
    std::optional<Circuit> preparation;

    // Parses a state JSON or a circuit JSON; circuits are simulated on
    // the all-zeros input to obtain the state.
    static OverlapInput parse(const std::string& json_text);
};

// Runs the selected interference circuit exactly (plus optional seeded
// sampling) and returns a JSON report with the circuit-derived value, the
// exterior-algebra oracle value <psi| Xi |phi>, and their difference.
std::string compute_overlap(const OverlapInput& psi, const OverlapInput& phi,
                            const CMatrix& u_overlap,
                            const OverlapOptions& opt);

}  // namespace qbasis

#endif
