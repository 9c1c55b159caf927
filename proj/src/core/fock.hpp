// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_FOCK_HPP
#define QBASIS_FOCK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cmatrix.hpp"

namespace qbasis {

// Occupation-number basis state on n fermionic modes. Mode 1 is the most
// significant bit: index = sum_i n_i 2^(n-i).
struct OccupationState {
    std::size_t n_modes = 0;
    std::uint64_t index = 0;

    static OccupationState from_occupations(const std::vector<int>& occ);
    std::vector<int> occupations() const;
    bool occupied(std::size_t mode) const;  // mode is 1-based
    std::size_t particle_number() const;
};

// Jordan-Wigner dense matrices on the 2^n dimensional Fock space (n <= 12).
// Modes are 1-based.
CMatrix creation_op(std::size_t mode, std::size_t n_modes);
CMatrix annihilation_op(std::size_t mode, std::size_t n_modes);
CMatrix number_op(std::size_t mode, std::size_t n_modes);

// Many-body matrix of the single-particle transition u (n x n) acting by
// exterior powers: the block with k particles is the k-th compound matrix
// of u, i.e. entries are determinants of k x k minors. The vacuum maps to
// itself with amplitude 1. u need not be unitary. Requires n <= 10.
CMatrix wedge_oracle(const CMatrix& u);

// Many-body matrix of exp(sum_{pq} log(u)_{pq} a_p^dag a_q) computed by
// exponentiating the quadratic Hamiltonian densely. u must be unitary
// (the matrix logarithm must exist). Requires n <= 10.
CMatrix thouless_oracle(const CMatrix& u);

// Overlap of two Slater determinants with orbital overlap matrix
// u_ij = <psi_i | phi_j>: det of the minor picked by the two occupations.
// Both states must have the same particle number (else the overlap is 0).
cplx slater_overlap(const std::vector<int>& occ_bra,
                    const std::vector<int>& occ_ket, const CMatrix& u);

// Dense many-body state on n modes (2^n amplitudes, occupation indexing).
struct ManyBodyState {
    std::size_t n_modes = 0;
    std::vector<cplx> amplitudes;

    static ManyBodyState basis(const OccupationState& s);
    double norm() const;
};

// <psi | Xi | phi> where Xi = wedge_oracle(u) and u holds the orbital
// overlaps between the bra and ket single-particle bases.
cplx state_overlap_oracle(const ManyBodyState& psi, const ManyBodyState& phi,
                          const CMatrix& u);

}  // namespace qbasis

#endif
