// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_GIVENS_HPP
#define QBASIS_GIVENS_HPP

#include <cstddef>
#include <vector>

#include "cmatrix.hpp"

namespace qbasis {

// A phased Givens rotation acting on adjacent rows p = q - 1 and q
// (1-based). The operator is r(theta) * p_q(phi_q) * p_p(phi_p), where
// p_k(phi) multiplies row k by exp(-i phi) and r(theta) mixes the rows:
//   row_p' =  cos(theta) row_p + sin(theta) row_q
//   row_q' = -sin(theta) row_p + cos(theta) row_q
struct PhasedGivens {
    std::size_t p = 0;
    std::size_t q = 0;
    double theta = 0.0;
    double phi_p = 0.0;
    double phi_q = 0.0;
    std::size_t layer = 0;
};

// One elimination target: zero out entry (row, col), 1-based, strictly
// lower triangular, using the adjacent row pair (row - 1, row).
struct EliminationTarget {
    std::size_t row = 0;
    std::size_t col = 0;
};

using EliminationSchedule = std::vector<std::vector<EliminationTarget>>;

struct GivensAngles {
    double theta = 0.0;
    double phi_a = 0.0;
    double phi_b = 0.0;
};

struct QrResult {
    std::vector<PhasedGivens> steps;
    double final_phase = 0.0;
    double residual = 0.0;
};

// Angles that zero b when the rotation above acts on the column vector
// (a, b): theta = atan2(|b|, |a|), phi_a = arg(a), phi_b = arg(b).
// The phase of an entry with magnitude < 1e-14 is taken to be 0; both
// entries vanishing is an error.
GivensAngles complex_givens_for(cplx a, cplx b);

// Parallel schedule for eliminating the strictly lower triangle of an
// n x n matrix with adjacent-row rotations. Entry (r, c) lands in layer
// (n - r) + (2c - 1); layers run 1..2n-3 and each layer touches pairwise
// disjoint row pairs. Requires n >= 2.
EliminationSchedule parallel_elimination_order(std::size_t n);

// Decompose a unitary u as u = g_1^dag ... g_K^dag D, where the g_k are
// the returned phased Givens rotations in order and D = diag(1, ..., 1,
// exp(-i final_phase)). Entries already below tol in magnitude are
// skipped with a zero-angle step so the schedule shape is preserved.
// residual is the max deviation of G u from D.
QrResult givens_qr(const CMatrix& u, double tol = kDefaultTolerance);

// Dense n x n matrix of one phased Givens step (for oracle checks).
CMatrix givens_dense(const PhasedGivens& g, std::size_t n);

}  // namespace qbasis

#endif
