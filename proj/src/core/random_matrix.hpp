// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_RANDOM_MATRIX_HPP
#define QBASIS_RANDOM_MATRIX_HPP

#include <cstdint>
#include <random>

#include "cmatrix.hpp"

namespace qbasis {

inline cplx gaussian_cplx(std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    return {nd(rng), nd(rng)};
}

// Haar-ish random unitary: Gaussian matrix orthonormalized column by
// column with two Gram-Schmidt passes.
inline CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CMatrix a(n, n);
    for (cplx& z : a.data) z = gaussian_cplx(rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx d = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    d += std::conj(a(i, k)) * a(i, j);
                }
                for (std::size_t i = 0; i < n; ++i) a(i, j) -= d * a(i, k);
            }
        }
        double nn = 0.0;
        for (std::size_t i = 0; i < n; ++i) nn += std::norm(a(i, j));
        nn = std::sqrt(nn);
        for (std::size_t i = 0; i < n; ++i) a(i, j) /= nn;
    }
    return a;
}

// Random contraction L diag(sigma) R with uniform singular values and
// independent Haar-ish factors.
inline CMatrix random_contraction(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    CMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    return random_unitary(n, seed * 2 + 1) * s * random_unitary(n, seed * 2 + 2);
}

}  // namespace qbasis

#endif
