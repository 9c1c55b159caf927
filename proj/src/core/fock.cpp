// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "fock.hpp"

#include <bit>
#include <cmath>

#include "errors.hpp"

namespace qbasis {

namespace {

void check_mode(std::size_t mode, std::size_t n_modes, std::size_t cap) {
    if (n_modes == 0 || n_modes > cap) {
        throw invalid_input_error("mode count out of supported range");
    }
    if (mode < 1 || mode > n_modes) {
        throw invalid_input_error("mode index out of range");
    }
}

// Bit position (from the least significant bit) of 1-based mode m.
std::size_t bit_pos(std::size_t mode, std::size_t n_modes) {
    return n_modes - mode;
}

// Parity of the number of occupied modes strictly before `mode` in x.
int jw_sign(std::uint64_t x, std::size_t mode, std::size_t n_modes) {
    const std::uint64_t above = x >> (bit_pos(mode, n_modes) + 1);
    return (std::popcount(above) & 1) ? -1 : 1;
}

}  // namespace

OccupationState OccupationState::from_occupations(const std::vector<int>& occ) {
    if (occ.empty() || occ.size() > 63) {
        throw invalid_input_error("occupation list size out of range");
    }
    OccupationState s;
    s.n_modes = occ.size();
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (occ[i] != 0 && occ[i] != 1) {
            throw invalid_input_error("occupations must be 0 or 1");
        }
        s.index = (s.index << 1) | static_cast<std::uint64_t>(occ[i]);
    }
    return s;
}

std::vector<int> OccupationState::occupations() const {
    std::vector<int> occ(n_modes);
    for (std::size_t m = 1; m <= n_modes; ++m) {
        occ[m - 1] = occupied(m) ? 1 : 0;
    }
    return occ;
}

bool OccupationState::occupied(std::size_t mode) const {
    return (index >> bit_pos(mode, n_modes)) & 1;
}

std::size_t OccupationState::particle_number() const {
    return static_cast<std::size_t>(std::popcount(index));
}

CMatrix creation_op(std::size_t mode, std::size_t n_modes) {
    check_mode(mode, n_modes, 12);
    const std::size_t dim = std::size_t{1} << n_modes;
    const std::size_t pos = bit_pos(mode, n_modes);
    CMatrix m(dim, dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        if ((x >> pos) & 1) continue;
        const std::uint64_t y = x | (std::uint64_t{1} << pos);
        m(y, x) = static_cast<double>(jw_sign(x, mode, n_modes));
    }
    return m;
}

CMatrix annihilation_op(std::size_t mode, std::size_t n_modes) {
    return creation_op(mode, n_modes).adjoint();
}

CMatrix number_op(std::size_t mode, std::size_t n_modes) {
    check_mode(mode, n_modes, 12);
    const std::size_t dim = std::size_t{1} << n_modes;
    const std::size_t pos = bit_pos(mode, n_modes);
    CMatrix m(dim, dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        if ((x >> pos) & 1) m(x, x) = 1.0;
    }
    return m;
}

CMatrix wedge_oracle(const CMatrix& u) {
    if (!u.is_square()) {
        throw invalid_input_error("wedge_oracle: matrix must be square");
    }
    const std::size_t n = u.rows;
    if (n == 0 || n > 10) {
        throw invalid_input_error("wedge_oracle: n out of supported range");
    }
    const std::size_t dim = std::size_t{1} << n;
    CMatrix big(dim, dim);
    std::vector<std::size_t> rows, cols;
    for (std::uint64_t bra = 0; bra < dim; ++bra) {
        rows.clear();
        for (std::size_t m = 1; m <= n; ++m) {
            if ((bra >> bit_pos(m, n)) & 1) rows.push_back(m - 1);
        }
        for (std::uint64_t ket = 0; ket < dim; ++ket) {
            if (std::popcount(bra) != std::popcount(ket)) continue;
            cols.clear();
            for (std::size_t m = 1; m <= n; ++m) {
                if ((ket >> bit_pos(m, n)) & 1) cols.push_back(m - 1);
            }
            const std::size_t k = rows.size();
            CMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    minor(i, j) = u(rows[i], cols[j]);
                }
            }
            big(bra, ket) = determinant(minor);
        }
    }
    return big;
}

CMatrix thouless_oracle(const CMatrix& u) {
    if (!u.is_square()) {
        throw invalid_input_error("thouless_oracle: matrix must be square");
    }
    const std::size_t n = u.rows;
    if (n == 0 || n > 10) {
        throw invalid_input_error("thouless_oracle: n out of supported range");
    }
    const CMatrix h = unitary_log(u);
    const std::size_t dim = std::size_t{1} << n;
    CMatrix big(dim, dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::size_t q = 1; q <= n; ++q) {
            const std::size_t qpos = bit_pos(q, n);
            if (!((x >> qpos) & 1)) continue;
            const int sq = jw_sign(x, q, n);
            const std::uint64_t y = x & ~(std::uint64_t{1} << qpos);
            for (std::size_t p = 1; p <= n; ++p) {
                const std::size_t ppos = bit_pos(p, n);
                if ((y >> ppos) & 1) continue;
                const int sp = jw_sign(y, p, n);
                const std::uint64_t z = y | (std::uint64_t{1} << ppos);
                big(z, x) += h(p - 1, q - 1) * static_cast<double>(sq * sp);
            }
        }
    }
    return expm(big);
}

cplx slater_overlap(const std::vector<int>& occ_bra,
                    const std::vector<int>& occ_ket, const CMatrix& u) {
    if (!u.is_square() || occ_bra.size() != u.rows || occ_ket.size() != u.rows) {
        throw invalid_input_error("slater_overlap: dimension mismatch");
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < occ_bra.size(); ++i) {
        if (occ_bra[i] == 1) rows.push_back(i);
        else if (occ_bra[i] != 0) throw invalid_input_error("bad occupation");
    }
    for (std::size_t j = 0; j < occ_ket.size(); ++j) {
        if (occ_ket[j] == 1) cols.push_back(j);
        else if (occ_ket[j] != 0) throw invalid_input_error("bad occupation");
    }
    if (rows.size() != cols.size()) return 0.0;
    const std::size_t k = rows.size();
    CMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            minor(i, j) = u(rows[i], cols[j]);
        }
    }
    return determinant(minor);
}

ManyBodyState ManyBodyState::basis(const OccupationState& s) {
    ManyBodyState st;
    st.n_modes = s.n_modes;
    st.amplitudes.assign(std::size_t{1} << s.n_modes, 0.0);
    st.amplitudes[s.index] = 1.0;
    return st;
}

double ManyBodyState::norm() const {
    double acc = 0.0;
    for (const cplx& a : amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
}

cplx state_overlap_oracle(const ManyBodyState& psi, const ManyBodyState& phi,
                          const CMatrix& u) {
    if (psi.n_modes != phi.n_modes || u.rows != psi.n_modes) {
        throw invalid_input_error("state_overlap_oracle: dimension mismatch");
    }
    const CMatrix xi = wedge_oracle(u);
    const std::vector<cplx> xphi = xi.apply(phi.amplitudes);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < xphi.size(); ++i) {
        acc += std::conj(psi.amplitudes[i]) * xphi[i];
    }
    return acc;
}

}  // namespace qbasis
