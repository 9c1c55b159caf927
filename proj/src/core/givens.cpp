// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "givens.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace qbasis {

namespace {

constexpr double kZeroEntry = 1e-14;

double safe_arg(cplx z) {
    return std::abs(z) < kZeroEntry ? 0.0 : std::arg(z);
}

// Apply g = r(theta) p_q(phi_q) p_p(phi_p) to rows p, q of m in place.
void apply_step(CMatrix& m, const PhasedGivens& g) {
    const std::size_t p = g.p - 1;
    const std::size_t q = g.q - 1;
    const cplx ep = std::exp(cplx(0.0, -g.phi_p));
    const cplx eq = std::exp(cplx(0.0, -g.phi_q));
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    for (std::size_t j = 0; j < m.cols; ++j) {
        const cplx a = ep * m(p, j);
        const cplx b = eq * m(q, j);
        m(p, j) = c * a + s * b;
        m(q, j) = -s * a + c * b;
    }
}

}  // namespace

GivensAngles complex_givens_for(cplx a, cplx b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma < kZeroEntry && mb < kZeroEntry) {
        throw invalid_input_error("complex_givens_for: both entries are zero");
    }
    GivensAngles out;
    out.theta = std::atan2(mb, ma);
    out.phi_a = safe_arg(a);
    out.phi_b = safe_arg(b);
    return out;
}

EliminationSchedule parallel_elimination_order(std::size_t n) {
    if (n < 2) {
        throw invalid_input_error("parallel_elimination_order: need n >= 2");
    }
    const std::size_t n_layers = 2 * n - 3;
    EliminationSchedule layers(n_layers);
    for (std::size_t c = 1; c < n; ++c) {
        for (std::size_t r = c + 1; r <= n; ++r) {
            const std::size_t k = (n - r) + (2 * c - 1);
            layers[k - 1].push_back({r, c});
        }
    }
    for (auto& layer : layers) {
        std::sort(layer.begin(), layer.end(),
                  [](const EliminationTarget& a, const EliminationTarget& b) {
                      return a.row < b.row;
                  });
    }
    return layers;
}

QrResult givens_qr(const CMatrix& u, double tol) {
    if (!u.is_square() || u.rows < 2) {
        throw invalid_input_error("givens_qr: matrix must be square with n >= 2");
    }
    if (!u.is_unitary(std::max(tol, 1e-8))) {
        throw invalid_input_error("givens_qr: matrix is not unitary");
    }
    const std::size_t n = u.rows;
    CMatrix m = u;
    QrResult result;
    const EliminationSchedule schedule = parallel_elimination_order(n);
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        for (const EliminationTarget& t : schedule[k]) {
            PhasedGivens g;
            g.p = t.row - 1;
            g.q = t.row;
            g.layer = k + 1;
            const cplx a = m(t.row - 2, t.col - 1);
            const cplx b = m(t.row - 1, t.col - 1);
            if (std::abs(b) >= kZeroEntry) {
                const GivensAngles ang = complex_givens_for(a, b);
                g.theta = ang.theta;
                g.phi_p = ang.phi_a;
                g.phi_q = ang.phi_b;
                apply_step(m, g);
            } else {
                // Nothing to eliminate, but the rotation normally leaves
                // the upper entry real and non-negative; keep that
                // invariant so the trailing diagonal stays trivial.
                g.phi_p = safe_arg(a);
                if (g.phi_p != 0.0) apply_step(m, g);
            }
            result.steps.push_back(g);
        }
    }
    result.final_phase = -std::arg(m(n - 1, n - 1));
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx expect = 0.0;
            if (i == j) {
                expect = (i == n - 1) ? std::exp(cplx(0.0, -result.final_phase))
                                      : cplx(1.0, 0.0);
            }
            residual = std::max(residual, std::abs(m(i, j) - expect));
        }
    }
    result.residual = residual;
    return result;
}

CMatrix givens_dense(const PhasedGivens& g, std::size_t n) {
    if (g.p < 1 || g.q != g.p + 1 || g.q > n) {
        throw invalid_input_error("givens_dense: indices out of range");
    }
    CMatrix m = CMatrix::identity(n);
    apply_step(m, g);
    return m;
}

}  // namespace qbasis
