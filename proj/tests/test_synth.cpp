// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include <cmath>
#include <numbers>

#include "core/circuit.hpp"
#include "core/errors.hpp"
#include "core/fock.hpp"
#include "core/random_matrix.hpp"
#include "core/sim.hpp"
#include "core/synth.hpp"
#include "doctest.h"

using namespace qbasis;

namespace {

// Dense realization of a block-encoded circuit on the working register
// after projecting every ancilla onto |0>.
CMatrix projected_realization(const BlockEncodedCircuit& be, std::size_t n) {
    const std::size_t dim = 1u << n;
    CMatrix out(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector in = StateVector::basis(be.circuit.n_total(),
                                            col << be.circuit.n_ancilla);
        in.apply_circuit(be.circuit);
        // Unnormalized projection: keep amplitudes with all ancillas 0.
        for (std::size_t row = 0; row < dim; ++row) {
            out(row, col) = in.amplitudes[row << be.circuit.n_ancilla];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("identity synthesizes to an empty gate list") {
    const auto [c, rep] = synth_unitary(CMatrix::identity(3));
    CHECK(c.gates.empty());
    CHECK(c.n_working == 3);
    CHECK(rep.givens_count == 3);
    CHECK(rep.phase_count == 1);
    CHECK(rep.ancilla_count == 0);
}

TEST_CASE("pure trailing phase synthesizes to a single phase gate") {
    CMatrix u = CMatrix::identity(2);
    u(1, 1) = std::exp(cplx(0.0, -0.9));
    const auto [c, rep] = synth_unitary(u);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].op == Op::Phase);
    CHECK(c.gates[0].qubits == std::vector<std::size_t>{2});
    CHECK(c.gates[0].angle == doctest::Approx(0.9).epsilon(1e-13));
    CHECK((circuit_to_matrix(c) - wedge_oracle(u)).max_abs() < 1e-13);
}

TEST_CASE("synthesized unitaries realize the exterior-power action") {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 4;
        const CMatrix u = random_unitary(n, 500 + t);
        const auto [c, rep] = synth_unitary(u);
        c.validate();
        worst = std::max(worst, (circuit_to_matrix(c) - wedge_oracle(u)).max_abs());
        CHECK(rep.givens_count == n * (n - 1) / 2);
        CHECK(rep.phase_count == 1);
        CHECK(rep.givens_layer_depth <= 2 * n - 3);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("rotation layer depth reaches the parallel bound") {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto [c, rep] = synth_unitary(random_unitary(n, 900 + n));
        CHECK(depth(c, DepthMode::GivensLayers) == 2 * n - 3);
    }
}

TEST_CASE("synth_unitary rejects non-unitary input") {
    CMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 3.0;
    m(1, 1) = 4.0;
    CHECK_THROWS_AS(synth_unitary(m), invalid_input_error);
}

TEST_CASE("singular value truncation") {
    TruncationPolicy pol{1e-6};
    const TruncationResult r =
        truncate_singular_values({1.0 - 1e-9, 0.8, 1e-9}, pol);
    CHECK(r.sigma_tilde == std::vector<double>{1.0, 0.8, 0.0});
    CHECK(r.s == 1);
    CHECK(r.r == 2);
    CHECK(r.bound == doctest::Approx(2e-9).epsilon(1e-6));

    // Epsilon 0 keeps everything except exact endpoints.
    const TruncationResult r0 = truncate_singular_values({1.0, 0.5, 0.0}, {0.0});
    CHECK(r0.s == 1);
    CHECK(r0.r == 2);
    CHECK(r0.bound == 0.0);

    // All singular values round to 1: no ancillas needed at all.
    const TruncationResult r1 =
        truncate_singular_values({1.0, 1.0 - 1e-8}, {1e-6});
    CHECK(r1.s == 2);
    CHECK(r1.r == 2);

    CHECK_THROWS_AS(truncate_singular_values({0.5, 0.6}, pol),
                    invalid_input_error);  // increasing
    CHECK_THROWS_AS(truncate_singular_values({1.1}, pol),
                    invalid_input_error);  // above 1
    CHECK_THROWS_AS(TruncationPolicy{0.6}.validate(), invalid_input_error);
}

TEST_CASE("block encoding of a diagonal contraction") {
    CMatrix u = CMatrix::identity(2);
    u(0, 0) = 0.5;
    const auto [be, rep] = synth_nonunitary(u, {1e-6});
    CHECK(be.s == 1);
    CHECK(be.r == 2);
    CHECK(be.circuit.n_ancilla == 1);
    CHECK(be.truncation_bound == 0.0);
    CHECK(rep.cry_count == 1);
    CHECK(rep.mcx_width == 0);
    // One singular value strictly inside (0,1): one CRY with
    // angle 2*arccos(0.5) = 2 pi / 3.
    bool found = false;
    for (const Gate& g : be.circuit.gates) {
        // The singular-value rotation is the CRY targeting the ancilla;
        // the unitary factors contribute working-register CRYs too.
        if (g.op == Op::Cry && g.target() > 2) {
            CHECK(g.angle == doctest::Approx(2.0 * std::acos(0.5)).epsilon(1e-13));
            found = true;
        }
    }
    CHECK(found);
    CHECK((projected_realization(be, 2) - wedge_oracle(u)).max_abs() < 1e-12);
}

TEST_CASE("block encoding is exact for random contractions") {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 12; ++t) {
        const std::size_t n = 2 + t % 3;
        const CMatrix u = random_contraction(n, 700 + t);
        const auto [be, rep] = synth_nonunitary(u, {1e-6});
        be.circuit.validate();
        CHECK(rep.ancilla_count == be.circuit.n_ancilla);
        CHECK(be.circuit.postselect.size() == be.circuit.n_ancilla);
        worst = std::max(worst,
                         (projected_realization(be, n) - wedge_oracle(u)).max_abs());
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("ancilla accounting follows the spectrum bands") {
    // sigma = (1, 0.9, 0.4, 0) with eps = 1e-2: s = 1, r = 3, one zero
    // band, so 2 band ancillas + 1 zero-band ancilla.
    CMatrix d(4, 4);
    d(0, 0) = 1.0;
    d(1, 1) = 0.9;
    d(2, 2) = 0.4;
    const auto [be, rep] = synth_nonunitary(d, {1e-2});
    CHECK(be.s == 1);
    CHECK(be.r == 3);
    CHECK(be.circuit.n_ancilla == 3);
    CHECK(be.ancilla_map.size() == 2);
    CHECK(be.ancilla_map.at(2) == 5);
    CHECK(be.ancilla_map.at(3) == 6);
    CHECK(rep.mcx_width == 1);  // one working qubit in the zero band

    // Full-rank spectrum away from 1: no zero-band ancilla.
    const auto [be2, rep2] = synth_nonunitary(random_contraction(3, 11), {1e-12});
    CHECK(be2.r == 3);
    CHECK(be2.circuit.n_ancilla == 3 - be2.s);
}

TEST_CASE("adjoint circuit realizes the dense adjoint") {
    const auto [c, rep] = synth_unitary(random_unitary(3, 1234));
    const Circuit a = adjoint_circuit(c);
    a.validate();
    CHECK((circuit_to_matrix(a) - circuit_to_matrix(c).adjoint()).max_abs() < 1e-12);
}

TEST_CASE("overlap block encoding matches slater overlaps entrywise") {
    const std::size_t n = 3;
    const CMatrix psi = random_unitary(n, 21);
    const CMatrix phi = random_unitary(n, 22);
    const BlockEncodedCircuit be = synth_xi_from_bases(psi, phi, {1e-6});
    const CMatrix realized = projected_realization(be, n);
    const CMatrix u = psi.adjoint() * phi;
    // Compare every many-body matrix element against determinant minors.
    for (std::uint64_t bi = 0; bi < (1u << n); ++bi) {
        for (std::uint64_t ki = 0; ki < (1u << n); ++ki) {
            const auto bra = OccupationState{n, bi}.occupations();
            const auto ket = OccupationState{n, ki}.occupations();
            CHECK(std::abs(realized(bi, ki) - slater_overlap(bra, ket, u)) < 1e-11);
        }
    }
}

TEST_CASE("swap test statistics on identical and orthogonal states") {
    const std::size_t n = 2;
    const BlockEncodedCircuit xi = synth_xi(CMatrix::identity(n), {1e-6});
    const Circuit st = build_swap_test(xi, n);
    st.validate();
    CHECK(st.n_working == 1 + 2 * n);
    CHECK(xi.circuit.n_ancilla == 0);

    // Identical basis states |10> on both registers: P(control 0) = 1.
    StateVector in = StateVector::basis(st.n_total(), (2u << n) | 2u);
    in.apply_circuit(st);
    CHECK(in.outcome_probability({{1, 0}}) == doctest::Approx(1.0).epsilon(1e-12));

    // Orthogonal basis states |10>, |01>: P(control 0) = 1/2.
    StateVector in2 = StateVector::basis(st.n_total(), (2u << n) | 1u);
    in2.apply_circuit(st);
    CHECK(in2.outcome_probability({{1, 0}}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("alt swap test reduces to the plain swap test without ancillas") {
    const std::size_t n = 2;
    const BlockEncodedCircuit xi = synth_xi(CMatrix::identity(n), {1e-6});
    const Circuit plain = build_swap_test(xi, n);
    const Circuit alt = build_alt_swap_test(xi, n);
    CHECK(circuit_to_json(plain) == circuit_to_json(alt));
}

TEST_CASE("alt swap test flag isolates the overlap term") {
    const std::size_t n = 2;
    const CMatrix u = random_contraction(n, 31);
    const BlockEncodedCircuit xi = synth_xi(u, {1e-6});
    REQUIRE(xi.circuit.n_ancilla > 0);
    const Circuit plain = build_swap_test(xi, n);
    const Circuit alt = build_alt_swap_test(xi, n);
    plain.validate();
    alt.validate();
    CHECK(alt.n_total() == plain.n_total() + 1);

    const std::vector<int> occ_psi = {1, 0};
    const std::vector<int> occ_phi = {0, 1};
    const std::uint64_t psi_idx = 2, phi_idx = 1;
    const std::size_t a = xi.circuit.n_ancilla;

    StateVector vp = StateVector::basis(plain.n_total(),
                                        (((psi_idx << n) | phi_idx) << a));
    vp.apply_circuit(plain);
    StateVector va = StateVector::basis(alt.n_total(),
                                        (((psi_idx << n) | phi_idx) << (a + 1)));
    va.apply_circuit(alt);

    const cplx ov = slater_overlap(occ_psi, occ_phi, u);
    const double p_plain = vp.outcome_probability({{1, 0}});
    const double p_alt = va.outcome_probability({{1, 0}});
    CHECK(p_plain - p_alt == doctest::Approx(std::norm(ov) / 2).epsilon(1e-10));
}

TEST_CASE("hadamard test reads out real and imaginary overlap parts") {
    const std::size_t n = 3;
    const CMatrix w_psi = random_unitary(n, 41);
    const CMatrix w_phi = random_unitary(n, 42);
    const CMatrix u = random_contraction(n, 43);

    // Preparation circuits: rotate the vacuum-adjacent basis state |110>.
    Circuit x_prep;
    x_prep.n_working = n;
    x_prep.gates.push_back({Op::X, {1}, 0.0, {}, 1});
    x_prep.gates.push_back({Op::X, {2}, 0.0, {}, 1});
    auto [rot_psi, rp] = synth_unitary(w_psi);
    auto [rot_phi, rq] = synth_unitary(w_phi);
    Circuit prep_psi = x_prep;
    for (Gate g : rot_psi.gates) {
        g.layer += 1;
        prep_psi.gates.push_back(g);
    }
    Circuit prep_phi = x_prep;
    for (Gate g : rot_phi.gates) {
        g.layer += 1;
        prep_phi.gates.push_back(g);
    }

    const BlockEncodedCircuit xi = synth_xi(u, {1e-6});
    const Circuit re = build_hadamard_test(prep_psi, prep_phi, xi, OverlapPart::Real);
    const Circuit im = build_hadamard_test(prep_psi, prep_phi, xi, OverlapPart::Imag);
    re.validate();
    im.validate();

    // Oracle: overlap of the prepared dense states through the wedge.
    const std::size_t dim = 1u << n;
    StateVector sp(n), sq(n);
    sp.amplitudes[0] = 1.0;
    sq.amplitudes[0] = 1.0;
    sp.apply_circuit(prep_psi);
    sq.apply_circuit(prep_phi);
    ManyBodyState mp{n, sp.amplitudes}, mq{n, sq.amplitudes};
    const cplx ov = state_overlap_oracle(mp, mq, u);

    StateVector vr = StateVector::basis(re.n_total(), 0);
    vr.apply_circuit(re);
    StateVector vi = StateVector::basis(im.n_total(), 0);
    vi.apply_circuit(im);
    const double re_got = 2.0 * vr.outcome_probability({{1, 0}}) - 1.0;
    const double im_got = 2.0 * vi.outcome_probability({{1, 0}}) - 1.0;
    CHECK(re_got == doctest::Approx(ov.real()).epsilon(1e-9));
    CHECK(im_got == doctest::Approx(ov.imag()).epsilon(1e-9));
}
