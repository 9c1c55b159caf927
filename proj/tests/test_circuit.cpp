// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include <cmath>
#include <numbers>
#include <random>

#include "core/circuit.hpp"
#include "core/errors.hpp"
#include "doctest.h"

using namespace qbasis;

TEST_CASE("op names round-trip") {
    for (Op op : {Op::X, Op::RY, Op::Phase, Op::Cnot, Op::Cry, Op::McxOpen}) {
        CHECK(op_from_name(op_name(op)) == op);
    }
    CHECK_THROWS_AS(op_from_name("HADAMARD"), invalid_input_error);
}

TEST_CASE("cnot dense matrix is the expected permutation") {
    Circuit c;
    c.n_working = 2;
    c.gates.push_back({Op::Cnot, {1, 2}, 0.0, {}, 1});
    const CMatrix m = circuit_to_matrix(c);
    // Qubit 1 is the top bit; control on qubit 1 flips qubit 2:
    // |00>->|00>, |01>->|01>, |10>->|11>, |11>->|10>.
    CMatrix expect(4, 4);
    expect(0, 0) = expect(1, 1) = expect(3, 2) = expect(2, 3) = 1.0;
    CHECK((m - expect).max_abs() < 1e-15);
}

TEST_CASE("single-qubit dense matrices match their definitions") {
    const double t = 0.731;
    Circuit c;
    c.n_working = 1;
    c.gates.push_back({Op::RY, {1}, t, {}, 1});
    CMatrix m = circuit_to_matrix(c);
    CHECK(std::abs(m(0, 0) - std::cos(t / 2)) < 1e-15);
    CHECK(std::abs(m(0, 1) - (-std::sin(t / 2))) < 1e-15);
    CHECK(std::abs(m(1, 0) - std::sin(t / 2)) < 1e-15);
    CHECK(std::abs(m(1, 1) - std::cos(t / 2)) < 1e-15);

    c.gates[0] = {Op::Phase, {1}, t, {}, 1};
    m = circuit_to_matrix(c);
    CHECK(std::abs(m(0, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(m(1, 1) - std::exp(cplx(0.0, -t))) < 1e-15);
}

TEST_CASE("mcx open fires only on all-zero controls") {
    Circuit c;
    c.n_working = 3;
    c.gates.push_back({Op::McxOpen, {1, 2, 3}, 0.0, {}, 1});
    const CMatrix m = circuit_to_matrix(c);
    // |00x> -> |00 not-x>; everything else fixed.
    CHECK(std::abs(m(1, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(m(0, 1) - cplx(1.0, 0.0)) < 1e-15);
    for (std::size_t k = 2; k < 8; ++k) CHECK(std::abs(m(k, k) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("closed controls gate the base operation") {
    Circuit plain;
    plain.n_working = 1;
    plain.gates.push_back({Op::RY, {1}, 1.1, {}, 1});
    const CMatrix ry = circuit_to_matrix(plain);

    Circuit ctl;
    ctl.n_working = 2;
    ctl.gates.push_back({Op::RY, {2}, 1.1, {1}, 1});
    const CMatrix m = circuit_to_matrix(ctl);
    // Top-left block identity, bottom-right block RY.
    CHECK(std::abs(m(0, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(m(1, 1) - cplx(1.0, 0.0)) < 1e-15);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(std::abs(m(2 + i, 2 + j) - ry(i, j)) < 1e-15);
        }
    }
}

TEST_CASE("validate rejects out-of-range and overlapping-layer gates") {
    Circuit c;
    c.n_working = 2;
    c.gates.push_back({Op::X, {3}, 0.0, {}, 1});
    CHECK_THROWS_AS(c.validate(), invalid_input_error);

    c.gates[0] = {Op::Cnot, {1, 1}, 0.0, {}, 1};
    CHECK_THROWS_AS(c.validate(), invalid_input_error);

    c.n_working = 4;
    c.gates.clear();
    c.gates.push_back({Op::Cnot, {1, 2}, 0.0, {}, 2});
    c.gates.push_back({Op::X, {3}, 0.0, {}, 1});  // decreasing layer tag
    CHECK_THROWS_AS(c.validate(), invalid_input_error);

    c.gates.clear();
    c.gates.push_back({Op::Cnot, {1, 2}, 0.0, {}, 1});
    c.gates.push_back({Op::Cnot, {2, 3}, 0.0, {}, 1});  // joint support 3
    CHECK_THROWS_AS(c.validate(), invalid_input_error);

    c.gates.clear();
    c.gates.push_back({Op::Cnot, {1, 2}, 0.0, {}, 1});
    c.gates.push_back({Op::Cnot, {3, 4}, 0.0, {}, 1});  // disjoint: fine
    c.validate();
}

TEST_CASE("depth modes") {
    Circuit c;
    c.n_working = 4;
    CHECK(depth(c, DepthMode::GivensLayers) == 0);
    CHECK(depth(c, DepthMode::Primitive) == 0);

    c.gates.push_back({Op::Cnot, {1, 2}, 0.0, {}, 1});
    c.gates.push_back({Op::Cry, {1, 2}, 0.4, {}, 2});
    c.gates.push_back({Op::Cnot, {1, 2}, 0.0, {}, 3});
    c.gates.push_back({Op::Cry, {3, 4}, 0.2, {}, 3});
    c.gates.push_back({Op::Phase, {1}, 0.1, {}, 4});
    CHECK(depth(c, DepthMode::GivensLayers) == 2);  // layer tags {2, 3}
    // Greedy packing: CNOT(1,2) | CRY(1,2)+ nothing | CNOT(1,2)+CRY(3,4) | PHASE
    CHECK(depth(c, DepthMode::Primitive) == 4);

    Circuit d;
    d.n_working = 4;
    d.gates.push_back({Op::X, {1}, 0.0, {}, 1});
    d.gates.push_back({Op::X, {2}, 0.0, {}, 2});
    CHECK(depth(d, DepthMode::Primitive) == 1);  // disjoint supports pack
}

TEST_CASE("circuit json round-trip preserves everything") {
    std::mt19937_64 rng(5);
    Circuit c;
    c.n_working = 3;
    c.n_ancilla = 2;
    c.postselect = {4, 5};
    std::size_t layer = 0;
    for (int i = 0; i < 20; ++i) {
        Gate g;
        const int pick = static_cast<int>(rng() % 6);
        g.layer = ++layer;
        switch (pick) {
            case 0: g = {Op::X, {1 + rng() % 5}, 0.0, {}, layer}; break;
            case 1: g = {Op::RY, {1 + rng() % 5}, 0.25 * double(rng() % 7), {}, layer}; break;
            case 2: g = {Op::Phase, {1 + rng() % 5}, 0.125 * double(rng() % 9), {}, layer}; break;
            case 3: g = {Op::Cnot, {1, 2 + rng() % 4}, 0.0, {}, layer}; break;
            case 4: g = {Op::Cry, {3, 4}, 0.5, {}, layer}; break;
            default: g = {Op::McxOpen, {2, 3, 5}, 0.0, {1}, layer}; break;
        }
        c.gates.push_back(g);
    }
    const Circuit back = circuit_from_json(circuit_to_json(c));
    REQUIRE(back.gates.size() == c.gates.size());
    CHECK(back.n_working == c.n_working);
    CHECK(back.n_ancilla == c.n_ancilla);
    CHECK(back.postselect == c.postselect);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        CHECK(back.gates[i].op == c.gates[i].op);
        CHECK(back.gates[i].qubits == c.gates[i].qubits);
        CHECK(back.gates[i].controls == c.gates[i].controls);
        CHECK(back.gates[i].layer == c.gates[i].layer);
        CHECK(back.gates[i].angle == doctest::Approx(c.gates[i].angle).epsilon(1e-15));
    }
}

TEST_CASE("circuit json parsing is strict") {
    CHECK_THROWS_AS(circuit_from_json("{\"n_ancilla\": 0, \"gates\": []}"),
                    invalid_input_error);  // missing n_working
    CHECK_THROWS_AS(
        circuit_from_json(
            "{\"n_working\": 1, \"n_ancilla\": 0, \"gates\": [], \"bogus\": 1}"),
        invalid_input_error);  // unknown field
    CHECK_THROWS_AS(
        circuit_from_json("{\"n_working\": 1, \"n_ancilla\": 0, \"gates\": "
                          "[{\"op\": \"RY\", \"qubits\": [1], \"layer\": 1}]}"),
        invalid_input_error);  // RY without angle
    CHECK_THROWS_AS(
        circuit_from_json("{\"n_working\": 1, \"n_ancilla\": 0, \"gates\": "
                          "[{\"op\": \"X\", \"qubits\": [1], \"angle\": 0.1, "
                          "\"layer\": 1}]}"),
        invalid_input_error);  // X with angle
    CHECK_THROWS_AS(circuit_from_json("not json"), invalid_input_error);
}
