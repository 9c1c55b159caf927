// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include <cstring>
#include <string>

#include "core/io.hpp"
#include "core/random_matrix.hpp"
#include "doctest.h"
#include "json.hpp"
#include "qbasis.h"

using nlohmann::json;

namespace {

struct StringOut {
    char* p = nullptr;
    ~StringOut() { qb_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string unitary_json(std::size_t n, std::uint64_t seed) {
    return qbasis::matrix_to_json(qbasis::random_unitary(n, seed));
}

}  // namespace

TEST_CASE("matrix parse, dims, and error reporting") {
    qb_matrix* m = nullptr;
    REQUIRE(qb_matrix_parse(unitary_json(3, 1).c_str(), &m) == QB_OK);
    size_t r = 0, c = 0;
    CHECK(qb_matrix_dims(m, &r, &c) == QB_OK);
    CHECK(r == 3);
    CHECK(c == 3);
    qb_matrix_free(m);

    qb_matrix* bad = nullptr;
    CHECK(qb_matrix_parse("not json", &bad) == QB_ERR_INVALID_INPUT);
    CHECK(bad == nullptr);
    CHECK(std::strlen(qb_last_error()) > 0);
    CHECK(qb_matrix_parse("{\"rows\": 1, \"cols\": 1, \"data\": [[0, 0]], \"x\": 1}",
                          &bad) == QB_ERR_INVALID_INPUT);
}

TEST_CASE("qr endpoint reports steps, phase, and residual") {
    qb_matrix* m = nullptr;
    REQUIRE(qb_matrix_parse(unitary_json(4, 2).c_str(), &m) == QB_OK);
    StringOut out;
    REQUIRE(qb_qr(m, 1e-10, &out.p) == QB_OK);
    const json j = json::parse(out.str());
    CHECK(j.at("n") == 4);
    CHECK(j.at("steps").size() == 6);
    CHECK(j.at("residual").get<double>() < 1e-11);
    for (const auto& s : j.at("steps")) {
        CHECK(s.at("q") == s.at("p").get<int>() + 1);
        CHECK(s.at("layer").get<int>() >= 1);
        CHECK(s.at("layer").get<int>() <= 5);
    }
    qb_matrix_free(m);
}

TEST_CASE("qr rejects non-unitary input with the invalid-input code") {
    qb_matrix* m = nullptr;
    REQUIRE(qb_matrix_parse(
                "{\"rows\": 2, \"cols\": 2, \"data\": [[1,0],[2,0],[3,0],[4,0]]}",
                &m) == QB_OK);
    StringOut out;
    CHECK(qb_qr(m, 1e-10, &out.p) == QB_ERR_INVALID_INPUT);
    qb_matrix_free(m);
}

TEST_CASE("svd endpoint") {
    qb_matrix* m = nullptr;
    REQUIRE(qb_matrix_parse(
                "{\"rows\": 2, \"cols\": 2, \"data\": [[1,0],[2,0],[3,0],[4,0]]}",
                &m) == QB_OK);
    StringOut out;
    REQUIRE(qb_svd(m, &out.p) == QB_OK);
    const json j = json::parse(out.str());
    CHECK(j.at("sigma").size() == 2);
    CHECK(j.at("sigma")[0].get<double>() ==
          doctest::Approx(5.4649857042190426).epsilon(1e-10));
    CHECK(j.at("L").at("rows") == 2);
    CHECK(j.at("R").at("cols") == 2);
    qb_matrix_free(m);
}

TEST_CASE("synthesis endpoints produce circuits and reports") {
    qb_matrix* m = nullptr;
    REQUIRE(qb_matrix_parse(unitary_json(3, 3).c_str(), &m) == QB_OK);
    qb_circuit* c = nullptr;
    StringOut rep;
    REQUIRE(qb_synth_unitary(m, 1e-10, &c, &rep.p) == QB_OK);
    const json jr = json::parse(rep.str());
    CHECK(jr.at("s") == 3);
    CHECK(jr.at("r") == 3);
    CHECK(jr.at("ancillas") == 0);
    CHECK(jr.at("depth_givens_layers") == 3);
    CHECK(jr.at("truncation_bound") == 0.0);
    CHECK(jr.at("gate_counts").at("givens") == 3);

    StringOut cjson;
    REQUIRE(qb_circuit_to_json(c, &cjson.p) == QB_OK);
    qb_circuit* c2 = nullptr;
    REQUIRE(qb_circuit_parse(cjson.str().c_str(), &c2) == QB_OK);
    StringOut cjson2;
    REQUIRE(qb_circuit_to_json(c2, &cjson2.p) == QB_OK);
    CHECK(cjson.str() == cjson2.str());
    qb_circuit_free(c);
    qb_circuit_free(c2);
    qb_matrix_free(m);

    qb_matrix* contraction = nullptr;
    REQUIRE(qb_matrix_parse(
                qbasis::matrix_to_json(qbasis::random_contraction(3, 4)).c_str(),
                &contraction) == QB_OK);
    qb_circuit* bc = nullptr;
    StringOut brep;
    REQUIRE(qb_synth_nonunitary(contraction, 1e-6, 1e-10, &bc, &brep.p) == QB_OK);
    const json jb = json::parse(brep.str());
    CHECK(jb.at("ancillas").get<int>() == 3 - jb.at("s").get<int>());
    qb_circuit_free(bc);
    qb_matrix_free(contraction);
}

TEST_CASE("overlap endpoint agrees with the oracle value") {
    const std::string psi = "{\"n\": 2, \"amplitudes\": [[0,0],[0,0],[1,0],[0,0]]}";
    qb_matrix* id = nullptr;
    REQUIRE(qb_matrix_parse(
                "{\"rows\": 2, \"cols\": 2, \"data\": [[1,0],[0,0],[0,0],[1,0]]}",
                &id) == QB_OK);
    for (const char* method : {"swap", "alt-swap", "hadamard"}) {
        StringOut out;
        REQUIRE(qb_overlap(psi.c_str(), psi.c_str(), id, method, 1e-6, 1e-10, 0,
                           1, &out.p) == QB_OK);
        const json j = json::parse(out.str());
        CHECK(j.at("oracle_modulus").get<double>() ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(j.at("method") == method);
    }
    StringOut bad;
    CHECK(qb_overlap(psi.c_str(), psi.c_str(), id, "bogus", 1e-6, 1e-10, 0, 1,
                     &bad.p) == QB_ERR_INVALID_INPUT);
    qb_matrix_free(id);
}

TEST_CASE("verify endpoint is deterministic and fault injection fails it") {
    StringOut a, b;
    int pa = -1, pb = -1;
    REQUIRE(qb_verify(3, 4, 7, 0, &a.p, &pa) == QB_OK);
    REQUIRE(qb_verify(3, 4, 7, 0, &b.p, &pb) == QB_OK);
    CHECK(pa == 1);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("generated_at") == std::string::npos);

    StringOut f;
    int pf = -1;
    REQUIRE(qb_verify(3, 4, 7, 1, &f.p, &pf) == QB_OK);
    CHECK(pf == 0);
}
