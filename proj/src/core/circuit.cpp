// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "circuit.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "sim.hpp"
#include "json.hpp"

namespace qbasis {

namespace {

using nlohmann::json;

std::size_t expected_min_qubits(Op op) {
    switch (op) {
        case Op::X:
        case Op::RY:
        case Op::Phase:
            return 1;
        case Op::Cnot:
        case Op::Cry:
        case Op::McxOpen:
            return 2;
    }
    return 1;
}

bool has_angle(Op op) {
    return op == Op::RY || op == Op::Phase || op == Op::Cry;
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& known,
                           const char* what) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.count(key)) {
            throw invalid_input_error(std::string("unknown field '") + key +
                                      "' in " + what);
        }
    }
}

std::vector<std::size_t> read_index_list(const json& arr, const char* what) {
    if (!arr.is_array()) {
        throw invalid_input_error(std::string(what) + " must be an array");
    }
    std::vector<std::size_t> out;
    for (const json& v : arr) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
            throw invalid_input_error(std::string(what) +
                                      " entries must be positive integers");
        }
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

}  // namespace

std::string op_name(Op op) {
    switch (op) {
        case Op::X: return "X";
        case Op::RY: return "RY";
        case Op::Phase: return "PHASE";
        case Op::Cnot: return "CNOT";
        case Op::Cry: return "CRY";
        case Op::McxOpen: return "MCX_OPEN";
    }
    throw internal_error("unhandled op");
}

Op op_from_name(const std::string& name) {
    if (name == "X") return Op::X;
    if (name == "RY") return Op::RY;
    if (name == "PHASE") return Op::Phase;
    if (name == "CNOT") return Op::Cnot;
    if (name == "CRY") return Op::Cry;
    if (name == "MCX_OPEN") return Op::McxOpen;
    throw invalid_input_error("unknown gate op '" + name + "'");
}

std::vector<std::size_t> Gate::support() const {
    std::vector<std::size_t> s = qubits;
    s.insert(s.end(), controls.begin(), controls.end());
    std::sort(s.begin(), s.end());
    return s;
}

void Circuit::validate() const {
    const std::size_t total = n_total();
    if (n_working == 0) {
        throw invalid_input_error("circuit needs at least one working qubit");
    }
    std::size_t prev_layer = 0;
    std::vector<const Gate*> layer_gates;
    auto check_layer = [&]() {
        for (std::size_t i = 0; i < layer_gates.size(); ++i) {
            for (std::size_t j = i + 1; j < layer_gates.size(); ++j) {
                const auto a = layer_gates[i]->support();
                const auto b = layer_gates[j]->support();
                std::vector<std::size_t> joint;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                               std::back_inserter(joint));
                if (joint.size() <= 2) continue;
                if (joint.size() < a.size() + b.size()) {
                    throw invalid_input_error(
                        "overlapping gates share a layer tag");
                }
            }
        }
    };
    for (const Gate& g : gates) {
        if (g.qubits.size() < expected_min_qubits(g.op)) {
            throw invalid_input_error("gate has too few qubits");
        }
        if ((g.op == Op::Cnot || g.op == Op::Cry) && g.qubits.size() != 2) {
            throw invalid_input_error("two-qubit gate needs exactly 2 qubits");
        }
        if ((g.op == Op::X || g.op == Op::RY || g.op == Op::Phase) &&
            g.qubits.size() != 1) {
            throw invalid_input_error("single-qubit gate needs exactly 1 qubit");
        }
        const auto s = g.support();
        for (std::size_t q : s) {
            if (q < 1 || q > total) {
                throw invalid_input_error("gate qubit out of range");
            }
        }
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw invalid_input_error("gate qubits must be distinct");
        }
        if (g.layer < prev_layer) {
            throw invalid_input_error("layer tags must be non-decreasing");
        }
        if (g.layer > prev_layer) {
            check_layer();
            layer_gates.clear();
            prev_layer = g.layer;
        }
        layer_gates.push_back(&g);
    }
    check_layer();
    for (std::size_t q : postselect) {
        if (q <= n_working || q > total) {
            throw invalid_input_error("post-selection must target an ancilla");
        }
    }
}

std::size_t depth(const Circuit& c, DepthMode mode) {
    if (mode == DepthMode::GivensLayers) {
        std::set<std::size_t> tags;
        for (const Gate& g : c.gates) {
            if (g.op == Op::RY || g.op == Op::Cry) tags.insert(g.layer);
        }
        return tags.size();
    }
    std::size_t rounds = 0;
    std::vector<std::size_t> busy_round(c.n_total() + 1, 0);
    for (const Gate& g : c.gates) {
        std::size_t earliest = 0;
        for (std::size_t q : g.support()) {
            earliest = std::max(earliest, busy_round[q]);
        }
        const std::size_t round = earliest + 1;
        for (std::size_t q : g.support()) busy_round[q] = round;
        rounds = std::max(rounds, round);
    }
    return rounds;
}

std::string circuit_to_json(const Circuit& c) {
    json out;
    out["n_working"] = c.n_working;
    out["n_ancilla"] = c.n_ancilla;
    json gates = json::array();
    for (const Gate& g : c.gates) {
        json jg;
        jg["layer"] = g.layer;
        jg["op"] = op_name(g.op);
        jg["qubits"] = g.qubits;
        if (has_angle(g.op)) jg["angle"] = g.angle;
        if (!g.controls.empty()) jg["controls"] = g.controls;
        gates.push_back(std::move(jg));
    }
    out["gates"] = std::move(gates);
    out["postselect"] = c.postselect;
    return out.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input_error(std::string("bad circuit JSON: ") + e.what());
    }
    if (!in.is_object()) {
        throw invalid_input_error("circuit JSON must be an object");
    }
    reject_unknown_fields(in, {"n_working", "n_ancilla", "gates", "postselect"},
                          "circuit");
    Circuit c;
    if (!in.contains("n_working") || !in["n_working"].is_number_unsigned() ||
        !in.contains("n_ancilla") || !in["n_ancilla"].is_number_unsigned() ||
        !in.contains("gates")) {
        throw invalid_input_error("circuit JSON missing required fields");
    }
    c.n_working = in["n_working"].get<std::size_t>();
    c.n_ancilla = in["n_ancilla"].get<std::size_t>();
    for (const json& jg : in["gates"]) {
        if (!jg.is_object()) {
            throw invalid_input_error("gate must be an object");
        }
        reject_unknown_fields(jg, {"layer", "op", "qubits", "angle", "controls"},
                              "gate");
        Gate g;
        if (!jg.contains("op") || !jg["op"].is_string() ||
            !jg.contains("qubits") || !jg.contains("layer") ||
            !jg["layer"].is_number_unsigned()) {
            throw invalid_input_error("gate missing required fields");
        }
        g.op = op_from_name(jg["op"].get<std::string>());
        g.layer = jg["layer"].get<std::size_t>();
        g.qubits = read_index_list(jg["qubits"], "qubits");
        if (jg.contains("angle")) {
            if (!jg["angle"].is_number()) {
                throw invalid_input_error("gate angle must be a number");
            }
            if (!has_angle(g.op)) {
                throw invalid_input_error("gate op does not take an angle");
            }
            g.angle = jg["angle"].get<double>();
        } else if (has_angle(g.op)) {
            throw invalid_input_error("gate op requires an angle");
        }
        if (jg.contains("controls")) {
            g.controls = read_index_list(jg["controls"], "controls");
        }
        c.gates.push_back(std::move(g));
    }
    if (in.contains("postselect")) {
        c.postselect = read_index_list(in["postselect"], "postselect");
    }
    c.validate();
    return c;
}

CMatrix circuit_to_matrix(const Circuit& c) {
    const std::size_t total = c.n_total();
    if (total > 14) {
        throw invalid_input_error("circuit too wide for dense realization");
    }
    const std::size_t dim = std::size_t{1} << total;
    CMatrix m(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        StateVector s = StateVector::basis(total, col);
        s.apply_circuit(c);
        for (std::uint64_t row = 0; row < dim; ++row) {
            m(row, col) = s.amplitudes[row];
        }
    }
    return m;
}

}  // namespace qbasis
