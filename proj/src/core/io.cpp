// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#include "io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace qbasis {

namespace {

using nlohmann::json;

json parse_strict(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input_error(std::string("bad JSON: ") + e.what());
    }
}

void require_only(const json& obj, std::initializer_list<const char*> keys,
                  const char* what) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* k : keys) {
            if (key == k) known = true;
        }
        if (!known) {
            throw invalid_input_error(std::string("unknown field '") + key +
                                      "' in " + what);
        }
    }
}

cplx read_cplx(const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
        throw invalid_input_error("complex entries must be [re, im] pairs");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

json write_cplx(cplx z) {
    return json::array({z.real(), z.imag()});
}

}  // namespace

std::string matrix_to_json(const CMatrix& m) {
    json out;
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    json data = json::array();
    for (const cplx& z : m.data) data.push_back(write_cplx(z));
    out["data"] = std::move(data);
    return out.dump(2);
}

CMatrix matrix_from_json(const std::string& text) {
    const json in = parse_strict(text);
    if (!in.is_object()) {
        throw invalid_input_error("matrix JSON must be an object");
    }
    require_only(in, {"rows", "cols", "data"}, "matrix");
    if (!in.contains("rows") || !in["rows"].is_number_unsigned() ||
        !in.contains("cols") || !in["cols"].is_number_unsigned() ||
        !in.contains("data") || !in["data"].is_array()) {
        throw invalid_input_error("matrix JSON missing required fields");
    }
    CMatrix m(in["rows"].get<std::size_t>(), in["cols"].get<std::size_t>());
    if (in["data"].size() != m.data.size()) {
        throw invalid_input_error("matrix data length does not match shape");
    }
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        m.data[i] = read_cplx(in["data"][i]);
    }
    return m;
}

std::string state_to_json(const ManyBodyState& s) {
    json out;
    out["n"] = s.n_modes;
    json amps = json::array();
    for (const cplx& z : s.amplitudes) amps.push_back(write_cplx(z));
    out["amplitudes"] = std::move(amps);
    return out.dump(2);
}

ManyBodyState state_from_json(const std::string& text) {
    const json in = parse_strict(text);
    if (!in.is_object()) {
        throw invalid_input_error("state JSON must be an object");
    }
    require_only(in, {"n", "amplitudes"}, "state");
    if (!in.contains("n") || !in["n"].is_number_unsigned() ||
        !in.contains("amplitudes") || !in["amplitudes"].is_array()) {
        throw invalid_input_error("state JSON missing required fields");
    }
    ManyBodyState s;
    s.n_modes = in["n"].get<std::size_t>();
    if (s.n_modes == 0 || s.n_modes > 20) {
        throw invalid_input_error("state mode count out of range");
    }
    if (in["amplitudes"].size() != (std::size_t{1} << s.n_modes)) {
        throw invalid_input_error("amplitude count must be 2^n");
    }
    for (const json& v : in["amplitudes"]) {
        s.amplitudes.push_back(read_cplx(v));
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw invalid_input_error("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw invalid_input_error("cannot write file: " + path);
    }
    f << content;
}

}  // namespace qbasis
