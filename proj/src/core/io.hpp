// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_IO_HPP
#define QBASIS_IO_HPP

#include <string>
#include <vector>

#include "cmatrix.hpp"
#include "fock.hpp"

namespace qbasis {

// Matrix JSON: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
std::string matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const std::string& text);

// State JSON: {"n": modes, "amplitudes": [[re, im], ...]} of length 2^n.
std::string state_to_json(const ManyBodyState& s);
ManyBodyState state_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qbasis

#endif
