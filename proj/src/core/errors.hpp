// Copyright 2026 The qbasis authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QBASIS_ERRORS_HPP
#define QBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbasis {

/// Bad caller input: wrong sizes, non-unitary matrix where unitarity is
/// required, contraction violations, malformed JSON. Maps to exit code 2.
struct invalid_input_error : std::runtime_error {
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Post-selection outcome has probability (numerically) zero. Exit code 3.
struct impossible_outcome_error : std::runtime_error {
    explicit impossible_outcome_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed. Exit code 4.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbasis

#endif
