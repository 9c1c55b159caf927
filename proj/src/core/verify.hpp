// Copyright (c) 2026, the authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0

#ifndef QBASIS_VERIFY_HPP
#define QBASIS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qbasis {

struct VerifyOptions {
    std::size_t n = 4;          // largest mode count exercised (<= 6)
    std::size_t trials = 20;    // trials per suite
    std::uint64_t seed = 1;
    bool inject_fault = false;  // perturb one synthesized gate angle
};

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct VerifySummary {
    std::vector<SuiteResult> suites;
    bool all_pass = true;
};

// Runs the oracle-equivalence suites: QR round-trip, wedge
// multiplicativity, Thouless agreement, encoded-gate identities,
// block-encoding exactness, and the truncation bound. Deterministic
// given (options, seed).
VerifySummary run_verification(const VerifyOptions& opt);

// Stable JSON rendering with no timestamp, byte-identical across reruns.
std::string verify_summary_to_json(const VerifySummary& summary);

}  // namespace qbasis

#endif
