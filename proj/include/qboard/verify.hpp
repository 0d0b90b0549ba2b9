/*
 * Copyright 2026 The qboard Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include "qboard/qcount.hpp"
#include "qboard/residues.hpp"

namespace qboard {

struct VerifyOptions {
    int threads = 0;                  // 0 = OpenMP default
    uint64_t budget = 100'000'000;    // per enumeration call
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool allPass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});

// The individual checks, one per acceptance criterion.
CheckResult check_worked_example(const VerifyOptions& opts = {});
CheckResult check_fano_orbit(const VerifyOptions& opts = {});
CheckResult check_fano_residue_fits(const VerifyOptions& opts = {});
CheckResult check_rook_residue_sweep(const VerifyOptions& opts = {});
CheckResult check_hit_residue_sweep(const VerifyOptions& opts = {});
CheckResult check_square_chain(const VerifyOptions& opts = {});
CheckResult check_orbit_oracle(const VerifyOptions& opts = {});
CheckResult check_structural_sweep(const VerifyOptions& opts = {});
CheckResult check_generalized_relations(const VerifyOptions& opts = {});
CheckResult check_derangements(const VerifyOptions& opts = {});
CheckResult check_qanalogue_congruences(const VerifyOptions& opts = {});

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});

}  // namespace qboard
