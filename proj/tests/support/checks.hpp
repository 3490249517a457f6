/*
 *  Copyright (C) 2026  fground authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fground/ast.hpp"
#include "fground/grounder.hpp"
#include "fground/oracle.hpp"

namespace fground::testing {

using Failures = std::vector<std::string>;

// Property suites. Each returns the failing cases, empty when all pass.
Failures flatten_roundtrip(std::uint64_t seed, unsigned rules);
Failures parser_roundtrip(std::uint64_t seed, unsigned programs);
Failures table_bijectivity(std::uint64_t seed, unsigned rounds);
Failures trail_transactionality(std::uint64_t seed, unsigned rounds);
Failures placement_audit(std::uint64_t seed, unsigned programs);
/// Every table entry is a subterm of some fact or head atom, and no term
/// exceeds the bound.
Failures invention_audit(std::uint64_t seed, unsigned programs);

/// Grounds with the main pipeline and reads ids back.
struct PipelineRun {
    PlainProgram plain;
    std::set<std::string> aux;
    std::string with_ids;  // full --show-ids output, table dump included
};
PipelineRun run_pipeline(const Program& p, unsigned k, bool backjumping = true);

enum class Verdict { Agree, Skipped, Disagree };

struct Comparison {
    Verdict verdict;
    std::string detail;
};

/// Oracle differential on one program: answer sets projected onto source
/// predicates, plus exact facts and rules when no #count is involved.
Comparison compare_with_oracle(const Program& p, unsigned k);

/// Randomized program for the differential suites, with its bound.
struct Sample {
    Program program;
    unsigned k;
};
Sample random_sample(std::uint64_t seed);

} // namespace fground::testing
