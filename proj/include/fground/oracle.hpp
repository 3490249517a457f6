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

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fground/ast.hpp"
#include "fground/plain_program.hpp"

namespace fground {

inline constexpr std::size_t kUniverseCap = 1'000'000;
inline constexpr std::size_t kAtomCap = 24;

/// Number of ground terms of nesting at most k over the program's constants
/// and function symbols. Throws OracleTooLarge above `cap`.
std::size_t universe_size(const Program& p, unsigned k, std::size_t cap = kUniverseCap);

/// The terms themselves, by increasing level.
std::vector<Term> term_universe(const Program& p, unsigned k, std::size_t cap = kUniverseCap);

/// Reference grounding of the unflattened program. Instances are found by
/// matching positive atoms structurally against the atoms derived so far;
/// head terms deeper than k drop the instance.
PlainProgram naive_ground(const Program& p, unsigned k);

using Interpretation = std::set<std::string>;

/// Stable models of a ground disjunctive program by exhaustive enumeration.
std::set<Interpretation> answer_sets(const PlainProgram& gp, std::size_t atom_cap = kAtomCap);

std::string predicate_of(const std::string& atom);

/// Drops atoms of the given predicates from every interpretation.
std::set<Interpretation> project(const std::set<Interpretation>& sets, const std::set<std::string>& hidden);

} // namespace fground
