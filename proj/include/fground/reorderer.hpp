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
#include <limits>
#include <map>
#include <set>
#include <string>

#include "fground/rewriter.hpp"

namespace fground {

inline constexpr std::int64_t kMaxWeight = std::numeric_limits<std::int64_t>::max();

/// Variables bound after a body prefix. Constants are always bound.
using BoundSet = std::set<std::string>;

/// Estimated tuple count per predicate, used to break ties between standard atoms.
using TableSizes = std::map<std::string, std::size_t>;

TableSizes fact_table_sizes(const FlatProgram& p);

/// Condition (a): the id is bound; condition (b): every other argument is.
bool id_bound(const FunctionAtom& fa, const BoundSet& bound);
bool args_bound(const FunctionAtom& fa, const BoundSet& bound);
inline bool placeable(const FunctionAtom& fa, const BoundSet& bound) {
    return id_bound(fa, bound) || args_bound(fa, bound);
}

/// Lower is placed first. Function atoms, negative and aggregate literals
/// score -kMaxWeight when they can be evaluated and +kMaxWeight otherwise;
/// standard atoms score strictly in between, preferring more bound arguments
/// and then smaller tables.
std::int64_t atom_weight(const BodyItem& item, const BoundSet& bound, const TableSizes& sizes = {});

/// Variables bound by the first `prefix` body items.
BoundSet bound_after(const FlatRule& fr, std::size_t prefix);

/// Places one standard atom at a time by weight; after each placement every
/// function atom whose condition became true follows it immediately.
/// Head-only function atoms are resolved last. Throws UsageError when some
/// item can never be placed.
FlatRule reorder_body(const FlatRule& fr, const TableSizes& sizes = {});

/// Same body with every standard atom first and the function atoms as late
/// as possible; the reference order for semantic comparisons.
FlatRule park_function_atoms(const FlatRule& fr, const TableSizes& sizes = {});

FlatProgram reorder_program(const FlatProgram& p);

/// First-fit audit: each function atom's condition holds at its position and
/// held at no earlier position occupied by a standard atom; head-only atoms
/// form the tail; negative and aggregate literals follow their bindings.
/// Returns an empty string when the body passes.
std::string check_placement(const FlatRule& fr);

} // namespace fground
