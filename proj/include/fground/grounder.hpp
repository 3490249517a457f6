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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fground/plain_program.hpp"
#include "fground/rewriter.hpp"
#include "fground/term_store.hpp"

namespace fground {

/// Bound to the id variable of a function atom whose term does not exist
/// and which occurs only under negation: every atom over it is false.
inline constexpr TermId kAbsent{0xffffffffu};

struct GroundAtom {
    std::uint32_t predicate = 0;
    Tuple args;

    friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
    friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

/// `#count{elements} = target` over atoms that are not yet decided.
struct GroundAggregate {
    std::int64_t target = 0;
    std::vector<GroundAtom> elements;

    friend bool operator==(const GroundAggregate&, const GroundAggregate&) = default;
    friend auto operator<=>(const GroundAggregate&, const GroundAggregate&) = default;
};

struct GroundRule {
    std::vector<GroundAtom> head;
    std::vector<GroundAtom> body_pos;
    std::vector<GroundAtom> body_neg;
    std::vector<GroundAggregate> aggregates;

    friend bool operator==(const GroundRule&, const GroundRule&) = default;
    friend auto operator<=>(const GroundRule&, const GroundRule&) = default;
};

struct GroundStats {
    std::size_t rule_matches = 0;    // rule match passes
    std::size_t instantiations = 0;  // complete body matches
};

/// Result of grounding. Function atoms never appear; `store` resolves ids.
struct GroundProgram {
    std::vector<std::string> predicates;
    std::vector<GroundAtom> facts;
    std::vector<GroundRule> rules;
    const TermStore* store = nullptr;
    GroundStats stats;

    std::string atom_text(const GroundAtom& a, bool show_ids = false) const;
    std::string rule_text(const GroundRule& r, bool show_ids = false) const;
};

struct GroundOptions {
    std::optional<unsigned> max_nesting;
    /// Function atoms have at most one match; with backjumping they are never
    /// retried. Without it they are matched by scanning their table like any
    /// other predicate.
    bool backjumping = true;
};

/// Partial assignment of rule variables with an undo trail.
class Binding {
public:
    Binding() = default;
    explicit Binding(std::vector<std::string> variables);

    std::size_t size() const { return values_.size(); }
    std::optional<std::size_t> index_of(const std::string& variable) const;
    const std::string& name(std::size_t var) const { return names_[var]; }

    std::optional<TermId> get(std::size_t var) const { return values_[var]; }
    std::optional<TermId> get(const std::string& variable) const;
    void bind(std::size_t var, TermId value);
    void bind(const std::string& variable, TermId value);

    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t mark);

private:
    std::vector<std::string> names_;
    std::vector<std::optional<TermId>> values_;
    std::vector<std::size_t> trail_;
};

enum class MatchOutcome {
    Matched,     // existing tuple; bindings extended
    MatchedNew,  // fresh tentative id bound
    Absent,      // term does not exist; id bound to kAbsent
    Failed,
};

/// One function atom against the store. With the id bound the reverse tuple
/// must agree with the binding (unbound arguments get bound); nothing is ever
/// created. With only the arguments bound a forward hit binds the id; a miss
/// mints a tentative id if the atom may invent, fails if a positive body
/// atom needs the term, and yields Absent otherwise. Constants in `fa` must
/// already be interned. Nesting failures count as Failed.
MatchOutcome match_function_atom(const FunctionAtom& fa, Binding& b, TermStore& store,
                                 std::optional<unsigned> max_nesting);

/// Instantiates a reordered flat program component by component. Facts go
/// into the store-backed tables first; every complete match commits its
/// tentative ids and adds its head atoms to the possibly-true tables.
/// Throws StratificationError for unstratified negation or aggregates.
GroundProgram ground_program(const FlatProgram& p, TermStore& store, const GroundOptions& opts = {});

/// Facts and rules with ids read back into nested terms.
PlainProgram readback(const GroundProgram& gp);

/// Facts, then rules, one per line. With `show_ids`, atoms keep their `@k`
/// ids and a dump of every function table follows.
std::string print_ground_program(const GroundProgram& gp, bool show_ids = false);

} // namespace fground
