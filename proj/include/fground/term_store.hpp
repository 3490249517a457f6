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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fground/ast.hpp"

namespace fground {

/// Handle of one interned ground term. Constants and function ids share the
/// namespace, so a function argument tuple is just a tuple of TermIds.
struct TermId {
    std::uint32_t value = 0;

    friend bool operator==(TermId, TermId) = default;
    friend auto operator<=>(TermId, TermId) = default;
};

using Tuple = std::vector<TermId>;

struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept {
        std::size_t h = t.size();
        for (TermId id : t) h ^= id.value + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace fground

template <>
struct std::hash<fground::TermId> {
    std::size_t operator()(fground::TermId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

namespace fground {

struct FunctionSymbolId {
    std::uint32_t index = 0;
    friend bool operator==(FunctionSymbolId, FunctionSymbolId) = default;
};

/// Bijective table of one function symbol: argument tuple <-> id.
class FunctionTable {
public:
    FunctionTable(std::string name, std::size_t arity) : name_(std::move(name)), arity_(arity) {}

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }
    std::size_t size() const { return forward_.size(); }

    std::optional<TermId> find(const Tuple& args) const;
    const Tuple* args_of(TermId id) const;

    const std::unordered_map<Tuple, TermId, TupleHash>& forward() const { return forward_; }
    const std::unordered_map<TermId, Tuple>& reverse() const { return reverse_; }
    /// Ids in insertion order.
    const std::vector<TermId>& ids() const { return order_; }

private:
    friend class TermStore;
    void insert(const Tuple& args, TermId id);
    void erase(TermId id);

    std::string name_;
    std::size_t arity_;
    std::unordered_map<Tuple, TermId, TupleHash> forward_;
    std::unordered_map<TermId, Tuple> reverse_;
    std::vector<TermId> order_;
};

/// Position in the trail of tentative insertions. Marks are used LIFO.
struct TrailMark {
    std::size_t position = 0;
};

enum class InsertStatus { Existing, Created, NestingExceeded };

struct InsertOutcome {
    InsertStatus status;
    TermId id;  // meaningless when status == NestingExceeded

    explicit operator bool() const { return status != InsertStatus::NestingExceeded; }
};

struct StoreStats {
    std::size_t invented = 0;      // tentative insertions
    std::size_t committed = 0;
    std::size_t rolled_back = 0;
    std::size_t nesting_pruned = 0;
};

/// Interns ground terms. Every function symbol owns a FunctionTable; every
/// term records its nesting level (0 for constants, 1 + max over arguments
/// for function ids). Tentative insertions go on a trail and are either
/// committed or rolled back.
///
/// Single writer; immutable reads are safe once grounding has finished.
class TermStore {
public:
    TermId intern_constant(std::string_view name);
    TermId intern_number(std::int64_t value);

    /// Interns a ground surface term inside-to-outside (non-tentatively).
    /// Returns nullopt if the term violates `max_nesting`.
    std::optional<TermId> intern(const Term& ground, std::optional<unsigned> max_nesting = std::nullopt);

    FunctionSymbolId declare_function(std::string_view name, std::size_t arity);
    std::optional<FunctionSymbolId> find_function(std::string_view name, std::size_t arity) const;
    const FunctionTable& table(FunctionSymbolId f) const { return tables_.at(f.index); }
    std::size_t function_count() const { return tables_.size(); }

    std::optional<TermId> lookup_function(FunctionSymbolId f, std::span<const TermId> args) const;
    /// By name; throws UsageError when `f` is declared with a different arity.
    std::optional<TermId> lookup_function(std::string_view f, std::span<const TermId> args) const;

    /// Returns the existing id if the tuple is present (committed or on the
    /// trail). Otherwise mints a fresh id of level 1 + max(arg levels), unless
    /// that exceeds `max_nesting`.
    InsertOutcome insert_function(FunctionSymbolId f, std::span<const TermId> args,
                                  std::optional<unsigned> max_nesting = std::nullopt, bool tentative = false);
    InsertOutcome insert_function(std::string_view f, std::span<const TermId> args,
                                  std::optional<unsigned> max_nesting = std::nullopt, bool tentative = false);

    TrailMark mark() const { return TrailMark{trail_.size()}; }
    void rollback(TrailMark m);
    void commit(TrailMark m);
    /// Tentative insertions not yet committed.
    std::size_t pending() const;

    bool contains(TermId id) const;
    bool is_function(TermId id) const;
    unsigned nesting_level(TermId id) const;
    /// Function symbol and arguments of a function id; nullopt for constants.
    std::optional<std::pair<FunctionSymbolId, const Tuple*>> decompose(TermId id) const;

    Term to_term(TermId id) const;
    /// Nested textual form, e.g. `f(s(1),2)`.
    std::string text(TermId id) const;
    /// Constants print as themselves, function ids as `@k`.
    std::string label(TermId id) const;

    /// Live ids in creation order.
    std::vector<TermId> ids() const;
    /// Canonical dump of the live contents (ids, args, levels), for audits.
    std::vector<std::string> dump() const;
    /// Empty if forward/reverse tables are mutually inverse, every tuple only
    /// refers to older ids, and levels follow the recurrence; otherwise a
    /// description of the first violation.
    std::string check_invariants() const;

    const StoreStats& stats() const { return stats_; }
    void note_nesting_pruned() { ++stats_.nesting_pruned; }

private:
    enum class EntryKind : std::uint8_t { Symbol, Number, Function, Dead };

    struct Entry {
        EntryKind kind;
        std::string text;  // constant spelling
        std::uint32_t symbol = 0;
        unsigned level = 0;
        std::uint32_t label = 0;  // k in @k
    };

    struct TrailEntry {
        TermId id;
        bool committed = false;
    };

    TermId intern_constant_entry(EntryKind kind, std::string text);
    const Entry& entry(TermId id) const;
    void kill(TermId id);

    std::vector<Entry> entries_;
    std::unordered_map<std::string, TermId> symbols_;
    std::unordered_map<std::string, TermId> numbers_;
    std::vector<FunctionTable> tables_;
    std::vector<TrailEntry> trail_;
    std::uint32_t next_label_ = 1;
    StoreStats stats_;
};

} // namespace fground
