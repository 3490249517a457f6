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
#include "fground/term_store.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace fground {

std::optional<TermId> FunctionTable::find(const Tuple& args) const {
    auto it = forward_.find(args);
    if (it == forward_.end()) return std::nullopt;
    return it->second;
}

const Tuple* FunctionTable::args_of(TermId id) const {
    auto it = reverse_.find(id);
    return it == reverse_.end() ? nullptr : &it->second;
}

void FunctionTable::insert(const Tuple& args, TermId id) {
    forward_.emplace(args, id);
    reverse_.emplace(id, args);
    order_.push_back(id);
}

void FunctionTable::erase(TermId id) {
    auto it = reverse_.find(id);
    if (it == reverse_.end()) return;
    forward_.erase(it->second);
    reverse_.erase(it);
    // rolled-back ids are almost always the newest
    for (auto o = order_.rbegin(); o != order_.rend(); ++o) {
        if (*o == id) {
            order_.erase(std::next(o).base());
            break;
        }
    }
}

TermId TermStore::intern_constant_entry(EntryKind kind, std::string text) {
    auto& index = kind == EntryKind::Symbol ? symbols_ : numbers_;
    if (auto it = index.find(text); it != index.end()) return it->second;
    TermId id{static_cast<std::uint32_t>(entries_.size())};
    entries_.push_back(Entry{kind, text, 0, 0, 0});
    index.emplace(std::move(text), id);
    return id;
}

TermId TermStore::intern_constant(std::string_view name) {
    if (name.empty()) throw UsageError("empty constant");
    if (std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return intern_constant_entry(EntryKind::Number, std::to_string(std::stoll(std::string(name))));
    return intern_constant_entry(EntryKind::Symbol, std::string(name));
}

TermId TermStore::intern_number(std::int64_t value) {
    return intern_constant_entry(EntryKind::Number, std::to_string(value));
}

std::optional<TermId> TermStore::intern(const Term& t, std::optional<unsigned> max_nesting) {
    switch (t.kind) {
    case Term::Kind::Symbol: return intern_constant(t.name);
    case Term::Kind::Number: return intern_constant_entry(EntryKind::Number, t.name);
    case Term::Kind::Function: {
        Tuple args;
        args.reserve(t.args.size());
        for (const auto& a : t.args) {
            auto id = intern(a, max_nesting);
            if (!id) return std::nullopt;
            args.push_back(*id);
        }
        auto out = insert_function(declare_function(t.name, args.size()), args, max_nesting, false);
        if (!out) return std::nullopt;
        return out.id;
    }
    default:
        throw UsageError("cannot intern non-ground term " + to_string(t));
    }
}

FunctionSymbolId TermStore::declare_function(std::string_view name, std::size_t arity) {
    if (arity == 0) throw UsageError("function symbol " + std::string(name) + " needs arity >= 1");
    if (auto f = find_function(name, arity)) return *f;
    tables_.emplace_back(std::string(name), arity);
    return FunctionSymbolId{static_cast<std::uint32_t>(tables_.size() - 1)};
}

std::optional<FunctionSymbolId> TermStore::find_function(std::string_view name, std::size_t arity) const {
    for (std::size_t i = 0; i < tables_.size(); ++i)
        if (tables_[i].name() == name && tables_[i].arity() == arity)
            return FunctionSymbolId{static_cast<std::uint32_t>(i)};
    return std::nullopt;
}

std::optional<TermId> TermStore::lookup_function(FunctionSymbolId f, std::span<const TermId> args) const {
    const auto& t = tables_.at(f.index);
    if (args.size() != t.arity())
        throw UsageError("arity mismatch for " + t.name() + ": expected " + std::to_string(t.arity()) + ", got " +
                         std::to_string(args.size()));
    return t.find(Tuple(args.begin(), args.end()));
}

std::optional<TermId> TermStore::lookup_function(std::string_view f, std::span<const TermId> args) const {
    for (std::size_t i = 0; i < tables_.size(); ++i) {
        if (tables_[i].name() != f) continue;
        return lookup_function(FunctionSymbolId{static_cast<std::uint32_t>(i)}, args);
    }
    return std::nullopt;
}

InsertOutcome TermStore::insert_function(std::string_view f, std::span<const TermId> args,
                                         std::optional<unsigned> max_nesting, bool tentative) {
    for (const auto& t : tables_)
        if (t.name() == f && t.arity() != args.size())
            throw UsageError("arity mismatch for " + t.name() + ": expected " + std::to_string(t.arity()) +
                             ", got " + std::to_string(args.size()));
    return insert_function(declare_function(f, args.size()), args, max_nesting, tentative);
}

InsertOutcome TermStore::insert_function(FunctionSymbolId f, std::span<const TermId> args,
                                         std::optional<unsigned> max_nesting, bool tentative) {
    auto& table = tables_.at(f.index);
    if (args.size() != table.arity())
        throw UsageError("arity mismatch for " + table.name() + ": expected " + std::to_string(table.arity()) +
                         ", got " + std::to_string(args.size()));
    Tuple key(args.begin(), args.end());
    if (auto hit = table.find(key)) return {InsertStatus::Existing, *hit};

    unsigned level = 0;
    for (TermId a : key) level = std::max(level, nesting_level(a));
    ++level;
    if (max_nesting && level > *max_nesting) return {InsertStatus::NestingExceeded, TermId{}};

    TermId id{static_cast<std::uint32_t>(entries_.size())};
    entries_.push_back(Entry{EntryKind::Function, {}, f.index, level, next_label_++});
    table.insert(key, id);
    if (tentative) {
        trail_.push_back(TrailEntry{id, false});
        ++stats_.invented;
    }
    return {InsertStatus::Created, id};
}

void TermStore::kill(TermId id) {
    auto& e = entries_[id.value];
    tables_[e.symbol].erase(id);
    e.kind = EntryKind::Dead;
    while (!entries_.empty() && entries_.back().kind == EntryKind::Dead) {
        if (entries_.back().label + 1 == next_label_) --next_label_;
        entries_.pop_back();
    }
}

void TermStore::rollback(TrailMark m) {
    if (m.position > trail_.size()) throw UsageError("trail mark used out of LIFO order");
    while (trail_.size() > m.position) {
        TrailEntry e = trail_.back();
        trail_.pop_back();
        if (!e.committed) {
            kill(e.id);
            ++stats_.rolled_back;
        }
    }
}

void TermStore::commit(TrailMark m) {
    if (m.position > trail_.size()) throw UsageError("trail mark used out of LIFO order");
    // Committed entries stay on the trail as inert placeholders so that
    // outstanding inner marks remain valid; rollback skips them. Tentative
    // arguments of a committed tuple are committed with it, so an outer
    // rollback can never strand a reference.
    std::unordered_set<TermId> needed;
    for (std::size_t i = trail_.size(); i-- > 0;) {
        TrailEntry& e = trail_[i];
        if (i < m.position && !needed.count(e.id)) continue;
        if (!e.committed) {
            e.committed = true;
            ++stats_.committed;
        }
        if (const Tuple* args = tables_[entries_[e.id.value].symbol].args_of(e.id))
            needed.insert(args->begin(), args->end());
    }
}

std::size_t TermStore::pending() const {
    return static_cast<std::size_t>(
        std::count_if(trail_.begin(), trail_.end(), [](const TrailEntry& e) { return !e.committed; }));
}

bool TermStore::contains(TermId id) const {
    return id.value < entries_.size() && entries_[id.value].kind != EntryKind::Dead;
}

const TermStore::Entry& TermStore::entry(TermId id) const {
    if (!contains(id)) throw UsageError("unknown term id " + std::to_string(id.value));
    return entries_[id.value];
}

bool TermStore::is_function(TermId id) const { return entry(id).kind == EntryKind::Function; }

unsigned TermStore::nesting_level(TermId id) const { return entry(id).level; }

std::optional<std::pair<FunctionSymbolId, const Tuple*>> TermStore::decompose(TermId id) const {
    const auto& e = entry(id);
    if (e.kind != EntryKind::Function) return std::nullopt;
    return std::make_pair(FunctionSymbolId{e.symbol}, tables_[e.symbol].args_of(id));
}

Term TermStore::to_term(TermId id) const {
    const auto& e = entry(id);
    switch (e.kind) {
    case EntryKind::Symbol: return Term::symbol(e.text);
    case EntryKind::Number: return Term{Term::Kind::Number, e.text, {}};
    default: break;
    }
    const auto& table = tables_[e.symbol];
    std::vector<Term> args;
    for (TermId a : *table.args_of(id)) args.push_back(to_term(a));
    return Term::function(table.name(), std::move(args));
}

std::string TermStore::text(TermId id) const { return to_string(to_term(id)); }

std::string TermStore::label(TermId id) const {
    const auto& e = entry(id);
    if (e.kind == EntryKind::Function) return "@" + std::to_string(e.label);
    return e.text;
}

std::vector<TermId> TermStore::ids() const {
    std::vector<TermId> out;
    for (std::uint32_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].kind != EntryKind::Dead) out.push_back(TermId{i});
    return out;
}

std::vector<std::string> TermStore::dump() const {
    std::vector<std::string> out;
    for (TermId id : ids()) {
        const auto& e = entries_[id.value];
        std::ostringstream os;
        os << id.value << ' ' << label(id) << " level=" << e.level;
        if (e.kind == EntryKind::Function) {
            os << ' ' << tables_[e.symbol].name() << '<';
            const Tuple* args = tables_[e.symbol].args_of(id);
            for (std::size_t i = 0; i < args->size(); ++i) os << (i ? "," : "") << (*args)[i].value;
            os << '>';
        }
        out.push_back(os.str());
    }
    for (const auto& t : tables_) out.push_back(t.name() + "/" + std::to_string(t.arity()) + " size=" + std::to_string(t.size()));
    return out;
}

std::string TermStore::check_invariants() const {
    std::size_t functions = 0;
    for (TermId id : ids()) {
        const auto& e = entries_[id.value];
        if (e.kind != EntryKind::Function) {
            if (e.level != 0) return "constant " + e.text + " has nonzero level";
            continue;
        }
        ++functions;
        const auto& table = tables_[e.symbol];
        const Tuple* args = table.args_of(id);
        if (!args) return "id " + label(id) + " missing from reverse map of " + table.name();
        auto back = table.find(*args);
        if (!back || *back != id) return "forward map of " + table.name() + " disagrees for " + label(id);
        unsigned deepest = 0;
        for (TermId a : *args) {
            if (!contains(a) || a.value >= id.value) return "tuple of " + label(id) + " refers to a newer or dead id";
            deepest = std::max(deepest, entries_[a.value].level);
        }
        if (e.level != deepest + 1) return "nesting level of " + label(id) + " breaks the recurrence";
    }
    std::size_t tabled = 0;
    for (const auto& t : tables_) {
        if (t.forward().size() != t.reverse().size()) return "table " + t.name() + " is not a bijection";
        for (const auto& [args, id] : t.forward()) {
            auto it = t.reverse().find(id);
            if (it == t.reverse().end() || it->second != args) return "reverse map of " + t.name() + " disagrees";
            if (!contains(id)) return "table " + t.name() + " maps to a dead id";
        }
        tabled += t.size();
    }
    if (tabled != functions) return "store holds function ids outside every table";
    return {};
}

} // namespace fground
