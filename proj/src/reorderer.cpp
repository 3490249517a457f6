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
#include "fground/reorderer.hpp"

#include <algorithm>

namespace fground {

namespace {

bool term_bound(const Term& t, const BoundSet& bound) { return !t.is_variable() || bound.count(t.name) > 0; }

void bind_all(const Atom& a, BoundSet& bound) {
    std::vector<std::string> vars;
    collect_variables(a, vars);
    bound.insert(vars.begin(), vars.end());
}

std::vector<std::string> globals_of(const Aggregate& agg) {
    std::vector<std::string> vars, out;
    for (const auto& c : agg.conjunction) collect_variables(c, vars);
    for (const auto& v : vars)
        if (std::find(agg.local_vars.begin(), agg.local_vars.end(), v) == agg.local_vars.end()) out.push_back(v);
    return out;
}

bool literal_ready(const Literal& l, const BoundSet& bound) {
    if (l.is_aggregate()) {
        auto g = globals_of(l.aggregate());
        return std::all_of(g.begin(), g.end(), [&](const std::string& v) { return bound.count(v) > 0; });
    }
    return std::all_of(l.atom().args.begin(), l.atom().args.end(),
                       [&](const Term& t) { return t.is_ground() || bound.count(t.name) > 0; });
}

bool is_standard(const BodyItem& item) {
    const Literal* l = as_literal(item);
    return l && l->is_positive_atom();
}

bool head_only(const BodyItem& item) {
    const FunctionAtom* fa = as_function(item);
    return fa && fa->provenance() == Provenance::HeadOnly;
}

void place(const BodyItem& item, BoundSet& bound) {
    if (const FunctionAtom* fa = as_function(item)) {
        bind_all(fa->as_atom(), bound);
        return;
    }
    const Literal& l = std::get<Literal>(item);
    if (l.is_aggregate()) {
        bound.insert(l.aggregate().bound_var);
    } else if (!l.negated) {
        bind_all(l.atom(), bound);
    }
}

// Repeatedly takes the lightest remaining item (first on ties).
void place_by_weight(std::vector<BodyItem>& pending, std::vector<BodyItem>& out, BoundSet& bound,
                     const TableSizes& sizes, const FlatRule& fr) {
    while (!pending.empty()) {
        std::size_t best = 0;
        std::int64_t best_weight = atom_weight(pending[0], bound, sizes);
        for (std::size_t i = 1; i < pending.size(); ++i) {
            auto w = atom_weight(pending[i], bound, sizes);
            if (w < best_weight) {
                best = i;
                best_weight = w;
            }
        }
        if (best_weight == kMaxWeight)
            throw UsageError("no valid body placement for " + to_string(pending[best]) + " in " + to_string(fr));
        place(pending[best], bound);
        out.push_back(std::move(pending[best]));
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    }
}

FlatRule with_body(const FlatRule& fr, std::vector<BodyItem> body) {
    FlatRule out;
    out.head = fr.head;
    out.origin = fr.origin;
    out.body = std::move(body);
    return out;
}

} // namespace

TableSizes fact_table_sizes(const FlatProgram& p) {
    TableSizes sizes;
    for (const auto& f : p.facts) ++sizes[f.predicate];
    return sizes;
}

bool id_bound(const FunctionAtom& fa, const BoundSet& bound) { return term_bound(fa.id, bound); }

bool args_bound(const FunctionAtom& fa, const BoundSet& bound) {
    return std::all_of(fa.args.begin(), fa.args.end(), [&](const Term& t) { return term_bound(t, bound); });
}

std::int64_t atom_weight(const BodyItem& item, const BoundSet& bound, const TableSizes& sizes) {
    if (const FunctionAtom* fa = as_function(item)) return placeable(*fa, bound) ? -kMaxWeight : kMaxWeight;
    const Literal& l = std::get<Literal>(item);
    if (l.negated || l.is_aggregate()) return literal_ready(l, bound) ? -kMaxWeight : kMaxWeight;

    const Atom& a = l.atom();
    std::int64_t bound_args = 0;
    for (const auto& t : a.args)
        if (term_bound(t, bound)) ++bound_args;
    std::int64_t size = 0;
    if (auto it = sizes.find(a.predicate); it != sizes.end())
        size = static_cast<std::int64_t>(std::min<std::size_t>(it->second, std::size_t{1} << 31));
    return -(bound_args << 32) + size;
}

BoundSet bound_after(const FlatRule& fr, std::size_t prefix) {
    BoundSet bound;
    for (std::size_t i = 0; i < prefix && i < fr.body.size(); ++i) place(fr.body[i], bound);
    return bound;
}

FlatRule reorder_body(const FlatRule& fr, const TableSizes& sizes) {
    std::vector<BodyItem> pending, tail, out;
    for (const auto& item : fr.body) (head_only(item) ? tail : pending).push_back(item);
    BoundSet bound;
    place_by_weight(pending, out, bound, sizes, fr);
    place_by_weight(tail, out, bound, sizes, fr);
    return with_body(fr, std::move(out));
}

FlatRule park_function_atoms(const FlatRule& fr, const TableSizes& sizes) {
    std::vector<BodyItem> standard, rest, out;
    for (const auto& item : fr.body) (is_standard(item) ? standard : rest).push_back(item);
    BoundSet bound;
    place_by_weight(standard, out, bound, sizes, fr);
    place_by_weight(rest, out, bound, sizes, fr);
    return with_body(fr, std::move(out));
}

FlatProgram reorder_program(const FlatProgram& p) {
    FlatProgram out = p;
    auto sizes = fact_table_sizes(p);
    for (auto& r : out.rules) r = reorder_body(r, sizes);
    return out;
}

std::string check_placement(const FlatRule& fr) {
    const auto& body = fr.body;
    bool in_tail = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
        BoundSet bound = bound_after(fr, i);
        if (head_only(body[i])) {
            in_tail = true;
            if (!args_bound(*as_function(body[i]), bound))
                return "head-only atom " + to_string(body[i]) + " lacks bound arguments";
            continue;
        }
        if (in_tail) return to_string(body[i]) + " follows the head-only tail";
        if (const FunctionAtom* fa = as_function(body[i])) {
            if (!placeable(*fa, bound)) return to_string(body[i]) + " placed before its id or arguments are bound";
            for (std::size_t j = 0; j < i; ++j)
                if (is_standard(body[j]) && placeable(*fa, bound_after(fr, j)))
                    return to_string(body[i]) + " could have been placed before " + to_string(body[j]);
        } else if (!is_standard(body[i]) && !literal_ready(std::get<Literal>(body[i]), bound)) {
            return to_string(body[i]) + " placed before its variables are bound";
        }
    }
    return {};
}

} // namespace fground
