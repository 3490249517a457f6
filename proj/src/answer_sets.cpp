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
#include <algorithm>
#include <map>
#include <cstdint>
#include <optional>

#include "fground/oracle.hpp"

namespace fground {

namespace {

using Mask = std::uint32_t;

// A conjunction over undecided atoms; nullopt when it mentions an atom that
// can never be true.
using Conj = std::optional<Mask>;

struct CompiledAggregate {
    std::int64_t target = 0;
    std::vector<std::vector<Mask>> elements;  // alternatives per element
};

struct CompiledRule {
    Mask head = 0;
    Mask pos = 0;
    Mask neg = 0;
    std::vector<CompiledAggregate> aggregates;
};

bool holds(const CompiledAggregate& a, Mask i) {
    std::int64_t n = 0;
    for (const auto& alts : a.elements)
        if (std::any_of(alts.begin(), alts.end(), [&](Mask m) { return (m & ~i) == 0; })) ++n;
    return n == a.target;
}

// Negation and aggregates are read against the candidate `i`.
bool applies(const CompiledRule& r, Mask i) {
    if (r.neg & i) return false;
    return std::all_of(r.aggregates.begin(), r.aggregates.end(), [&](const auto& a) { return holds(a, i); });
}

bool model_of_reduct(const std::vector<const CompiledRule*>& reduct, Mask j) {
    for (const CompiledRule* r : reduct)
        if ((r->pos & ~j) == 0 && (r->head & j) == 0) return false;
    return true;
}

} // namespace

std::set<Interpretation> answer_sets(const PlainProgram& gp, std::size_t atom_cap) {
    std::set<std::string> facts(gp.facts.begin(), gp.facts.end());
    std::map<std::string, unsigned> index;
    std::vector<std::string> atoms;
    for (const auto& r : gp.rules) {
        for (const auto& h : r.head) {
            if (facts.count(h) || index.count(h)) continue;
            index.emplace(h, static_cast<unsigned>(atoms.size()));
            atoms.push_back(h);
        }
    }
    if (atoms.size() > atom_cap || atoms.size() >= 32)
        throw OracleTooLarge("answer-set oracle limited to " + std::to_string(atom_cap) + " undecided atoms");

    auto conj = [&](const std::vector<std::string>& lits) -> Conj {
        Mask m = 0;
        for (const auto& a : lits) {
            if (facts.count(a)) continue;
            auto it = index.find(a);
            if (it == index.end()) return std::nullopt;
            m |= Mask{1} << it->second;
        }
        return m;
    };

    std::vector<CompiledRule> rules;
    for (const auto& r : gp.rules) {
        CompiledRule c;
        auto pos = conj(r.pos);
        if (!pos) continue;
        c.pos = *pos;
        bool dead = false;
        for (const auto& n : r.neg) {
            if (facts.count(n)) dead = true;
            auto it = index.find(n);
            if (it != index.end()) c.neg |= Mask{1} << it->second;
        }
        if (dead) continue;
        bool head_true = false;
        for (const auto& h : r.head) {
            if (facts.count(h)) head_true = true;
            else c.head |= Mask{1} << index.at(h);
        }
        if (head_true) continue;
        for (const auto& a : r.aggregates) {
            CompiledAggregate ca{a.target, {}};
            for (const auto& element : a.elements) {
                std::vector<Mask> alts;
                for (const auto& alt : element)
                    if (auto m = conj(alt)) alts.push_back(*m);
                ca.elements.push_back(std::move(alts));
            }
            c.aggregates.push_back(std::move(ca));
        }
        rules.push_back(std::move(c));
    }

    std::set<Interpretation> out;
    const Mask limit = Mask{1} << atoms.size();
    for (Mask i = 0; i < limit; ++i) {
        std::vector<const CompiledRule*> reduct;
        for (const auto& r : rules)
            if (applies(r, i)) reduct.push_back(&r);
        if (!model_of_reduct(reduct, i)) continue;
        bool minimal = true;
        for (Mask j = (i - 1) & i; minimal && j != i; j = (j - 1) & i) {
            if (model_of_reduct(reduct, j)) minimal = false;
            if (j == 0) break;
        }
        if (!minimal) continue;
        Interpretation interp(facts.begin(), facts.end());
        for (unsigned b = 0; b < atoms.size(); ++b)
            if (i & (Mask{1} << b)) interp.insert(atoms[b]);
        out.insert(std::move(interp));
    }
    return out;
}

} // namespace fground
