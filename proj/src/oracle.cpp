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
#include "fground/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace fground {

namespace {

using Subst = std::map<std::string, Term>;

void gather_symbols(const Term& t, std::map<std::string, Term>& constants, std::map<std::string, std::size_t>& functions) {
    if (t.is_constant()) constants.emplace(to_string(t), t);
    if (t.is_function()) functions[t.name] = t.args.size();
    for (const auto& a : t.args) gather_symbols(a, constants, functions);
}

void gather_symbols(const Program& p, std::map<std::string, Term>& constants, std::map<std::string, std::size_t>& functions) {
    auto atom = [&](const Atom& a) {
        for (const auto& t : a.args) gather_symbols(t, constants, functions);
    };
    for (const auto& r : p.rules) {
        for (const auto& h : r.head) atom(h);
        for (const auto& l : r.body) {
            if (l.is_aggregate()) {
                for (const auto& c : l.aggregate().conjunction) atom(c);
            } else {
                atom(l.atom());
            }
        }
    }
}

Term substitute(const Term& t, const Subst& s) {
    if (t.is_variable()) {
        auto it = s.find(t.name);
        return it == s.end() ? t : it->second;
    }
    if (!t.is_function()) return t;
    Term out = t;
    for (auto& a : out.args) a = substitute(a, s);
    return out;
}

Atom substitute(const Atom& a, const Subst& s) {
    Atom out{a.predicate, {}};
    for (const auto& t : a.args) out.args.push_back(substitute(t, s));
    return out;
}

bool unify(const Term& pattern, const Term& ground, Subst& s) {
    switch (pattern.kind) {
    case Term::Kind::Variable: {
        auto [it, fresh] = s.emplace(pattern.name, ground);
        return fresh || it->second == ground;
    }
    case Term::Kind::Function:
        if (!ground.is_function() || ground.name != pattern.name || ground.args.size() != pattern.args.size())
            return false;
        for (std::size_t i = 0; i < pattern.args.size(); ++i)
            if (!unify(pattern.args[i], ground.args[i], s)) return false;
        return true;
    default:
        return pattern == ground;
    }
}

bool unify(const Atom& pattern, const Atom& ground, Subst& s) {
    for (std::size_t i = 0; i < pattern.args.size(); ++i)
        if (!unify(pattern.args[i], ground.args[i], s)) return false;
    return true;
}

bool head_within(const Atom& a, unsigned k) {
    return std::all_of(a.args.begin(), a.args.end(), [&](const Term& t) { return nesting_level(t) <= k; });
}

// Stratum per predicate: positive arcs allow equality, negative and
// aggregate arcs require a strictly higher stratum.
std::map<std::string, int> strata(const Program& p) {
    std::map<std::string, int> level;
    for (const auto& r : p.rules) {
        for (const auto& h : r.head) level[h.predicate];
        for (const auto& l : r.body) {
            if (l.is_aggregate()) {
                for (const auto& c : l.aggregate().conjunction) level[c.predicate];
            } else {
                level[l.atom().predicate];
            }
        }
    }
    const int limit = static_cast<int>(level.size());
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : p.rules) {
            for (const auto& h : r.head) {
                int need = 0;
                for (const auto& l : r.body) {
                    if (l.is_aggregate()) {
                        for (const auto& c : l.aggregate().conjunction) need = std::max(need, level[c.predicate] + 1);
                    } else {
                        need = std::max(need, level[l.atom().predicate] + (l.negated ? 1 : 0));
                    }
                }
                if (level[h.predicate] < need) {
                    level[h.predicate] = need;
                    changed = true;
                    if (need > limit)
                        throw StratificationError("program is not stratified", {h.predicate});
                }
            }
        }
    }
    return level;
}

class Naive {
public:
    Naive(const Program& p, unsigned k) : program_(p), k_(k) {}

    PlainProgram run() {
        universe_size(program_, k_);
        auto level = strata(program_);
        int top = 0;
        for (const auto& [_, l] : level) top = std::max(top, l);
        std::vector<std::vector<const Rule*>> by_stratum(top + 2);
        for (const auto& r : program_.rules) {
            int s = top + 1;
            for (const auto& h : r.head) s = std::min(s, level.at(h.predicate));
            by_stratum[s].push_back(&r);
        }
        for (const auto& rules : by_stratum) {
            for (bool grew = true; grew;) {
                const std::size_t before = possible_count_;
                for (const Rule* r : rules) instantiate(*r);
                grew = possible_count_ != before;
            }
            close_facts();
        }
        PlainProgram out;
        out.facts.assign(facts_.begin(), facts_.end());
        std::set<PlainRule> kept;
        for (PlainRule r : rules_) {
            std::erase_if(r.pos, [&](const std::string& a) { return facts_.count(a) > 0; });
            if (r.head.size() == 1 && r.pos.empty() && r.neg.empty() && r.aggregates.empty()) continue;
            kept.insert(canonical(std::move(r)));
        }
        out.rules.assign(kept.begin(), kept.end());
        return out;
    }

private:
    void add_possible(const Atom& a) {
        std::string text = to_string(a);
        if (possible_text_.insert(text).second) {
            possible_[a.predicate].push_back(a);
            ++possible_count_;
        }
    }

    // Enumerates substitutions making every atom in `atoms` possibly true.
    void join(const std::vector<Atom>& atoms, std::size_t i, Subst& s, const std::function<void(Subst&)>& k) {
        if (i == atoms.size()) {
            k(s);
            return;
        }
        auto it = possible_.find(atoms[i].predicate);
        if (it == possible_.end()) return;
        const std::vector<Atom> candidates = it->second;
        for (const auto& g : candidates) {
            Subst next = s;
            if (unify(atoms[i], g, next)) join(atoms, i + 1, next, k);
        }
    }

    struct AggregateView {
        std::int64_t certain = 0;
        std::vector<std::vector<std::vector<std::string>>> undecided;
    };

    AggregateView evaluate(const Aggregate& agg, const Subst& s) {
        std::map<std::vector<std::string>, std::set<std::vector<std::string>>> elements;
        std::set<std::vector<std::string>> certain;
        Subst start = s;
        start.erase(agg.bound_var);
        for (const auto& v : agg.local_vars) start.erase(v);
        // conjunction-only variables are existential: drop any outer values
        std::vector<std::string> conj_vars;
        for (const auto& c : agg.conjunction) collect_variables(c, conj_vars);
        for (const auto& v : conj_vars) {
            if (!outer_vars_.count(v)) start.erase(v);
        }
        join(agg.conjunction, 0, start, [&](Subst& m) {
            std::vector<std::string> key;
            for (const auto& v : agg.local_vars) key.push_back(to_string(m.at(v)));
            std::vector<std::string> conj;
            bool all_facts = true;
            for (const auto& c : agg.conjunction) {
                std::string t = to_string(substitute(c, m));
                if (facts_.count(t)) continue;
                all_facts = false;
                conj.push_back(t);
            }
            if (all_facts) certain.insert(key);
            std::sort(conj.begin(), conj.end());
            conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
            elements[key].insert(conj);
        });
        AggregateView view;
        view.certain = static_cast<std::int64_t>(certain.size());
        for (auto& [key, alts] : elements) {
            if (certain.count(key)) continue;
            view.undecided.emplace_back(alts.begin(), alts.end());
        }
        return view;
    }

    void instantiate(const Rule& r) {
        std::vector<Atom> positives;
        std::vector<const Aggregate*> aggregates;
        std::vector<const Atom*> negatives;
        for (const auto& l : r.body) {
            if (l.is_aggregate()) {
                aggregates.push_back(&l.aggregate());
            } else if (l.negated) {
                negatives.push_back(&l.atom());
            } else {
                positives.push_back(l.atom());
            }
        }
        // variables visible outside each aggregate's conjunction
        outer_vars_.clear();
        for (const auto& h : r.head) {
            std::vector<std::string> v;
            collect_variables(h, v);
            outer_vars_.insert(v.begin(), v.end());
        }
        for (const auto& l : r.body) {
            std::vector<std::string> v;
            if (l.is_aggregate()) {
                outer_vars_.insert(l.aggregate().bound_var);
            } else {
                collect_variables(l.atom(), v);
            }
            outer_vars_.insert(v.begin(), v.end());
        }

        Subst s;
        join(positives, 0, s, [&](Subst& m) {
            PlainRule base;
            for (const auto& a : positives) base.pos.push_back(to_string(substitute(a, m)));
            with_aggregates(r, aggregates, negatives, 0, m, base);
        });
    }

    void with_aggregates(const Rule& r, const std::vector<const Aggregate*>& aggs,
                         const std::vector<const Atom*>& negatives, std::size_t i, Subst& s, PlainRule& partial) {
        if (i == aggs.size()) {
            finish_instance(r, negatives, s, partial);
            return;
        }
        const Aggregate& agg = *aggs[i];
        AggregateView view = evaluate(agg, s);
        const std::int64_t lo = view.certain;
        const std::int64_t hi = lo + static_cast<std::int64_t>(view.undecided.size());
        auto proceed = [&](std::int64_t n, Subst& m) {
            PlainRule next = partial;
            if (!view.undecided.empty()) next.aggregates.push_back(PlainAggregate{n - lo, view.undecided});
            with_aggregates(r, aggs, negatives, i + 1, m, next);
        };
        auto bound = s.find(agg.bound_var);
        if (bound != s.end()) {
            if (bound->second.kind != Term::Kind::Number) return;
            std::int64_t n = std::stoll(bound->second.name);
            if (n >= lo && n <= hi) proceed(n, s);
            return;
        }
        for (std::int64_t n = lo; n <= hi; ++n) {
            Subst m = s;
            m.emplace(agg.bound_var, Term::number(n));
            proceed(n, m);
        }
    }

    void finish_instance(const Rule& r, const std::vector<const Atom*>& negatives, const Subst& s, PlainRule rule) {
        for (const Atom* n : negatives) {
            std::string t = to_string(substitute(*n, s));
            if (facts_.count(t)) return;
            if (possible_text_.count(t)) rule.neg.push_back(t);
        }
        std::vector<Atom> heads;
        for (const auto& h : r.head) {
            Atom g = substitute(h, s);
            if (!head_within(g, k_)) return;
            rule.head.push_back(to_string(g));
            heads.push_back(std::move(g));
        }
        rule = canonical(std::move(rule));
        if (!rule_set_.insert(rule).second) return;
        for (const auto& h : heads) add_possible(h);
        rules_.push_back(std::move(rule));
    }

    void close_facts() {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& r : rules_) {
                if (r.head.size() != 1 || !r.neg.empty() || !r.aggregates.empty()) continue;
                if (facts_.count(r.head.front())) continue;
                if (!std::all_of(r.pos.begin(), r.pos.end(), [&](const std::string& a) { return facts_.count(a) > 0; }))
                    continue;
                facts_.insert(r.head.front());
                changed = true;
            }
        }
    }

    const Program& program_;
    unsigned k_;
    std::map<std::string, std::vector<Atom>> possible_;
    std::set<std::string> possible_text_;
    std::size_t possible_count_ = 0;
    std::set<std::string> facts_;
    std::vector<PlainRule> rules_;
    std::set<PlainRule> rule_set_;
    std::set<std::string> outer_vars_;
};

} // namespace

std::size_t universe_size(const Program& p, unsigned k, std::size_t cap) {
    std::map<std::string, Term> constants;
    std::map<std::string, std::size_t> functions;
    gather_symbols(p, constants, functions);
    auto capped_pow = [&](std::size_t base, std::size_t exp) {
        std::size_t out = 1;
        for (std::size_t i = 0; i < exp; ++i) {
            if (base != 0 && out > cap / base) throw OracleTooLarge("term universe exceeds the oracle cap");
            out *= base;
        }
        return out;
    };
    std::size_t size = constants.size();
    for (unsigned level = 1; level <= k; ++level) {
        std::size_t next = constants.size();
        for (const auto& [_, arity] : functions) {
            next += capped_pow(size, arity);
            if (next > cap) throw OracleTooLarge("term universe exceeds the oracle cap");
        }
        if (next == size) break;
        size = next;
    }
    if (size > cap) throw OracleTooLarge("term universe exceeds the oracle cap");
    return size;
}

std::vector<Term> term_universe(const Program& p, unsigned k, std::size_t cap) {
    universe_size(p, k, cap);
    std::map<std::string, Term> constants;
    std::map<std::string, std::size_t> functions;
    gather_symbols(p, constants, functions);
    std::vector<Term> terms;
    for (const auto& entry : constants) terms.push_back(entry.second);
    std::size_t previous_end = 0;  // terms before this index were already combined
    for (unsigned level = 1; level <= k; ++level) {
        const std::vector<Term> pool = terms;
        std::vector<Term> fresh;
        for (const auto& [name, arity] : functions) {
            // all argument tuples that use at least one term of the last level
            std::vector<std::size_t> idx(arity, 0);
            if (pool.empty() && arity > 0) continue;
            while (true) {
                bool uses_new = arity == 0 ? level == 1 : false;
                for (auto i : idx) uses_new = uses_new || i >= previous_end;
                if (uses_new) {
                    std::vector<Term> args;
                    for (auto i : idx) args.push_back(pool[i]);
                    fresh.push_back(Term::function(name, std::move(args)));
                }
                std::size_t pos = 0;
                while (pos < arity && ++idx[pos] == pool.size()) idx[pos++] = 0;
                if (pos == arity) break;
            }
        }
        if (fresh.empty()) break;
        previous_end = pool.size();
        terms.insert(terms.end(), fresh.begin(), fresh.end());
    }
    return terms;
}

PlainProgram naive_ground(const Program& p, unsigned k) {
    return Naive(p, k).run();
}

std::string predicate_of(const std::string& atom) {
    return atom.substr(0, atom.find('('));
}

std::set<Interpretation> project(const std::set<Interpretation>& sets, const std::set<std::string>& hidden) {
    std::set<Interpretation> out;
    for (const auto& i : sets) {
        Interpretation kept;
        for (const auto& a : i)
            if (!hidden.count(predicate_of(a))) kept.insert(a);
        out.insert(std::move(kept));
    }
    return out;
}

} // namespace fground
