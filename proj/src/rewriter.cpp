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
#include "fground/rewriter.hpp"

#include <algorithm>
#include <set>

namespace fground {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

void add_unique(std::vector<std::string>& v, const std::string& s) {
    if (!contains(v, s)) v.push_back(s);
}

std::string where(const SourcePos& pos) {
    return pos.line ? " (line " + std::to_string(pos.line) + ")" : std::string();
}

void collect_predicates(const Program& p, std::set<std::string>& out) {
    for (const auto& r : p.rules) {
        for (const auto& h : r.head) out.insert(h.predicate);
        for (const auto& l : r.body) {
            if (l.is_aggregate()) {
                for (const auto& c : l.aggregate().conjunction) out.insert(c.predicate);
            } else {
                out.insert(l.atom().predicate);
            }
        }
    }
}

// Variables of `r` outside aggregate `skip`: head, plain literals and the
// bound variables of other aggregates.
std::vector<std::string> outer_variables(const Rule& r, std::size_t skip) {
    std::vector<std::string> out;
    for (const auto& h : r.head) collect_variables(h, out);
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        if (i == skip) continue;
        const auto& l = r.body[i];
        if (l.is_aggregate()) {
            add_unique(out, l.aggregate().bound_var);
        } else {
            collect_variables(l.atom(), out);
        }
    }
    return out;
}

bool already_simple(const Aggregate& agg, const std::vector<std::string>& globals) {
    if (agg.conjunction.size() != 1) return false;
    const Atom& a = agg.conjunction.front();
    std::vector<std::string> seen;
    for (const auto& t : a.args) {
        if (!t.is_variable() || contains(seen, t.name)) return false;
        if (!contains(agg.local_vars, t.name) && !contains(globals, t.name)) return false;
        seen.push_back(t.name);
    }
    return true;
}

FunctionAtom function_atom_of(const Atom& a) {
    if (a.args.empty()) throw RewriteError("function predicate " + predicate_text(a.predicate) + " needs an id argument");
    FunctionAtom fa;
    fa.symbol = a.predicate.substr(1);
    fa.id = a.args.front();
    fa.args.assign(a.args.begin() + 1, a.args.end());
    return fa;
}

class Flattener {
public:
    explicit Flattener(const Rule& r) : taken_(variables_of(r)) {}

    Term flatten(const Term& t) {
        if (!t.is_function()) return t;
        std::vector<Term> args;
        args.reserve(t.args.size());
        for (const auto& a : t.args) args.push_back(flatten(a));
        for (const auto& fa : atoms_)
            if (fa.symbol == t.name && fa.args == args) return fa.id;
        FunctionAtom fa;
        fa.symbol = t.name;
        fa.id = Term::variable(fresh());
        fa.args = std::move(args);
        atoms_.push_back(fa);
        return atoms_.back().id;
    }

    Atom flatten(const Atom& a) {
        Atom out{a.predicate, {}};
        for (const auto& t : a.args) out.args.push_back(flatten(t));
        return out;
    }

    std::vector<FunctionAtom>& atoms() { return atoms_; }

private:
    std::string fresh() {
        std::string name;
        do {
            name = "FN_" + std::to_string(++counter_);
        } while (contains(taken_, name));
        return name;
    }

    std::vector<std::string> taken_;
    std::vector<FunctionAtom> atoms_;
    unsigned counter_ = 0;
};

std::vector<std::string> aggregate_globals(const Aggregate& agg) {
    std::vector<std::string> vars;
    for (const auto& c : agg.conjunction) collect_variables(c, vars);
    std::vector<std::string> globals;
    for (const auto& v : vars)
        if (!contains(agg.local_vars, v)) globals.push_back(v);
    return globals;
}

Term substitute(const Term& t, const std::map<std::string, const FunctionAtom*>& defs, std::size_t depth);

Term expand(const FunctionAtom& fa, const std::map<std::string, const FunctionAtom*>& defs, std::size_t depth) {
    if (depth > defs.size()) throw UsageError("cyclic function atoms in flat rule");
    std::vector<Term> args;
    for (const auto& a : fa.args) args.push_back(substitute(a, defs, depth + 1));
    return Term::function(fa.symbol, std::move(args));
}

Term substitute(const Term& t, const std::map<std::string, const FunctionAtom*>& defs, std::size_t depth) {
    if (t.is_variable()) {
        auto it = defs.find(t.name);
        if (it != defs.end()) return expand(*it->second, defs, depth);
    }
    return t;
}

Atom substitute(const Atom& a, const std::map<std::string, const FunctionAtom*>& defs) {
    Atom out{a.predicate, {}};
    for (const auto& t : a.args) out.args.push_back(substitute(t, defs, 0));
    return out;
}

Term resolve_labels(const Term& t, const std::map<std::string, TermId>& labels, const TermStore& store) {
    if (t.kind == Term::Kind::IdRef) {
        auto it = labels.find(t.name);
        if (it == labels.end()) throw RewriteError("unknown term id " + t.name);
        return store.to_term(it->second);
    }
    Term out = t;
    for (auto& a : out.args) a = resolve_labels(a, labels, store);
    return out;
}

} // namespace

bool is_function_predicate(const std::string& predicate) { return !predicate.empty() && predicate.front() == '#'; }

Atom FunctionAtom::as_atom() const {
    Atom a{"#" + symbol, {id}};
    a.args.insert(a.args.end(), args.begin(), args.end());
    return a;
}

Program rewrite_aggregates(const Program& p, std::vector<std::string>* aux_names) {
    std::set<std::string> used;
    collect_predicates(p, used);
    unsigned counter = 0;
    auto fresh_aux = [&] {
        std::string name;
        do {
            name = "aux" + std::to_string(++counter);
        } while (used.count(name));
        used.insert(name);
        return name;
    };

    Program out;
    for (const auto& rule : p.rules) {
        Rule r = rule;
        std::vector<Rule> aux_rules;
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            if (!r.body[i].is_aggregate()) continue;
            Aggregate& agg = r.body[i].aggregate();
            std::vector<std::string> inner;
            for (const auto& c : agg.conjunction) collect_variables(c, inner);
            for (const auto& v : agg.local_vars)
                if (!contains(inner, v))
                    throw RewriteError("aggregate variable " + v + " does not occur in its conjunction" + where(r.pos));
            if (contains(inner, agg.bound_var))
                throw RewriteError("aggregate result " + agg.bound_var + " occurs inside its own conjunction" +
                                   where(r.pos));

            auto outer = outer_variables(r, i);
            std::vector<std::string> globals;
            for (const auto& v : inner)
                if (!contains(agg.local_vars, v) && contains(outer, v)) globals.push_back(v);
            if (already_simple(agg, globals)) continue;

            Atom aux{fresh_aux(), {}};
            for (const auto& v : agg.local_vars) aux.args.push_back(Term::variable(v));
            for (const auto& v : globals) aux.args.push_back(Term::variable(v));
            Rule aux_rule;
            aux_rule.head.push_back(aux);
            for (const auto& c : agg.conjunction) aux_rule.body.push_back(Literal::positive(c));
            aux_rule.pos = r.pos;
            aux_rules.push_back(std::move(aux_rule));
            agg.conjunction = {aux};
            if (aux_names) aux_names->push_back(aux.predicate);
        }
        out.rules.push_back(std::move(r));
        for (auto& a : aux_rules) out.rules.push_back(std::move(a));
    }
    return out;
}

FlatRule flatten_rule(const Rule& r) {
    Flattener fl(r);
    FlatRule out;
    out.origin = r.pos;

    // body applications first, then the head's
    std::vector<BodyItem> body;
    std::size_t block = r.body.size();
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        const Literal& l = r.body[i];
        if (l.is_aggregate()) {
            for (const auto& c : l.aggregate().conjunction)
                if (c.has_functions()) throw UsageError("flatten_rule needs aggregates rewritten first");
            block = std::min(block, i);
            body.emplace_back(l);
            continue;
        }
        if (l.negated) block = std::min(block, i);
        if (is_function_predicate(l.atom().predicate)) {
            if (l.negated) throw RewriteError("negated function predicate" + where(r.pos));
            body.emplace_back(function_atom_of(l.atom()));
            continue;
        }
        body.emplace_back(Literal{l.negated, fl.flatten(l.atom())});
    }
    for (const auto& h : r.head) {
        if (is_function_predicate(h.predicate))
            throw RewriteError("function predicate " + predicate_text(h.predicate) + " in a rule head" + where(r.pos));
        out.head.push_back(fl.flatten(h));
    }

    out.body.reserve(body.size() + fl.atoms().size());
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i == block)
            for (auto& fa : fl.atoms()) out.body.emplace_back(fa);
        out.body.push_back(std::move(body[i]));
    }
    if (block == body.size())
        for (auto& fa : fl.atoms()) out.body.emplace_back(fa);

    classify_function_atoms(out);
    return out;
}

void classify_function_atoms(FlatRule& fr) {
    std::vector<std::string> head_vars, pos_vars, neg_vars;
    for (const auto& h : fr.head) collect_variables(h, head_vars);
    for (const auto& item : fr.body) {
        const Literal* l = as_literal(item);
        if (!l) continue;
        if (l->is_aggregate()) {
            for (const auto& c : l->aggregate().conjunction) collect_variables(c, pos_vars);
        } else {
            collect_variables(l->atom(), l->negated ? neg_vars : pos_vars);
        }
    }
    std::vector<FunctionAtom*> atoms;
    for (auto& item : fr.body)
        if (auto* fa = std::get_if<FunctionAtom>(&item)) atoms.push_back(fa);
    for (auto* fa : atoms) {
        bool var = fa->id.is_variable();
        fa->in_head = var && contains(head_vars, fa->id.name);
        fa->in_positive_body = var && contains(pos_vars, fa->id.name);
        fa->in_negative_body = var && contains(neg_vars, fa->id.name);
    }
    // an application inherits the occurrences of every application enclosing it
    for (bool changed = true; changed;) {
        changed = false;
        for (auto* inner : atoms) {
            if (!inner->id.is_variable()) continue;
            for (const auto* outer : atoms) {
                if (outer == inner) continue;
                bool nested = std::any_of(outer->args.begin(), outer->args.end(),
                                          [&](const Term& t) { return t.is_variable() && t.name == inner->id.name; });
                if (!nested) continue;
                bool h = inner->in_head || outer->in_head;
                bool p = inner->in_positive_body || outer->in_positive_body;
                bool n = inner->in_negative_body || outer->in_negative_body;
                if (h != inner->in_head || p != inner->in_positive_body || n != inner->in_negative_body) {
                    inner->in_head = h;
                    inner->in_positive_body = p;
                    inner->in_negative_body = n;
                    changed = true;
                }
            }
        }
    }
}

void check_safety(const FlatRule& fr) {
    std::vector<std::string> bound;
    auto is_bound = [&](const Term& t) { return !t.is_variable() || contains(bound, t.name); };
    for (const auto& item : fr.body)
        if (const Literal* l = as_literal(item); l && l->is_positive_atom()) collect_variables(l->atom(), bound);

    for (bool changed = true; changed;) {
        changed = false;
        auto bind = [&](const Term& t) {
            if (t.is_variable() && !contains(bound, t.name)) {
                bound.push_back(t.name);
                changed = true;
            }
        };
        for (const auto& item : fr.body) {
            if (const FunctionAtom* fa = as_function(item)) {
                bool args_bound = std::all_of(fa->args.begin(), fa->args.end(), is_bound);
                if (is_bound(fa->id))
                    for (const auto& a : fa->args) bind(a);
                if (args_bound) bind(fa->id);
            } else if (const Literal* l = as_literal(item); l->is_aggregate()) {
                auto globals = aggregate_globals(l->aggregate());
                if (std::all_of(globals.begin(), globals.end(), [&](const std::string& v) { return contains(bound, v); }))
                    bind(Term::variable(l->aggregate().bound_var));
            }
        }
    }

    std::vector<std::string> needed;
    for (const auto& h : fr.head) collect_variables(h, needed);
    for (const auto& item : fr.body) {
        if (const FunctionAtom* fa = as_function(item)) {
            collect_variables(fa->as_atom(), needed);
        } else if (const Literal* l = as_literal(item); l->is_aggregate()) {
            add_unique(needed, l->aggregate().bound_var);
            for (const auto& v : aggregate_globals(l->aggregate())) add_unique(needed, v);
        } else if (l->negated) {
            collect_variables(l->atom(), needed);
        }
    }
    for (const auto& v : needed)
        if (!contains(bound, v)) throw RewriteError("unsafe variable " + v + " in rule " + to_string(fr) + where(fr.origin));
}

InternedFact flatten_fact(const Atom& fact, TermStore& store, std::optional<unsigned> max_nesting,
                          const std::map<std::string, TermId>& id_labels) {
    if (!fact.is_ground()) throw UsageError("flatten_fact needs a ground atom");
    InternedFact out{fact.predicate, {}};
    for (const auto& t : fact.args) {
        Term g = resolve_labels(t, id_labels, store);
        auto id = store.intern(g, max_nesting);
        if (!id)
            throw NestingExceeded("fact " + to_string(fact) + " nests terms deeper than --maxNesting=" +
                                  std::to_string(*max_nesting));
        out.args.push_back(*id);
    }
    return out;
}

Rule unflatten_rule(const FlatRule& fr) {
    std::map<std::string, const FunctionAtom*> defs;
    for (const auto& item : fr.body) {
        if (const FunctionAtom* fa = as_function(item)) {
            if (!fa->id.is_variable()) throw UsageError("function atom with a non-variable id cannot be unflattened");
            defs.emplace(fa->id.name, fa);
        }
    }
    Rule r;
    r.pos = fr.origin;
    for (const auto& h : fr.head) r.head.push_back(substitute(h, defs));
    for (const auto& item : fr.body) {
        const Literal* l = as_literal(item);
        if (!l) continue;
        if (l->is_aggregate()) {
            Aggregate agg = l->aggregate();
            for (auto& c : agg.conjunction) c = substitute(c, defs);
            r.body.push_back(Literal::aggregate(std::move(agg)));
        } else {
            r.body.push_back(Literal{l->negated, substitute(l->atom(), defs)});
        }
    }
    return r;
}

FlatProgram rewrite_program(const Program& p, TermStore& store, const RewriteOptions& opts) {
    FlatProgram out;
    Program rewritten = rewrite_aggregates(p, &out.aux_predicates);
    for (const auto& r : rewritten.rules) {
        if (!r.is_fact()) continue;
        const Atom& a = r.head.front();
        if (!is_function_predicate(a.predicate)) continue;
        // table tuple from rewritten input: '#f'(@k, args...)
        FunctionAtom fa = function_atom_of(a);
        if (fa.id.kind != Term::Kind::IdRef)
            throw RewriteError("function table fact " + to_string(a) + " needs an @k id" + where(r.pos));
        Tuple args;
        for (const auto& t : fa.args) {
            auto id = store.intern(resolve_labels(t, out.id_labels, store), opts.max_nesting);
            if (!id) throw NestingExceeded("fact " + to_string(a) + " exceeds --maxNesting" + where(r.pos));
            args.push_back(*id);
        }
        auto ins = store.insert_function(fa.symbol, args, opts.max_nesting);
        if (!ins) throw NestingExceeded("fact " + to_string(a) + " exceeds --maxNesting" + where(r.pos));
        auto [it, fresh] = out.id_labels.emplace(fa.id.name, ins.id);
        if (!fresh && it->second != ins.id) throw RewriteError("id " + fa.id.name + " names two terms" + where(r.pos));
    }
    for (const auto& r : rewritten.rules) {
        if (r.is_fact()) {
            if (is_function_predicate(r.head.front().predicate)) continue;
            out.facts.push_back(flatten_fact(r.head.front(), store, opts.max_nesting, out.id_labels));
            continue;
        }
        FlatRule fr = flatten_rule(r);
        check_safety(fr);
        out.rules.push_back(std::move(fr));
    }
    return out;
}

std::string to_string(const FunctionAtom& fa) { return to_string(fa.as_atom()); }

std::string to_string(const BodyItem& item) {
    if (const FunctionAtom* fa = as_function(item)) return to_string(*fa);
    return to_string(std::get<Literal>(item));
}

std::string to_string(const FlatRule& fr) {
    std::string s;
    for (std::size_t i = 0; i < fr.head.size(); ++i) s += (i ? " v " : "") + to_string(fr.head[i]);
    if (!fr.body.empty()) {
        s += fr.head.empty() ? ":- " : " :- ";
        for (std::size_t i = 0; i < fr.body.size(); ++i) s += (i ? ", " : "") + to_string(fr.body[i]);
    }
    return s + ".";
}

std::string to_string(const InternedFact& f, const TermStore& store) {
    std::string s = predicate_text(f.predicate);
    if (f.args.empty()) return s + ".";
    s += "(";
    for (std::size_t i = 0; i < f.args.size(); ++i) s += (i ? "," : "") + store.label(f.args[i]);
    return s + ").";
}

std::string print_flat_program(const FlatProgram& p, const TermStore& store) {
    std::string s;
    for (TermId id : store.ids()) {
        auto parts = store.decompose(id);
        if (!parts) continue;
        InternedFact tuple{"#" + store.table(parts->first).name(), {id}};
        tuple.args.insert(tuple.args.end(), parts->second->begin(), parts->second->end());
        s += to_string(tuple, store) + "\n";
    }
    for (const auto& f : p.facts) s += to_string(f, store) + "\n";
    for (const auto& r : p.rules) s += to_string(r) + "\n";
    return s;
}

} // namespace fground
