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
#include "fground/grounder.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fground/depgraph.hpp"

namespace fground {

Binding::Binding(std::vector<std::string> variables)
    : names_(std::move(variables)), values_(names_.size()) {}

std::optional<std::size_t> Binding::index_of(const std::string& variable) const {
    auto it = std::find(names_.begin(), names_.end(), variable);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::optional<TermId> Binding::get(const std::string& variable) const {
    auto i = index_of(variable);
    if (!i) throw UsageError("unknown variable " + variable);
    return values_[*i];
}

void Binding::bind(std::size_t var, TermId value) {
    if (values_[var]) throw UsageError("variable " + names_[var] + " is already bound");
    values_[var] = value;
    trail_.push_back(var);
}

void Binding::bind(const std::string& variable, TermId value) {
    auto i = index_of(variable);
    if (!i) throw UsageError("unknown variable " + variable);
    bind(*i, value);
}

void Binding::undo(std::size_t mark) {
    if (mark > trail_.size()) throw UsageError("binding mark used out of LIFO order");
    while (trail_.size() > mark) {
        values_[trail_.back()].reset();
        trail_.pop_back();
    }
}

namespace {

struct Arg {
    bool var = false;
    std::uint32_t index = 0;  // variable index
    TermId constant;
};

struct CAtom {
    std::uint32_t pred = 0;
    std::vector<Arg> args;
};

struct CFunction {
    FunctionSymbolId symbol;
    Arg id;
    std::vector<Arg> args;
    bool may_invent = false;
    bool restricting = false;
};

struct CAggregate {
    std::uint32_t aux = 0;
    std::vector<Arg> pattern;
    Arg result;
};

enum class ItemKind { Positive, Negative, Function, Aggregate };

struct CItem {
    ItemKind kind;
    std::size_t index;
};

struct CRule {
    std::vector<CAtom> head;
    std::vector<CAtom> atoms;
    std::vector<CFunction> functions;
    std::vector<CAggregate> aggregates;
    std::vector<CItem> body;
    std::vector<std::string> variables;
    std::vector<std::uint32_t> body_preds;
    std::size_t component = 0;
};

std::optional<TermId> value(const Arg& a, const Binding& b) {
    if (!a.var) return a.constant;
    return b.get(a.index);
}

MatchOutcome match_compiled(const CFunction& fa, Binding& b, TermStore& store, std::optional<unsigned> max_nesting) {
    const std::size_t mark = b.mark();
    if (auto id = value(fa.id, b)) {
        // id bound: a pure check against the reverse tuple, never a creation
        if (*id == kAbsent || !store.contains(*id)) return MatchOutcome::Failed;
        auto parts = store.decompose(*id);
        if (!parts || !(parts->first == fa.symbol)) return MatchOutcome::Failed;
        const Tuple& tuple = *parts->second;
        for (std::size_t i = 0; i < fa.args.size(); ++i) {
            auto v = value(fa.args[i], b);
            if (!v) {
                b.bind(fa.args[i].index, tuple[i]);
            } else if (*v != tuple[i]) {
                b.undo(mark);
                return MatchOutcome::Failed;
            }
        }
        return MatchOutcome::Matched;
    }

    Tuple key;
    key.reserve(fa.args.size());
    bool absent = false;
    for (const auto& a : fa.args) {
        auto v = value(a, b);
        if (!v) throw UsageError("function atom reached with neither its id nor its arguments bound");
        absent = absent || *v == kAbsent;
        key.push_back(*v);
    }
    if (!absent) {
        if (auto hit = store.lookup_function(fa.symbol, key)) {
            b.bind(fa.id.index, *hit);
            return MatchOutcome::Matched;
        }
        if (fa.may_invent) {
            auto out = store.insert_function(fa.symbol, key, max_nesting, true);
            if (!out) {
                store.note_nesting_pruned();
                return MatchOutcome::Failed;
            }
            b.bind(fa.id.index, out.id);
            return MatchOutcome::MatchedNew;
        }
    }
    if (fa.restricting || fa.may_invent) return MatchOutcome::Failed;
    b.bind(fa.id.index, kAbsent);
    return MatchOutcome::Absent;
}

struct PredicateTable {
    std::vector<Tuple> tuples;
    std::unordered_map<Tuple, std::size_t, TupleHash> index;
    std::vector<char> fact;

    bool insert(const Tuple& t) {
        auto [it, fresh] = index.emplace(t, tuples.size());
        if (fresh) {
            tuples.push_back(t);
            fact.push_back(0);
        }
        return fresh;
    }
    const std::size_t* find(const Tuple& t) const {
        auto it = index.find(t);
        return it == index.end() ? nullptr : &it->second;
    }
    bool is_fact(const Tuple& t) const {
        auto i = find(t);
        return i && fact[*i];
    }
};

void canonicalize(GroundRule& g) {
    auto tidy = [](std::vector<GroundAtom>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(g.head);
    tidy(g.body_pos);
    tidy(g.body_neg);
    for (auto& a : g.aggregates) tidy(a.elements);
    std::sort(g.aggregates.begin(), g.aggregates.end());
    g.aggregates.erase(std::unique(g.aggregates.begin(), g.aggregates.end()), g.aggregates.end());
}

std::optional<std::int64_t> number_value(const TermStore& store, TermId id) {
    if (id == kAbsent) return std::nullopt;
    Term t = store.to_term(id);
    if (t.kind != Term::Kind::Number) return std::nullopt;
    return std::stoll(t.name);
}

class Grounder {
public:
    Grounder(const FlatProgram& p, TermStore& store, const GroundOptions& opts)
        : program_(p), store_(store), opts_(opts) {}

    GroundProgram run() {
        register_predicates();
        for (const auto& f : program_.facts) add_fact(predicate(f.predicate), f.args);

        auto order = evaluation_order(build_dependency_graph(program_));
        std::map<std::string, std::size_t> comp_of;
        for (std::size_t c = 0; c < order.size(); ++c)
            for (const auto& name : order[c]) comp_of[name] = c;

        std::vector<std::vector<CRule>> by_component(order.size() + 1);
        for (const auto& r : program_.rules) {
            CRule cr = compile(r);
            std::size_t c = order.size();  // constraints run last
            for (const auto& h : r.head) c = std::min(c, comp_of.at(h.predicate));
            cr.component = c;
            by_component[c].push_back(std::move(cr));
        }

        for (std::size_t c = 0; c < by_component.size(); ++c) {
            const std::size_t first = raw_.size();
            fixpoint(by_component[c]);
            close_facts(first);
        }
        return finish();
    }

private:
    void register_predicates() {
        auto reg = [&](const std::string& name) {
            if (!index_.count(name)) {
                index_.emplace(name, static_cast<std::uint32_t>(names_.size()));
                names_.push_back(name);
                tables_.emplace_back();
            }
        };
        for (const auto& f : program_.facts) reg(f.predicate);
        for (const auto& r : program_.rules) {
            for (const auto& h : r.head) reg(h.predicate);
            for (const auto& item : r.body) {
                const Literal* l = as_literal(item);
                if (!l) continue;
                if (l->is_aggregate()) {
                    for (const auto& c : l->aggregate().conjunction) reg(c.predicate);
                } else {
                    reg(l->atom().predicate);
                }
            }
        }
    }

    std::uint32_t predicate(const std::string& name) const { return index_.at(name); }

    void add_fact(std::uint32_t pred, const Tuple& args) {
        auto& t = tables_[pred];
        t.insert(args);
        std::size_t i = *t.find(args);
        if (!t.fact[i]) {
            t.fact[i] = 1;
            facts_.push_back(GroundAtom{pred, args});
        }
    }

    Arg compile_term(const Term& t, std::vector<std::string>& vars) {
        Arg a;
        switch (t.kind) {
        case Term::Kind::Variable: {
            auto it = std::find(vars.begin(), vars.end(), t.name);
            a.var = true;
            a.index = static_cast<std::uint32_t>(it - vars.begin());
            if (it == vars.end()) vars.push_back(t.name);
            return a;
        }
        case Term::Kind::IdRef: {
            auto it = program_.id_labels.find(t.name);
            if (it == program_.id_labels.end()) throw RewriteError("unknown term id " + t.name);
            a.constant = it->second;
            return a;
        }
        case Term::Kind::Function:
            throw UsageError("grounder needs flattened rules");
        default:
            a.constant = *store_.intern(t);
            return a;
        }
    }

    CAtom compile_atom(const Atom& atom, std::vector<std::string>& vars) {
        CAtom c{predicate(atom.predicate), {}};
        for (const auto& t : atom.args) c.args.push_back(compile_term(t, vars));
        return c;
    }

    CRule compile(const FlatRule& r) {
        CRule cr;
        auto& vars = cr.variables;
        for (const auto& item : r.body) {
            if (const FunctionAtom* fa = as_function(item)) {
                CFunction cf;
                cf.symbol = store_.declare_function(fa->symbol, fa->args.size());
                cf.id = compile_term(fa->id, vars);
                for (const auto& t : fa->args) cf.args.push_back(compile_term(t, vars));
                cf.may_invent = fa->may_invent();
                cf.restricting = fa->in_positive_body;
                cr.body.push_back({ItemKind::Function, cr.functions.size()});
                cr.functions.push_back(std::move(cf));
                continue;
            }
            const Literal& l = std::get<Literal>(item);
            if (l.is_aggregate()) {
                const Aggregate& agg = l.aggregate();
                if (agg.conjunction.size() != 1) throw UsageError("grounder needs aggregates rewritten first");
                CAggregate ca;
                CAtom conj = compile_atom(agg.conjunction.front(), vars);
                ca.aux = conj.pred;
                ca.pattern = std::move(conj.args);
                ca.result = compile_term(Term::variable(agg.bound_var), vars);
                cr.body_preds.push_back(ca.aux);
                cr.body.push_back({ItemKind::Aggregate, cr.aggregates.size()});
                cr.aggregates.push_back(std::move(ca));
                continue;
            }
            CAtom ca = compile_atom(l.atom(), vars);
            if (!l.negated) cr.body_preds.push_back(ca.pred);
            cr.body.push_back({l.negated ? ItemKind::Negative : ItemKind::Positive, cr.atoms.size()});
            cr.atoms.push_back(std::move(ca));
        }
        for (const auto& h : r.head) cr.head.push_back(compile_atom(h, vars));
        std::sort(cr.body_preds.begin(), cr.body_preds.end());
        cr.body_preds.erase(std::unique(cr.body_preds.begin(), cr.body_preds.end()), cr.body_preds.end());
        return cr;
    }

    void fixpoint(const std::vector<CRule>& rules) {
        std::vector<std::vector<std::size_t>> seen_sizes(rules.size());
        std::vector<bool> matched(rules.size(), false);
        for (bool progress = true; progress;) {
            progress = false;
            for (std::size_t k = 0; k < rules.size(); ++k) {
                std::vector<std::size_t> sizes;
                for (auto p : rules[k].body_preds) sizes.push_back(tables_[p].tuples.size());
                if (matched[k] && sizes == seen_sizes[k]) continue;
                seen_sizes[k] = std::move(sizes);
                matched[k] = true;
                match_rule(rules[k]);
                progress = true;
            }
        }
    }

    struct ChoicePoint {
        std::size_t pos;
        std::size_t binding_mark;
        TrailMark store_mark;
        std::size_t cursor = 0;
        std::vector<TermId> candidates;  // plain function matching
        std::int64_t next_count = 0;
        std::int64_t last_count = -1;
    };

    // Slots filled while matching and read back at emission.
    struct Residuals {
        std::vector<std::optional<GroundAtom>> negative;
        std::vector<std::optional<GroundAggregate>> aggregate;
        std::vector<std::vector<GroundAtom>> undecided;
        std::vector<std::int64_t> certain;
    };

    bool unify(const CAtom& atom, const Tuple& tuple, Binding& b) {
        for (std::size_t i = 0; i < atom.args.size(); ++i) {
            const Arg& a = atom.args[i];
            auto v = value(a, b);
            if (!v) {
                b.bind(a.index, tuple[i]);
            } else if (*v != tuple[i]) {
                return false;
            }
        }
        return true;
    }

    GroundAtom resolve(const CAtom& atom, const Binding& b) const {
        GroundAtom g{atom.pred, {}};
        g.args.reserve(atom.args.size());
        for (const auto& a : atom.args) g.args.push_back(*value(a, b));
        return g;
    }

    // Candidate ids of a function atom by scanning its table.
    std::vector<TermId> scan_function(const CFunction& fa, const Binding& b) const {
        std::vector<TermId> out;
        auto id = value(fa.id, b);
        const auto& table = store_.table(fa.symbol);
        for (TermId candidate : table.ids()) {
            if (id && *id != candidate) continue;
            const Tuple& args = *table.args_of(candidate);
            bool ok = true;
            for (std::size_t i = 0; i < fa.args.size() && ok; ++i) {
                auto v = value(fa.args[i], b);
                ok = !v || *v == args[i];
            }
            if (ok) out.push_back(candidate);
        }
        return out;
    }

    // Binds the free positions of `fa` from the entry `id`; false when a
    // repeated variable meets two different values.
    bool apply_candidate(const CFunction& fa, TermId id, Binding& b) const {
        if (!value(fa.id, b)) b.bind(fa.id.index, id);
        const Tuple& args = *store_.table(fa.symbol).args_of(id);
        for (std::size_t i = 0; i < fa.args.size(); ++i) {
            auto v = value(fa.args[i], b);
            if (!v) {
                b.bind(fa.args[i].index, args[i]);
            } else if (*v != args[i]) {
                return false;
            }
        }
        return true;
    }

    bool advance(const CRule& r, ChoicePoint& cp, Binding& b, Residuals& res) {
        const CItem& item = r.body[cp.pos];
        switch (item.kind) {
        case ItemKind::Positive: {
            const CAtom& atom = r.atoms[item.index];
            const auto& tuples = tables_[atom.pred].tuples;
            while (cp.cursor < tuples.size()) {
                const Tuple t = tuples[cp.cursor++];
                if (unify(atom, t, b)) return true;
                b.undo(cp.binding_mark);
            }
            return false;
        }
        case ItemKind::Function:
            while (cp.cursor < cp.candidates.size()) {
                if (apply_candidate(r.functions[item.index], cp.candidates[cp.cursor++], b)) return true;
                b.undo(cp.binding_mark);
            }
            return false;
        case ItemKind::Aggregate: {
            if (cp.next_count > cp.last_count) return false;
            std::int64_t n = cp.next_count++;
            b.bind(r.aggregates[item.index].result.index, store_.intern_number(n));
            set_aggregate_residual(cp.pos, n, res);
            return true;
        }
        case ItemKind::Negative:
            break;
        }
        return false;
    }

    void set_aggregate_residual(std::size_t pos, std::int64_t n, Residuals& res) const {
        if (res.undecided[pos].empty()) {
            res.aggregate[pos].reset();
        } else {
            res.aggregate[pos] = GroundAggregate{n - res.certain[pos], res.undecided[pos]};
        }
    }

    bool eval_negative(const CAtom& atom, const Binding& b, std::optional<GroundAtom>& residual) const {
        residual.reset();
        GroundAtom g = resolve(atom, b);
        if (std::find(g.args.begin(), g.args.end(), kAbsent) != g.args.end()) return true;
        const auto& table = tables_[g.predicate];
        const std::size_t* i = table.find(g.args);
        if (!i) return true;
        if (table.fact[*i]) return false;
        residual = std::move(g);
        return true;
    }

    // Collects the elements of an aggregate under the current binding.
    void collect_elements(const CAggregate& ag, const Binding& b, std::size_t pos, Residuals& res) const {
        res.undecided[pos].clear();
        res.certain[pos] = 0;
        const auto& table = tables_[ag.aux];
        for (std::size_t i = 0; i < table.tuples.size(); ++i) {
            const Tuple& t = table.tuples[i];
            bool ok = true;
            for (std::size_t k = 0; k < ag.pattern.size() && ok; ++k) {
                auto v = value(ag.pattern[k], b);
                ok = !v || *v == t[k];
            }
            if (!ok) continue;
            if (table.fact[i]) {
                ++res.certain[pos];
            } else {
                res.undecided[pos].push_back(GroundAtom{ag.aux, t});
            }
        }
    }

    void match_rule(const CRule& r) {
        ++stats_.rule_matches;
        Binding b(r.variables);
        // aggregate locals must stay unbound while counting
        const std::size_t n = r.body.size();
        Residuals res{std::vector<std::optional<GroundAtom>>(n), std::vector<std::optional<GroundAggregate>>(n),
                      std::vector<std::vector<GroundAtom>>(n), std::vector<std::int64_t>(n, 0)};
        std::vector<ChoicePoint> stack;
        const TrailMark rule_mark = store_.mark();
        std::size_t pos = 0;
        bool forward = true;

        while (true) {
            if (!forward) {
                if (stack.empty()) break;
                ChoicePoint& cp = stack.back();
                b.undo(cp.binding_mark);
                store_.rollback(cp.store_mark);
                if (advance(r, cp, b, res)) {
                    pos = cp.pos + 1;
                    forward = true;
                } else {
                    stack.pop_back();
                }
                continue;
            }
            if (pos == n) {
                emit(r, b, res, rule_mark);
                forward = false;
                continue;
            }
            const CItem& item = r.body[pos];
            switch (item.kind) {
            case ItemKind::Positive:
            case ItemKind::Aggregate:
                if (item.kind == ItemKind::Aggregate) {
                    const CAggregate& ag = r.aggregates[item.index];
                    collect_elements(ag, b, pos, res);
                    std::int64_t lo = res.certain[pos];
                    std::int64_t hi = lo + static_cast<std::int64_t>(res.undecided[pos].size());
                    if (auto bound = value(ag.result, b)) {
                        auto v = number_value(store_, *bound);
                        forward = v && *v >= lo && *v <= hi;
                        if (forward) set_aggregate_residual(pos, *v, res);
                        break;
                    }
                    stack.push_back(ChoicePoint{pos, b.mark(), store_.mark(), 0, {}, 0, -1});
                    stack.back().next_count = lo;
                    stack.back().last_count = hi;
                } else {
                    stack.push_back(ChoicePoint{pos, b.mark(), store_.mark(), 0, {}, 0, -1});
                }
                forward = advance(r, stack.back(), b, res);
                if (!forward) stack.pop_back();
                break;
            case ItemKind::Negative:
                forward = eval_negative(r.atoms[item.index], b, res.negative[pos]);
                break;
            case ItemKind::Function: {
                const CFunction& fa = r.functions[item.index];
                if (!opts_.backjumping) {
                    auto candidates = scan_function(fa, b);
                    if (!candidates.empty()) {
                        stack.push_back(ChoicePoint{pos, b.mark(), store_.mark(), 0, {}, 0, -1});
                        stack.back().candidates = std::move(candidates);
                        forward = advance(r, stack.back(), b, res);
                        break;
                    }
                }
                // deterministic: on backtracking control skips straight to
                // the nearest earlier choice point
                forward = match_compiled(fa, b, store_, opts_.max_nesting) != MatchOutcome::Failed;
                break;
            }
            }
            if (forward) ++pos;
        }
        b.undo(0);
        store_.rollback(rule_mark);
    }

    void emit(const CRule& r, const Binding& b, const Residuals& res, TrailMark rule_mark) {
        ++stats_.instantiations;
        GroundRule g;
        for (const auto& h : r.head) g.head.push_back(resolve(h, b));
        for (std::size_t pos = 0; pos < r.body.size(); ++pos) {
            const CItem& item = r.body[pos];
            if (item.kind == ItemKind::Positive) {
                g.body_pos.push_back(resolve(r.atoms[item.index], b));
            } else if (item.kind == ItemKind::Negative && res.negative[pos]) {
                g.body_neg.push_back(*res.negative[pos]);
            } else if (item.kind == ItemKind::Aggregate && res.aggregate[pos]) {
                g.aggregates.push_back(*res.aggregate[pos]);
            }
        }
        store_.commit(rule_mark);
        canonicalize(g);
        if (!seen_.insert(g).second) return;
        for (const auto& h : g.head) tables_[h.predicate].insert(h.args);
        raw_.push_back(std::move(g));
    }

    void close_facts(std::size_t first) {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = first; i < raw_.size(); ++i) {
                const GroundRule& g = raw_[i];
                if (g.head.size() != 1 || !g.body_neg.empty() || !g.aggregates.empty()) continue;
                const GroundAtom& h = g.head.front();
                if (tables_[h.predicate].is_fact(h.args)) continue;
                bool all = std::all_of(g.body_pos.begin(), g.body_pos.end(),
                                       [&](const GroundAtom& a) { return tables_[a.predicate].is_fact(a.args); });
                if (!all) continue;
                add_fact(h.predicate, h.args);
                changed = true;
            }
        }
    }

    GroundProgram finish() {
        GroundProgram gp;
        gp.predicates = names_;
        gp.facts = facts_;
        gp.store = &store_;
        gp.stats = stats_;
        std::set<GroundRule> kept;
        for (GroundRule g : raw_) {
            auto& pos = g.body_pos;
            pos.erase(std::remove_if(pos.begin(), pos.end(),
                                     [&](const GroundAtom& a) { return tables_[a.predicate].is_fact(a.args); }),
                      pos.end());
            if (g.head.size() == 1 && pos.empty() && g.body_neg.empty() && g.aggregates.empty()) continue;
            if (kept.insert(g).second) gp.rules.push_back(std::move(g));
        }
        return gp;
    }

    const FlatProgram& program_;
    TermStore& store_;
    GroundOptions opts_;
    std::map<std::string, std::uint32_t> index_;
    std::vector<std::string> names_;
    std::vector<PredicateTable> tables_;
    std::vector<GroundAtom> facts_;
    std::vector<GroundRule> raw_;
    std::set<GroundRule> seen_;
    GroundStats stats_;
};

} // namespace

MatchOutcome match_function_atom(const FunctionAtom& fa, Binding& b, TermStore& store,
                                 std::optional<unsigned> max_nesting) {
    auto arg = [&](const Term& t) {
        Arg a;
        if (t.is_variable()) {
            auto i = b.index_of(t.name);
            if (!i) throw UsageError("variable " + t.name + " missing from binding");
            a.var = true;
            a.index = static_cast<std::uint32_t>(*i);
        } else {
            a.constant = *store.intern(t);
        }
        return a;
    };
    CFunction cf;
    cf.symbol = store.declare_function(fa.symbol, fa.args.size());
    cf.id = arg(fa.id);
    for (const auto& t : fa.args) cf.args.push_back(arg(t));
    cf.may_invent = fa.may_invent();
    cf.restricting = fa.in_positive_body;
    return match_compiled(cf, b, store, max_nesting);
}

GroundProgram ground_program(const FlatProgram& p, TermStore& store, const GroundOptions& opts) {
    return Grounder(p, store, opts).run();
}

std::string GroundProgram::atom_text(const GroundAtom& a, bool show_ids) const {
    std::string s = predicate_text(predicates[a.predicate]);
    if (a.args.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i)
        s += (i ? "," : "") + (show_ids ? store->label(a.args[i]) : store->text(a.args[i]));
    return s + ")";
}

std::string GroundProgram::rule_text(const GroundRule& r, bool show_ids) const {
    std::string s;
    for (std::size_t i = 0; i < r.head.size(); ++i) s += (i ? " v " : "") + atom_text(r.head[i], show_ids);
    std::vector<std::string> body;
    for (const auto& a : r.body_pos) body.push_back(atom_text(a, show_ids));
    for (const auto& a : r.body_neg) body.push_back("not " + atom_text(a, show_ids));
    for (const auto& agg : r.aggregates) {
        std::string e = "#count{";
        for (std::size_t i = 0; i < agg.elements.size(); ++i) e += (i ? "; " : "") + atom_text(agg.elements[i], show_ids);
        body.push_back(e + "} = " + std::to_string(agg.target));
    }
    if (!body.empty() || r.head.empty()) s += r.head.empty() ? ":-" : " :-";
    for (std::size_t i = 0; i < body.size(); ++i) s += (i ? ", " : " ") + body[i];
    return s + ".";
}

PlainProgram readback(const GroundProgram& gp) {
    PlainProgram out;
    for (const auto& f : gp.facts) out.facts.push_back(gp.atom_text(f));
    for (const auto& r : gp.rules) {
        PlainRule pr;
        for (const auto& a : r.head) pr.head.push_back(gp.atom_text(a));
        for (const auto& a : r.body_pos) pr.pos.push_back(gp.atom_text(a));
        for (const auto& a : r.body_neg) pr.neg.push_back(gp.atom_text(a));
        for (const auto& agg : r.aggregates) {
            PlainAggregate pa;
            pa.target = agg.target;
            for (const auto& e : agg.elements) pa.elements.push_back({{gp.atom_text(e)}});
            pr.aggregates.push_back(std::move(pa));
        }
        out.rules.push_back(canonical(std::move(pr)));
    }
    return out;
}

std::string print_ground_program(const GroundProgram& gp, bool show_ids) {
    std::string s;
    for (const auto& f : gp.facts) s += gp.atom_text(f, show_ids) + ".\n";
    for (const auto& r : gp.rules) s += gp.rule_text(r, show_ids) + "\n";
    if (!show_ids) return s;
    s += "% function tables\n";
    const TermStore& store = *gp.store;
    for (std::uint32_t f = 0; f < store.function_count(); ++f) {
        const auto& table = store.table(FunctionSymbolId{f});
        for (TermId id : table.ids()) {
            s += table.name() + ": <";
            const Tuple& args = *table.args_of(id);
            for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + store.label(args[i]);
            s += "> -> " + store.label(id) + "\n";
        }
    }
    return s;
}

} // namespace fground
