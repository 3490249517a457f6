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
#include "checks.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "fground/parser.hpp"
#include "fground/reorderer.hpp"
#include "fground/rewriter.hpp"
#include "random_program.hpp"

namespace fground::testing {

namespace {

bool has_aggregate(const Program& p) {
    for (const auto& r : p.rules)
        for (const auto& l : r.body)
            if (l.is_aggregate()) return true;
    return false;
}

std::string show(const std::set<Interpretation>& sets) {
    std::ostringstream os;
    for (const auto& s : sets) {
        os << "{";
        for (const auto& a : s) os << a << " ";
        os << "}";
    }
    return os.str();
}

// Random ground term over two symbols and three constants.
Term random_ground(std::mt19937_64& rng, unsigned depth) {
    std::uniform_int_distribution<int> roll(0, 9);
    int r = roll(rng);
    if (depth > 0 && r < 4) {
        if (r < 2) return Term::function("s", {random_ground(rng, depth - 1)});
        return Term::function("f", {random_ground(rng, depth - 1), random_ground(rng, depth - 1)});
    }
    static const char* const names[] = {"a", "b", "1"};
    std::string c = names[r % 3];
    return c == "1" ? Term::number(1) : Term::symbol(c);
}

} // namespace

Failures flatten_roundtrip(std::uint64_t seed, unsigned rules) {
    Failures out;
    GenOptions opts;
    opts.functions = 3;
    opts.term_depth = 3;
    opts.aggregates = false;
    ProgramGenerator gen(seed, opts);
    for (unsigned i = 0; i < rules; ++i) {
        Rule r = gen.rule();
        try {
            FlatRule fr = flatten_rule(r);
            Rule back = unflatten_rule(fr);
            if (!(back == r)) out.push_back(to_string(r) + " came back as " + to_string(back));
        } catch (const std::exception& e) {
            out.push_back(to_string(r) + ": " + e.what());
        }
    }
    return out;
}

Failures parser_roundtrip(std::uint64_t seed, unsigned programs) {
    Failures out;
    for (unsigned i = 0; i < programs; ++i) {
        ProgramGenerator gen(seed + i);
        Program p = gen.program();
        std::string text = print_program(p);
        try {
            Program back = parse_program(text);
            if (!(back == p)) out.push_back(text);
        } catch (const std::exception& e) {
            out.push_back(text + ": " + e.what());
        }
    }
    return out;
}

Failures table_bijectivity(std::uint64_t seed, unsigned rounds) {
    Failures out;
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < rounds; ++i) {
        TermStore store;
        std::vector<std::pair<Term, TermId>> seen;
        for (int n = 0; n < 30; ++n) {
            Term t = random_ground(rng, 3);
            TermId id = *store.intern(t);
            seen.emplace_back(t, id);
        }
        for (const auto& [t, id] : seen) {
            if (!(store.to_term(id) == t)) out.push_back("readback of " + to_string(t));
            if (*store.intern(t) != id) out.push_back("second interning of " + to_string(t));
            if (store.nesting_level(id) != nesting_level(t)) out.push_back("level of " + to_string(t));
        }
        for (const auto& [a, ia] : seen)
            for (const auto& [b, ib] : seen)
                if ((a == b) != (ia == ib)) out.push_back("ids of " + to_string(a) + " and " + to_string(b));
        if (auto msg = store.check_invariants(); !msg.empty()) out.push_back(msg);
        if (out.size() > 10) break;
    }
    return out;
}

Failures trail_transactionality(std::uint64_t seed, unsigned rounds) {
    Failures out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> roll(0, 9);
    for (unsigned i = 0; i < rounds && out.size() < 10; ++i) {
        TermStore store;
        for (int n = 0; n < 5; ++n) store.intern(random_ground(rng, 2));
        // declarations are not transactional; make them up front
        store.declare_function("s", 1);
        store.declare_function("f", 2);
        // nested marks: each level either commits or rolls back
        struct Level {
            TrailMark mark;
            std::vector<std::string> before;
            bool committed_inside = false;  // restore only promised without commits
        };
        std::vector<Level> levels;
        for (int step = 0; step < 40; ++step) {
            int r = roll(rng);
            if (r < 3) {
                levels.push_back({store.mark(), store.dump(), false});
            } else if (r < 7) {
                auto ids = store.ids();
                std::uniform_int_distribution<std::size_t> any(0, ids.size() - 1);
                Tuple args{ids[any(rng)]};
                bool binary = r % 2;
                if (binary) args.push_back(ids[any(rng)]);
                store.insert_function(binary ? "f" : "s", args, 4u, true);
            } else if (!levels.empty()) {
                Level top = levels.back();
                levels.pop_back();
                if (r < 9) {
                    store.rollback(top.mark);
                    if (!top.committed_inside && store.dump() != top.before)
                        out.push_back("rollback did not restore the store");
                } else {
                    store.commit(top.mark);
                    for (auto& l : levels) l.committed_inside = true;
                }
            }
            if (auto msg = store.check_invariants(); !msg.empty()) out.push_back(msg);
        }
        while (!levels.empty()) {
            store.rollback(levels.back().mark);
            if (!levels.back().committed_inside && store.dump() != levels.back().before) out.push_back("final rollback did not restore the store");
            levels.pop_back();
        }
    }
    return out;
}

Failures placement_audit(std::uint64_t seed, unsigned programs) {
    Failures out;
    for (unsigned i = 0; i < programs; ++i) {
        Sample s = random_sample(seed + i);
        TermStore store;
        FlatProgram fp;
        try {
            fp = reorder_program(rewrite_program(s.program, store, RewriteOptions{s.k}));
        } catch (const ProgramError&) {
            continue;
        }
        for (const auto& r : fp.rules)
            if (auto msg = check_placement(r); !msg.empty()) out.push_back(to_string(r) + ": " + msg);
    }
    return out;
}

Failures invention_audit(std::uint64_t seed, unsigned programs) {
    Failures out;
    for (unsigned i = 0; i < programs; ++i) {
        Sample s = random_sample(seed + i);
        TermStore store;
        GroundProgram gp;
        try {
            gp = ground_program(reorder_program(rewrite_program(s.program, store, RewriteOptions{s.k})), store,
                                GroundOptions{s.k});
        } catch (const ProgramError&) {
            continue;
        }
        std::set<TermId> reached;
        std::function<void(TermId)> walk = [&](TermId id) {
            if (!reached.insert(id).second) return;
            if (auto parts = store.decompose(id))
                for (TermId a : *parts->second) walk(a);
        };
        auto visit = [&](const GroundAtom& a) {
            for (TermId id : a.args) walk(id);
        };
        for (const auto& f : gp.facts) visit(f);
        for (const auto& r : gp.rules)
            for (const auto& h : r.head) visit(h);
        for (std::uint32_t f = 0; f < store.function_count(); ++f) {
            for (TermId id : store.table(FunctionSymbolId{f}).ids()) {
                if (!reached.count(id)) out.push_back("unreached " + store.text(id) + " in\n" + print_program(s.program));
                if (store.nesting_level(id) > s.k) out.push_back("too deep: " + store.text(id));
            }
        }
        if (store.pending() != 0) out.push_back("tentative entries left after grounding");
    }
    return out;
}

PipelineRun run_pipeline(const Program& p, unsigned k, bool backjumping) {
    TermStore store;
    FlatProgram fp = rewrite_program(p, store, RewriteOptions{k});
    FlatProgram ordered = reorder_program(fp);
    GroundProgram gp = ground_program(ordered, store, GroundOptions{k, backjumping});
    PipelineRun run;
    run.plain = readback(gp);
    run.aux.insert(fp.aux_predicates.begin(), fp.aux_predicates.end());
    run.with_ids = print_ground_program(gp, true);
    return run;
}

Comparison compare_with_oracle(const Program& p, unsigned k) {
    try {
        universe_size(p, k, 400);
        PlainProgram reference = naive_ground(p, k);
        PipelineRun run = run_pipeline(p, k);
        if (!has_aggregate(p)) {
            std::set<std::string> fa(run.plain.facts.begin(), run.plain.facts.end());
            std::set<std::string> fb(reference.facts.begin(), reference.facts.end());
            std::set<PlainRule> ra(run.plain.rules.begin(), run.plain.rules.end());
            std::set<PlainRule> rb(reference.rules.begin(), reference.rules.end());
            if (fa != fb) return {Verdict::Disagree, "fact sets differ"};
            if (ra != rb) return {Verdict::Disagree, "rule sets differ"};
        }
        auto mine = project(answer_sets(run.plain), run.aux);
        auto theirs = answer_sets(reference);
        if (mine != theirs) return {Verdict::Disagree, "answer sets " + show(mine) + " vs " + show(theirs)};
        return {Verdict::Agree, {}};
    } catch (const OracleTooLarge& e) {
        return {Verdict::Skipped, e.what()};
    }
}

Sample random_sample(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    auto in = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
    GenOptions opts;
    opts.functions = in(1, 3);
    opts.max_fun_arity = in(1, 2);
    opts.constants = in(1, 4);
    opts.predicates = in(2, 5);
    opts.max_rules = 6;
    opts.aggregates = in(0, 1) == 1;
    return Sample{ProgramGenerator(seed, opts).program(), in(0, 3)};
}

} // namespace fground::testing
