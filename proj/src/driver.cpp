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
#include "fground/driver.hpp"

#include <ostream>

#include "fground/depgraph.hpp"
#include "fground/grounder.hpp"
#include "fground/oracle.hpp"
#include "fground/parser.hpp"
#include "fground/reorderer.hpp"
#include "fground/rewriter.hpp"

namespace fground {

namespace {

void print_plain(const PlainProgram& p, std::ostream& out) {
    for (const auto& f : p.facts) out << f << ".\n";
    for (const auto& r : p.rules) out << to_string(r) << "\n";
}

void print_answer_sets(const std::set<Interpretation>& sets, std::ostream& out) {
    for (const auto& s : sets) {
        out << "{";
        bool first = true;
        for (const auto& a : s) {
            out << (first ? "" : ", ") << a;
            first = false;
        }
        out << "}\n";
    }
}

void print_stats(const TermStore& store, const GroundStats& g, std::ostream& err) {
    for (std::uint32_t f = 0; f < store.function_count(); ++f) {
        const auto& table = store.table(FunctionSymbolId{f});
        err << "% table " << table.name() << "/" << table.arity() << ": " << table.size() << "\n";
    }
    const auto& s = store.stats();
    err << "% invented " << s.invented << ", committed " << s.committed << ", rolled back " << s.rolled_back
        << ", nesting pruned " << s.nesting_pruned << "\n";
    err << "% rule matches " << g.rule_matches << ", instantiations " << g.instantiations << "\n";
}

int execute(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    const Program program = parse_program(text);
    if (cfg.mode == Mode::Parse) {
        out << print_program(program);
        return 0;
    }
    if (cfg.oracle) {
        if (cfg.mode != Mode::Ground && cfg.mode != Mode::AnswerSets)
            throw UsageError("--oracle applies to the ground and answersets modes");
        if (!cfg.max_nesting) throw UsageError("--oracle needs --maxNesting");
        PlainProgram gp = naive_ground(program, *cfg.max_nesting);
        if (cfg.mode == Mode::Ground) {
            print_plain(gp, out);
        } else {
            print_answer_sets(answer_sets(gp), out);
        }
        return 0;
    }

    TermStore store;
    const FlatProgram flat = rewrite_program(program, store, RewriteOptions{cfg.max_nesting});
    switch (cfg.mode) {
    case Mode::Rewrite:
        out << print_flat_program(flat, store);
        return 0;
    case Mode::Depgraph:
        out << to_dot(build_dependency_graph(flat));
        return 0;
    default:
        break;
    }
    const FlatProgram ordered = reorder_program(flat);
    if (cfg.mode == Mode::Reorder) {
        out << print_flat_program(ordered, store);
        return 0;
    }
    if (!cfg.max_nesting)
        err << "warning: no --maxNesting bound given; termination is the responsibility of the programmer\n";
    GroundProgram gp = ground_program(ordered, store, GroundOptions{cfg.max_nesting});
    if (cfg.mode == Mode::Ground) {
        out << print_ground_program(gp, cfg.show_ids);
    } else {
        std::set<std::string> hidden(flat.aux_predicates.begin(), flat.aux_predicates.end());
        print_answer_sets(project(answer_sets(readback(gp)), hidden), out);
    }
    if (cfg.stats) print_stats(store, gp.stats, err);
    return 0;
}

} // namespace

std::optional<Mode> parse_mode(const std::string& name) {
    if (name == "parse") return Mode::Parse;
    if (name == "rewrite") return Mode::Rewrite;
    if (name == "reorder") return Mode::Reorder;
    if (name == "depgraph") return Mode::Depgraph;
    if (name == "ground") return Mode::Ground;
    if (name == "answersets") return Mode::AnswerSets;
    return std::nullopt;
}

int run(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    try {
        return execute(cfg, text, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ProgramError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const OracleTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fground
