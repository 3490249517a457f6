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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fground/parser.hpp"
#include "fground/rewriter.hpp"

using namespace fground;

namespace {

Rule one_rule(const std::string& text) {
    return parse_program(text).rules.front();
}

std::string flat(const std::string& text) {
    FlatRule fr = flatten_rule(one_rule(text));
    classify_function_atoms(fr);
    return to_string(fr);
}

const FunctionAtom& nth_function(const FlatRule& fr, std::size_t n) {
    for (const auto& item : fr.body) {
        if (const FunctionAtom* fa = as_function(item)) {
            if (n-- == 0) return *fa;
        }
    }
    throw std::out_of_range("no such function atom");
}

} // namespace

TEST_CASE("inside-to-outside flattening") {
    CHECK(flat("p(s(X)) :- a(X, f(Y,Z)).") == "p(FN_2) :- a(X,FN_1), '#f'(FN_1,Y,Z), '#s'(FN_2,X).");
    CHECK(flat("p(s(f(1,a)), 2) :- q.") == "p(FN_2,2) :- q, '#f'(FN_1,1,a), '#s'(FN_2,FN_1).");
}

TEST_CASE("identical applications share an atom") {
    CHECK(flat("p(s(X)) :- q(s(X), Y).") == "p(FN_1) :- q(FN_1,Y), '#s'(FN_1,X).");
    CHECK(flat("p(s(X)) :- q(s(Y), X).") == "p(FN_2) :- q(FN_1,X), '#s'(FN_1,Y), '#s'(FN_2,X).");
}

TEST_CASE("function atoms go before negative literals") {
    CHECK(flat("a(X) :- p(X), not ab(s(X)).") == "a(X) :- p(X), '#s'(FN_1,X), not ab(FN_1).");
}

TEST_CASE("provenance flags") {
    FlatRule fr = flatten_rule(one_rule("p(s(X)) :- q(X)."));
    classify_function_atoms(fr);
    CHECK(nth_function(fr, 0).provenance() == Provenance::HeadOnly);
    CHECK(nth_function(fr, 0).may_invent());

    fr = flatten_rule(one_rule("p(X) :- q(X, s(Y)), t(Y)."));
    classify_function_atoms(fr);
    CHECK(nth_function(fr, 0).provenance() == Provenance::BodyTouched);
    CHECK_FALSE(nth_function(fr, 0).may_invent());

    // shared head/body application never invents
    fr = flatten_rule(one_rule("p(s(X)) :- t(X), q(s(X), Y)."));
    classify_function_atoms(fr);
    CHECK_FALSE(nth_function(fr, 0).may_invent());

    // inner application of a head term inherits head provenance
    fr = flatten_rule(one_rule("p(f(s(X))) :- q(X)."));
    classify_function_atoms(fr);
    CHECK(nth_function(fr, 0).in_head);
    CHECK(nth_function(fr, 1).in_head);

    fr = flatten_rule(one_rule("a(X) :- p(X), not ab(s(X))."));
    classify_function_atoms(fr);
    CHECK(nth_function(fr, 0).in_negative_body);
    CHECK_FALSE(nth_function(fr, 0).may_invent());
}

TEST_CASE("aggregates are rewritten before flattening") {
    std::vector<std::string> aux;
    Program p = rewrite_aggregates(parse_program("a(X) :- X = #count( Y: p(s(Y)), q(Y) )."), &aux);
    REQUIRE(p.rules.size() == 2);
    CHECK(aux == std::vector<std::string>{"aux1"});
    CHECK(to_string(p.rules[0]) == "a(X) :- X = #count(Y: aux1(Y)).");
    CHECK(to_string(p.rules[1]) == "aux1(Y) :- p(s(Y)), q(Y).");
    CHECK(flat(to_string(p.rules[1])) == "aux1(Y) :- p(FN_1), q(Y), '#s'(FN_1,Y).");
}

TEST_CASE("aggregate globals become aux arguments") {
    std::vector<std::string> aux;
    Program p = rewrite_aggregates(
        parse_program("r(Z,N) :- t(Z), N = #count(Y: e(Y,Z), f(Y,W)).\nc(M) :- M = #count(V: g(V))."), &aux);
    CHECK(aux == std::vector<std::string>{"aux1"});
    CHECK(to_string(p.rules[0]) == "r(Z,N) :- t(Z), N = #count(Y: aux1(Y,Z)).");
    CHECK(to_string(p.rules[1]) == "aux1(Y,Z) :- e(Y,Z), f(Y,W).");
    // already a simple atom over locals: left alone
    CHECK(to_string(p.rules[2]) == "c(M) :- M = #count(V: g(V)).");
}

TEST_CASE("two aggregates get distinct aux predicates") {
    std::vector<std::string> aux;
    rewrite_aggregates(parse_program("a(X) :- X = #count(Y: p(s(Y))).\nb(X) :- X = #count(Y: q(Y), r(Y))."),
                       &aux);
    CHECK(aux == std::vector<std::string>{"aux1", "aux2"});
}

TEST_CASE("malformed aggregates") {
    CHECK_THROWS_AS(rewrite_aggregates(parse_program("a(X) :- X = #count(Y: q(Z)).")), RewriteError);
    CHECK_THROWS_AS(rewrite_aggregates(parse_program("a(X) :- X = #count(Y: q(Y,X)).")), RewriteError);
}

TEST_CASE("unsafe rules are rejected") {
    TermStore store;
    CHECK_THROWS_AS(rewrite_program(parse_program("p(X) :- q(Y)."), store), RewriteError);
    CHECK_THROWS_AS(rewrite_program(parse_program("p(X) :- q(Y), not r(X)."), store), RewriteError);
    // id variable bound through the function atom is enough
    CHECK_NOTHROW(rewrite_program(parse_program("p(X) :- q(s(X))."), store));
}

TEST_CASE("facts are interned at rewrite time") {
    TermStore store;
    FlatProgram fp = rewrite_program(parse_program("p(s(1)). q(s(1))."), store);
    CHECK(fp.rules.empty());
    REQUIRE(fp.facts.size() == 2);
    CHECK(fp.facts[0].args == fp.facts[1].args);
    CHECK(store.table(*store.find_function("s", 1)).size() == 1);
}

TEST_CASE("deep facts violate the bound") {
    TermStore store;
    CHECK_THROWS_AS(rewrite_program(parse_program("p(s(s(0)))."), store, RewriteOptions{1}), NestingExceeded);
}

TEST_CASE("unflatten inverts flatten") {
    for (const char* text : {"p(s(X)) :- a(X, f(Y,Z)).", "a(X) :- p(X), not ab(s(X)).",
                             "p(s(X)) :- q(s(Y), X).", "p(f(s(X),s(X))) v q :- r(X, g(X))."}) {
        Rule r = one_rule(text);
        CHECK(unflatten_rule(flatten_rule(r)) == r);
    }
}

TEST_CASE("printed rewrite reads back") {
    TermStore store;
    Program src = parse_program("p(s(1)).\nq(X) :- p(s(X)).");
    FlatProgram fp = rewrite_program(src, store);
    std::string text = print_flat_program(fp, store);
    CHECK(text == "'#s'(@1,1).\np(@1).\nq(X) :- p(FN_1), '#s'(FN_1,X).\n");
    TermStore again;
    FlatProgram back = rewrite_program(parse_program(text), again);
    CHECK(print_flat_program(back, again) == text);
}
