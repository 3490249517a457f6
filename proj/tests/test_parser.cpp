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

using namespace fground;

TEST_CASE("function terms in body") {
    Program p = parse_program("p(s(X)) :- a(X, f(Y,Z)).");
    REQUIRE(p.rules.size() == 1);
    const Rule& r = p.rules[0];
    CHECK(r.head[0].args[0].is_function());
    CHECK(r.body[0].atom().args[1].name == "f");
    CHECK(r.body[0].atom().args[1].args.size() == 2);
    CHECK(to_string(r) == "p(s(X)) :- a(X,f(Y,Z)).");
}

TEST_CASE("negation and aggregates") {
    Program p = parse_program("a(X) :- p(X), not ab(s(X)).\n"
                              "a(X) :- X = #count( Y: p(s(Y)), q(Y) ).");
    CHECK(p.rules[0].body[1].negated);
    CHECK(p.rules[0].body[1].atom().predicate == "ab");
    const Aggregate& agg = p.rules[1].body[0].aggregate();
    CHECK(agg.bound_var == "X");
    CHECK(agg.local_vars == std::vector<std::string>{"Y"});
    CHECK(agg.conjunction.size() == 2);
    CHECK(to_string(p.rules[1]) == "a(X) :- X = #count(Y: p(s(Y)), q(Y)).");
}

TEST_CASE("disjunction, constraints, comments") {
    Program p = parse_program("% facts\na v b.\nc | d :- a.\n:- a, b.\n");
    REQUIRE(p.rules.size() == 3);
    CHECK(p.rules[0].head.size() == 2);
    CHECK(p.rules[1].head.size() == 2);
    CHECK(p.rules[2].is_constraint());
    CHECK(print_program(p) == "a v b.\nc v d :- a.\n:- a, b.\n");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_program("p(X"), ParseError);
    try {
        parse_program("p(a).\nq(X :- r.");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position().line == 2);
    }
}

TEST_CASE("arity must be consistent") {
    CHECK_THROWS_AS(parse_program("p(a). p(a,b)."), ParseError);
    CHECK_THROWS_AS(parse_program("p(s(a)). q(s(a,b))."), ParseError);
}

TEST_CASE("flat syntax reads back") {
    Program p = parse_program("'#s'(@1,0).\np(@1).\np(FN_1) :- p(X), '#s'(FN_1,X).");
    CHECK(p.rules[0].head[0].predicate == "#s");
    CHECK(p.rules[0].head[0].args[0].kind == Term::Kind::IdRef);
    CHECK(print_program(p) == "'#s'(@1,0).\np(@1).\np(FN_1) :- p(X), '#s'(FN_1,X).\n");
}
