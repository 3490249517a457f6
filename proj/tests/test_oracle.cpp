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

#include "fground/oracle.hpp"
#include "fground/parser.hpp"

using namespace fground;

namespace {

using Sets = std::set<Interpretation>;

Sets stable(const std::string& text, unsigned k = 2) {
    return answer_sets(naive_ground(parse_program(text), k));
}

} // namespace

TEST_CASE("universe size by level") {
    Program p = parse_program("q(a). q(b).\np(s(X)) :- q(X).");
    CHECK(universe_size(p, 0) == 2);
    CHECK(universe_size(p, 1) == 4);
    CHECK(universe_size(p, 2) == 6);
    CHECK(term_universe(p, 2).size() == 6);
    Program f = parse_program("q(a).\np(f(X,Y)) :- q(X), q(Y).");
    // a; f(a,a); then f over {a, f(a,a)} squared
    CHECK(universe_size(f, 2) == 1 + 4);
    CHECK(term_universe(f, 2).size() == 5);
    CHECK_THROWS_AS(universe_size(f, 6), OracleTooLarge);
}

TEST_CASE("bound excludes deep head terms") {
    Program p = parse_program("p(s(X)) :- q(X). q(1).");
    CHECK(naive_ground(p, 1).facts == std::vector<std::string>{"p(s(1))", "q(1)"});
    CHECK(naive_ground(p, 0).facts == std::vector<std::string>{"q(1)"});
}

TEST_CASE("body terms need a matching atom") {
    PlainProgram gp = naive_ground(parse_program("t(b).\np(X) :- q(X, s(Y)), t(Y)."), 2);
    CHECK(gp.facts == std::vector<std::string>{"t(b)"});
    CHECK(gp.rules.empty());
}

TEST_CASE("disjunctive fact") {
    CHECK(stable("a v b.") == Sets{{"a"}, {"b"}});
}

TEST_CASE("even loop") {
    PlainProgram gp;
    gp.rules.push_back(PlainRule{{"a"}, {}, {"b"}, {}});
    gp.rules.push_back(PlainRule{{"b"}, {}, {"a"}, {}});
    CHECK(answer_sets(gp) == Sets{{"a"}, {"b"}});
}

TEST_CASE("unique model of a definite program") {
    CHECK(stable("p(s(X)) :- q(X). q(1).") == Sets{{"q(1)", "p(s(1))"}});
}

TEST_CASE("constraint kills models") {
    CHECK(stable("a v b.\n:- a.") == Sets{{"b"}});
    CHECK(stable("a.\n:- a.").empty());
}

TEST_CASE("minimality with a positive loop") {
    // {a, b} supports itself only through the loop
    PlainProgram gp;
    gp.rules.push_back(PlainRule{{"a"}, {"b"}, {}, {}});
    gp.rules.push_back(PlainRule{{"b"}, {"a"}, {}, {}});
    CHECK(answer_sets(gp) == Sets{{}});
}

TEST_CASE("count residual") {
    CHECK(stable("q(1). q(2).\nq(3) v t.\nc(N) :- N = #count(X : q(X)).") ==
          Sets{{"q(1)", "q(2)", "t", "c(2)"}, {"q(1)", "q(2)", "q(3)", "c(3)"}});
}

TEST_CASE("count over existential variables") {
    CHECK(stable("e(a,1). e(a,2). e(b,1).\nc(N) :- N = #count(X : e(X,Y)).") ==
          Sets{{"e(a,1)", "e(a,2)", "e(b,1)", "c(2)"}});
}

TEST_CASE("answer sets are pairwise incomparable") {
    Sets s = stable("a v b v c.\nd v a :- b.\n:- c, a.");
    for (const auto& x : s)
        for (const auto& y : s)
            if (&x != &y) CHECK_FALSE(std::includes(y.begin(), y.end(), x.begin(), x.end()));
}

TEST_CASE("atom cap") {
    std::string text;
    for (int i = 0; i < 13; ++i) text += "a" + std::to_string(i) + " v b" + std::to_string(i) + ".\n";
    CHECK_THROWS_AS(answer_sets(naive_ground(parse_program(text), 0)), OracleTooLarge);
}

TEST_CASE("projection hides predicates") {
    Sets s{{"aux1(1)", "p(1)"}, {"p(2)"}};
    CHECK(project(s, {"aux1"}) == Sets{{"p(1)"}, {"p(2)"}});
}
