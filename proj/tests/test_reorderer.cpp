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
#include "fground/reorderer.hpp"

using namespace fground;

namespace {

FlatRule flat_rule(const std::string& text) {
    TermStore store;
    return rewrite_program(parse_program(text), store).rules.front();
}

} // namespace

TEST_CASE("function atom waits for its id") {
    FlatRule r = reorder_body(flat_rule("m(X,Y) :- '#s'(S,X,Y), k(S,T), p(W,Z,T)."));
    CHECK(to_string(r) == "m(X,Y) :- k(S,T), '#s'(S,X,Y), p(W,Z,T).");
    CHECK(check_placement(r).empty());
}

TEST_CASE("function atom follows the atom that binds it") {
    FlatRule r = reorder_body(flat_rule("p(X) :- q(S,X), t(Y), '#s'(S,Y)."));
    CHECK(to_string(r) == "p(X) :- q(S,X), '#s'(S,Y), t(Y).");
    // with t first, condition (b) holds right after it
    r = reorder_body(flat_rule("p(X) :- t(Y), q(S,X), '#s'(S,Y)."));
    CHECK(to_string(r) == "p(X) :- t(Y), '#s'(S,Y), q(S,X).");
}

TEST_CASE("weights") {
    FlatRule r = flat_rule("p(X) :- q(S,X), t(Y), '#s'(S,Y).");
    const BodyItem& fa = r.body[2];
    CHECK(atom_weight(fa, {}) == kMaxWeight);
    CHECK(atom_weight(fa, {"S"}) == -kMaxWeight);
    CHECK(atom_weight(fa, {"Y"}) == -kMaxWeight);
    CHECK(atom_weight(r.body[0], {"X"}) < atom_weight(r.body[0], {}));
}

TEST_CASE("negation waits for its variables") {
    FlatRule r = reorder_body(flat_rule("a(X) :- not b(X), p(X)."));
    CHECK(to_string(r) == "a(X) :- p(X), not b(X).");
}

TEST_CASE("head-only atoms end the body") {
    FlatRule r = reorder_body(flat_rule("p(s(X)) :- q(X), r(X,Y)."));
    CHECK(check_placement(r).empty());
    CHECK(as_function(r.body.back()) != nullptr);
}

TEST_CASE("body without function atoms keeps a join order") {
    FlatRule r = reorder_body(flat_rule("a(X,Z) :- b(X,Y), c(Y,Z)."));
    CHECK(to_string(r) == "a(X,Z) :- b(X,Y), c(Y,Z).");
}

TEST_CASE("placement audit flags late atoms") {
    // s* placeable after q but parked at the end
    FlatRule r = park_function_atoms(flat_rule("p(X) :- q(S,X), t(Y), '#s'(S,Y)."));
    CHECK_FALSE(check_placement(r).empty());
}
