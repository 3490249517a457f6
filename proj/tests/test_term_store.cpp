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
#include "fground/term_store.hpp"

using namespace fground;

namespace {

Term ground_term(const std::string& text) {
    Program p = parse_program("t(" + text + ").");
    return p.rules.front().head.front().args.front();
}

} // namespace

TEST_CASE("constants intern once") {
    TermStore s;
    TermId a = s.intern_constant("a");
    CHECK(s.intern_constant("a") == a);
    CHECK(s.intern_constant("b") != a);
    CHECK(s.intern_number(7) == s.intern_constant("7"));
    CHECK(s.nesting_level(a) == 0);
    CHECK_FALSE(s.is_function(a));
}

TEST_CASE("same tuple yields the same id") {
    TermStore s;
    TermId one = s.intern_number(1);
    auto first = s.insert_function("s", std::vector{one});
    auto second = s.insert_function("s", std::vector{one});
    CHECK(first.status == InsertStatus::Created);
    CHECK(second.status == InsertStatus::Existing);
    CHECK(first.id == second.id);
    CHECK(s.table(*s.find_function("s", 1)).size() == 1);
    CHECK(s.label(first.id) == "@1");
    CHECK(s.text(first.id) == "s(1)");
}

TEST_CASE("levels follow the recurrence") {
    TermStore s;
    CHECK(s.nesting_level(*s.intern(ground_term("a"))) == 0);
    CHECK(s.nesting_level(*s.intern(ground_term("s(a,b)"))) == 1);
    CHECK(s.nesting_level(*s.intern(ground_term("f(s(t,w(a)),f(b,c))"))) == 3);
    CHECK(nesting_level(ground_term("f(s(t,w(a)),f(b,c))")) == 3);
}

TEST_CASE("max nesting refuses deeper terms") {
    TermStore s;
    TermId zero = s.intern_number(0);
    auto l1 = s.insert_function("s", std::vector{zero}, 1u);
    REQUIRE(l1);
    auto l2 = s.insert_function("s", std::vector{l1.id}, 1u);
    CHECK(l2.status == InsertStatus::NestingExceeded);
    CHECK(s.table(*s.find_function("s", 1)).size() == 1);
    CHECK_FALSE(s.intern(ground_term("s(s(0))"), 1u));
    CHECK(s.intern(ground_term("s(s(0))"), 2u));
}

TEST_CASE("rollback removes tentative ids") {
    TermStore s;
    TermId a = s.intern_constant("a");
    TrailMark m = s.mark();
    auto t = s.insert_function("f", std::vector{a}, std::nullopt, true);
    CHECK(t.status == InsertStatus::Created);
    CHECK(s.pending() == 1);
    CHECK(s.lookup_function("f", std::vector{a}) == t.id);
    s.rollback(m);
    CHECK(s.pending() == 0);
    CHECK_FALSE(s.lookup_function("f", std::vector{a}));
    CHECK_FALSE(s.contains(t.id));
    CHECK(s.check_invariants().empty());
    // label is reused after the rollback
    auto again = s.insert_function("f", std::vector{a});
    CHECK(s.label(again.id) == "@1");
}

TEST_CASE("commit keeps ids past an outer rollback of later entries") {
    TermStore s;
    TermId a = s.intern_constant("a");
    TrailMark outer = s.mark();
    auto kept = s.insert_function("f", std::vector{a}, std::nullopt, true);
    s.commit(outer);
    TrailMark inner = s.mark();
    auto dropped = s.insert_function("g", std::vector{a}, std::nullopt, true);
    s.rollback(inner);
    CHECK(s.contains(kept.id));
    CHECK_FALSE(s.contains(dropped.id));
    s.rollback(outer);
    CHECK(s.contains(kept.id));
    CHECK(s.stats().committed == 1);
    CHECK(s.stats().rolled_back == 1);
    CHECK(s.check_invariants().empty());
}

TEST_CASE("stale mark is a usage error") {
    TermStore s;
    TermId a = s.intern_constant("a");
    TrailMark m = s.mark();
    s.insert_function("f", std::vector{a}, std::nullopt, true);
    TrailMark later = s.mark();
    s.rollback(m);
    CHECK_THROWS_AS(s.rollback(later), UsageError);
}

TEST_CASE("arity clash on lookup") {
    TermStore s;
    TermId a = s.intern_constant("a");
    s.insert_function("f", std::vector{a});
    CHECK_THROWS_AS(s.lookup_function("f", std::vector{a, a}), UsageError);
}

TEST_CASE("decompose and to_term invert interning") {
    TermStore s;
    Term t = ground_term("f(s(1),g(a,2))");
    TermId id = *s.intern(t);
    CHECK(s.to_term(id) == t);
    auto parts = s.decompose(id);
    REQUIRE(parts);
    CHECK(s.table(parts->first).name() == "f");
    CHECK(parts->second->size() == 2);
    CHECK_FALSE(s.decompose(s.intern_constant("a")));
    CHECK(s.check_invariants().empty());
}

TEST_CASE("inner commit keeps the tentative arguments it uses") {
    TermStore s;
    TermId a = s.intern_constant("a");
    TrailMark outer = s.mark();
    auto inner_arg = s.insert_function("s", std::vector{a}, std::nullopt, true);
    TrailMark inner = s.mark();
    auto wrapped = s.insert_function("s", std::vector{inner_arg.id}, std::nullopt, true);
    s.commit(inner);
    s.rollback(outer);
    CHECK(s.contains(wrapped.id));
    CHECK(s.contains(inner_arg.id));
    CHECK(s.check_invariants().empty());
}
