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

#include "fground/depgraph.hpp"
#include "fground/parser.hpp"

using namespace fground;

namespace {

FlatProgram flat(const std::string& text, TermStore& store) {
    return rewrite_program(parse_program(text), store);
}

std::size_t component_of(const std::vector<Component>& order, const std::string& pred) {
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& p : order[i])
            if (p == pred) return i;
    throw std::out_of_range(pred);
}

} // namespace

TEST_CASE("function predicates add no nodes") {
    TermStore store;
    auto g = build_dependency_graph(flat("a(X) :- p(X), not ab(s(X)).", store));
    CHECK(g.nodes().size() == 3);
    CHECK(g.has_arc("p", "a", ArcKind::Positive));
    CHECK(g.has_arc("ab", "a", ArcKind::Negative));
    CHECK(g.arcs().size() == 2);
}

TEST_CASE("aux component precedes the aggregate rule") {
    TermStore store;
    auto g = build_dependency_graph(flat("a(X) :- X = #count( Y: p(s(Y)), q(Y) ).", store));
    CHECK(g.has_arc("aux1", "a", ArcKind::Aggregate));
    auto order = evaluation_order(g);
    CHECK(component_of(order, "aux1") < component_of(order, "a"));
    CHECK(component_of(order, "p") < component_of(order, "aux1"));
}

TEST_CASE("recursion forms one component") {
    TermStore store;
    auto order = evaluation_order(build_dependency_graph(flat("a(X) :- b(X).\nb(X) :- a(X).\nc(X) :- a(X).", store)));
    CHECK(component_of(order, "a") == component_of(order, "b"));
    CHECK(component_of(order, "a") < component_of(order, "c"));
}

TEST_CASE("negative cycle is rejected") {
    TermStore store;
    auto g = build_dependency_graph(flat("a :- not b.\nb :- not a.", store));
    CHECK_THROWS_AS(evaluation_order(g), StratificationError);
    try {
        evaluation_order(g);
    } catch (const StratificationError& e) {
        // closed walk: a, b, a
        CHECK(e.cycle().size() == 3);
        CHECK(e.cycle().front() == e.cycle().back());
    }
}

TEST_CASE("dot output labels arcs") {
    TermStore store;
    std::string dot = to_dot(build_dependency_graph(flat("a(X) :- p(X), not q(X).", store)));
    CHECK(dot.find("\"p\" -> \"a\";") != std::string::npos);
    CHECK(dot.find("\"q\" -> \"a\" [label=\"not\"];") != std::string::npos);
}
