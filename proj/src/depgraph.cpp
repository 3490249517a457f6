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
#include "fground/depgraph.hpp"

#include <algorithm>
#include <deque>

namespace fground {

std::size_t DependencyGraph::add_node(const std::string& predicate) {
    if (auto i = index_of(predicate)) return *i;
    nodes_.push_back(predicate);
    return nodes_.size() - 1;
}

void DependencyGraph::add_arc(std::size_t from, std::size_t to, ArcKind kind) {
    Arc a{from, to, kind};
    if (std::find(arcs_.begin(), arcs_.end(), a) == arcs_.end()) arcs_.push_back(a);
}

std::optional<std::size_t> DependencyGraph::index_of(const std::string& predicate) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), predicate);
    if (it == nodes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

bool DependencyGraph::has_arc(const std::string& from, const std::string& to, ArcKind kind) const {
    auto f = index_of(from), t = index_of(to);
    return f && t && std::find(arcs_.begin(), arcs_.end(), Arc{*f, *t, kind}) != arcs_.end();
}

DependencyGraph build_dependency_graph(const FlatProgram& p) {
    DependencyGraph g;
    for (const auto& r : p.rules) {
        std::vector<std::size_t> heads;
        for (const auto& h : r.head) heads.push_back(g.add_node(h.predicate));
        for (const auto& item : r.body) {
            const Literal* l = as_literal(item);
            if (!l) continue;  // function atoms are neglected
            if (l->is_aggregate()) {
                for (const auto& c : l->aggregate().conjunction) {
                    auto from = g.add_node(c.predicate);
                    for (auto h : heads) g.add_arc(from, h, ArcKind::Aggregate);
                }
            } else {
                auto from = g.add_node(l->atom().predicate);
                for (auto h : heads) g.add_arc(from, h, l->negated ? ArcKind::Negative : ArcKind::Positive);
            }
        }
    }
    for (const auto& f : p.facts) g.add_node(f.predicate);
    return g;
}

namespace {

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<std::size_t>> tarjan(std::size_t n, const std::vector<std::vector<std::size_t>>& succ) {
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    std::size_t counter = 0;

    struct Frame {
        std::size_t node;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<Frame> calls{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!calls.empty()) {
            Frame& f = calls.back();
            if (f.next < succ[f.node].size()) {
                std::size_t w = succ[f.node][f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
                continue;
            }
            std::size_t v = f.node;
            calls.pop_back();
            if (!calls.empty()) low[calls.back().node] = std::min(low[calls.back().node], low[v]);
            if (low[v] != index[v]) continue;
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    }
    return out;
}

// Path from `from` to `to` staying inside `component`, as node indices.
std::vector<std::size_t> path_within(std::size_t from, std::size_t to, const std::vector<std::size_t>& comp_of,
                                     const std::vector<std::vector<std::size_t>>& succ) {
    std::vector<std::size_t> parent(comp_of.size(), static_cast<std::size_t>(-1));
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (std::size_t w : succ[v]) {
            if (comp_of[w] != comp_of[from] || parent[w] != static_cast<std::size_t>(-1)) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::vector<Component> evaluation_order(const DependencyGraph& g) {
    const std::size_t n = g.nodes().size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& a : g.arcs()) succ[a.from].push_back(a.to);
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    auto comps = tarjan(n, succ);
    std::reverse(comps.begin(), comps.end());
    std::vector<std::size_t> comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (auto v : comps[c]) comp_of[v] = c;

    for (const auto& a : g.arcs()) {
        if (a.kind == ArcKind::Positive || comp_of[a.from] != comp_of[a.to]) continue;
        auto back = path_within(a.to, a.from, comp_of, succ);
        std::vector<std::string> cycle{g.nodes()[a.from]};
        std::string text = g.nodes()[a.from] + (a.kind == ArcKind::Negative ? " -not-> " : " -count-> ");
        for (std::size_t i = 0; i < back.size(); ++i) {
            cycle.push_back(g.nodes()[back[i]]);
            text += (i ? " -> " : "") + g.nodes()[back[i]];
        }
        throw StratificationError("program is not stratified: cycle " + text, std::move(cycle));
    }

    std::vector<Component> out;
    for (const auto& c : comps) {
        Component names;
        for (auto v : c) names.push_back(g.nodes()[v]);
        out.push_back(std::move(names));
    }
    return out;
}

std::string to_dot(const DependencyGraph& g) {
    std::string s = "digraph dependencies {\n";
    for (const auto& n : g.nodes()) s += "  \"" + n + "\";\n";
    for (const auto& a : g.arcs()) {
        s += "  \"" + g.nodes()[a.from] + "\" -> \"" + g.nodes()[a.to] + "\"";
        if (a.kind == ArcKind::Negative) s += " [label=\"not\"]";
        if (a.kind == ArcKind::Aggregate) s += " [label=\"count\"]";
        s += ";\n";
    }
    return s + "}\n";
}

} // namespace fground
