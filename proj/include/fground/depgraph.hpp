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
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fground/rewriter.hpp"

namespace fground {

enum class ArcKind { Positive, Negative, Aggregate };

struct Arc {
    std::size_t from;  // body predicate
    std::size_t to;    // head predicate
    ArcKind kind;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Predicate dependency graph. Function predicates get neither nodes nor
/// arcs, like built-ins.
class DependencyGraph {
public:
    std::size_t add_node(const std::string& predicate);
    void add_arc(std::size_t from, std::size_t to, ArcKind kind);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::optional<std::size_t> index_of(const std::string& predicate) const;
    bool has_arc(const std::string& from, const std::string& to, ArcKind kind) const;

private:
    std::vector<std::string> nodes_;
    std::vector<Arc> arcs_;
};

using Component = std::vector<std::string>;

DependencyGraph build_dependency_graph(const FlatProgram& p);

/// Strongly connected components in topological order (dependencies first).
/// Throws StratificationError if a negative or aggregate arc lies inside a
/// component.
std::vector<Component> evaluation_order(const DependencyGraph& g);

std::string to_dot(const DependencyGraph& g);

} // namespace fground
