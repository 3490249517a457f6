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

#include <cstdint>
#include <string>
#include <vector>

namespace fground {

/// Ground program over textual atoms (nested terms, no ids). Both the
/// grounder (after readback) and the naive oracle produce this form, and the
/// answer-set checker consumes it.
struct PlainAggregate {
    /// Holds iff exactly `target` elements are true. An element is true when
    /// one of its alternative conjunctions is entirely true.
    std::int64_t target = 0;
    std::vector<std::vector<std::vector<std::string>>> elements;

    friend bool operator==(const PlainAggregate&, const PlainAggregate&) = default;
    friend auto operator<=>(const PlainAggregate&, const PlainAggregate&) = default;
};

struct PlainRule {
    std::vector<std::string> head;
    std::vector<std::string> pos;
    std::vector<std::string> neg;
    std::vector<PlainAggregate> aggregates;

    friend bool operator==(const PlainRule&, const PlainRule&) = default;
    friend auto operator<=>(const PlainRule&, const PlainRule&) = default;
};

struct PlainProgram {
    std::vector<std::string> facts;
    std::vector<PlainRule> rules;
};

/// Sorts every component so that equal rule sets compare equal.
PlainRule canonical(PlainRule r);
std::string to_string(const PlainRule& r);

} // namespace fground
