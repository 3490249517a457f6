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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fground {

enum class Mode { Parse, Rewrite, Reorder, Depgraph, Ground, AnswerSets };

struct RunConfig {
    std::vector<std::string> inputs;  // empty: standard input
    Mode mode = Mode::Ground;
    std::optional<unsigned> max_nesting;
    bool show_ids = false;
    bool oracle = false;
    bool stats = false;
};

std::optional<Mode> parse_mode(const std::string& name);

/// Runs one pipeline over `text`. Returns the exit status: 0 on success,
/// 1 on program errors, 2 on usage errors.
int run(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err);

} // namespace fground
