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

#include <string_view>

#include "fground/ast.hpp"

namespace fground {

/// Parses a program in the rule language:
///
///   rule     ::= [head] [":-" body] "."
///   head     ::= atom { ("v" | "|") atom }
///   body     ::= literal { "," literal }
///   literal  ::= ["not"] atom | Var "=" "#count" "(" Vars ":" atoms ")"
///   atom     ::= pred ["(" term { "," term } ")"]
///   term     ::= const | int | Var | f "(" term { "," term } ")"
///
/// Predicates may also be written quoted (`'#s'`), and `@k` denotes an
/// interned term id; both appear in the output of the rewriter.
/// Throws ParseError with the position and expected-token set.
Program parse_program(std::string_view text);

} // namespace fground
