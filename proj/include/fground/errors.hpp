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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fground {

/// Misuse of an API contract (unknown id, arity mismatch, non-LIFO trail use).
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Errors in the user's program. The CLI maps all of these to exit status 1.
class ProgramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 0;
};

class ParseError : public ProgramError {
public:
    ParseError(SourcePos pos, std::vector<std::string> expected, std::string found);

    SourcePos position() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    SourcePos pos_;
    std::vector<std::string> expected_;
    std::string found_;
};

class RewriteError : public ProgramError {
public:
    using ProgramError::ProgramError;
};

/// A ground fact whose terms are nested deeper than the --maxNesting bound.
class NestingExceeded : public RewriteError {
public:
    using RewriteError::RewriteError;
};

class StratificationError : public ProgramError {
public:
    StratificationError(const std::string& what, std::vector<std::string> cycle)
        : ProgramError(what), cycle_(std::move(cycle)) {}
    const std::vector<std::string>& cycle() const { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

/// Raised by the brute-force oracles when an input exceeds their caps.
class OracleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fground
