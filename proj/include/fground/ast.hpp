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
#include <iosfwd>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fground/errors.hpp"

namespace fground {

/// Surface term: constant, variable, function application, or a reference to
/// an interned function id (`@k`, only produced by the rewrite printer).
struct Term {
    enum class Kind : std::uint8_t { Symbol, Number, Variable, Function, IdRef };

    Kind kind = Kind::Symbol;
    std::string name;
    std::vector<Term> args;

    static Term symbol(std::string name);
    static Term number(std::int64_t value);
    static Term variable(std::string name);
    static Term function(std::string name, std::vector<Term> args);
    static Term id_ref(std::string label);

    bool is_variable() const { return kind == Kind::Variable; }
    bool is_function() const { return kind == Kind::Function; }
    bool is_constant() const { return kind == Kind::Symbol || kind == Kind::Number; }
    bool is_ground() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool is_ground() const;
    bool has_functions() const;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// `Bound = #count( Locals : Conjunction )`, conjunction of positive atoms.
struct Aggregate {
    std::string bound_var;
    std::vector<std::string> local_vars;
    std::vector<Atom> conjunction;

    friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

struct Literal {
    bool negated = false;
    std::variant<Atom, Aggregate> content;

    static Literal positive(Atom a) { return Literal{false, std::move(a)}; }
    static Literal negative(Atom a) { return Literal{true, std::move(a)}; }
    static Literal aggregate(Aggregate a) { return Literal{false, std::move(a)}; }

    bool is_aggregate() const { return std::holds_alternative<Aggregate>(content); }
    bool is_positive_atom() const { return !negated && !is_aggregate(); }
    const Atom& atom() const { return std::get<Atom>(content); }
    Atom& atom() { return std::get<Atom>(content); }
    const Aggregate& aggregate() const { return std::get<Aggregate>(content); }
    Aggregate& aggregate() { return std::get<Aggregate>(content); }

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Rule {
    std::vector<Atom> head;  // disjunction; empty for constraints
    std::vector<Literal> body;
    SourcePos pos;

    bool is_fact() const;
    bool is_constraint() const { return head.empty(); }

    friend bool operator==(const Rule& a, const Rule& b) { return a.head == b.head && a.body == b.body; }
};

struct Program {
    std::vector<Rule> rules;

    friend bool operator==(const Program&, const Program&) = default;
};

// Variable collection, in first-occurrence order where a vector is returned.
void collect_variables(const Term& t, std::vector<std::string>& out);
void collect_variables(const Atom& a, std::vector<std::string>& out);
std::vector<std::string> variables_of(const Rule& r);

/// 0 for constants, 1 + max over arguments for applications.
unsigned nesting_level(const Term& ground);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Aggregate& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string print_program(const Program& p);

/// Predicates starting with '#' are printed quoted.
std::string predicate_text(const std::string& name);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Rule& r);

} // namespace fground
