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
#include "fground/ast.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fground {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
    std::string s;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) s += i + 1 == expected.size() ? " or " : ", ";
        s += expected[i];
    }
    return s;
}

template <typename T, typename F>
void join(std::string& out, const std::vector<T>& items, const char* sep, F&& f) {
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += f(items[i]);
    }
}

} // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : ProgramError(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": expected " +
                   join_expected(expected) + ", found " + found),
      pos_(pos), expected_(std::move(expected)), found_(std::move(found)) {}

Term Term::symbol(std::string name) { return Term{Kind::Symbol, std::move(name), {}}; }
Term Term::number(std::int64_t value) { return Term{Kind::Number, std::to_string(value), {}}; }
Term Term::variable(std::string name) { return Term{Kind::Variable, std::move(name), {}}; }
Term Term::function(std::string name, std::vector<Term> args) {
    return Term{Kind::Function, std::move(name), std::move(args)};
}
Term Term::id_ref(std::string label) { return Term{Kind::IdRef, std::move(label), {}}; }

bool Term::is_ground() const {
    if (kind == Kind::Variable) return false;
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

bool Atom::is_ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

bool Atom::has_functions() const {
    return std::any_of(args.begin(), args.end(), [](const Term& t) { return t.is_function(); });
}

bool Rule::is_fact() const { return body.empty() && head.size() == 1 && head.front().is_ground(); }

void collect_variables(const Term& t, std::vector<std::string>& out) {
    if (t.is_variable()) {
        if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
        return;
    }
    for (const auto& a : t.args) collect_variables(a, out);
}

void collect_variables(const Atom& a, std::vector<std::string>& out) {
    for (const auto& t : a.args) collect_variables(t, out);
}

std::vector<std::string> variables_of(const Rule& r) {
    std::vector<std::string> out;
    for (const auto& h : r.head) collect_variables(h, out);
    for (const auto& l : r.body) {
        if (l.is_aggregate()) {
            const auto& agg = l.aggregate();
            if (std::find(out.begin(), out.end(), agg.bound_var) == out.end()) out.push_back(agg.bound_var);
            for (const auto& v : agg.local_vars)
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            for (const auto& c : agg.conjunction) collect_variables(c, out);
        } else {
            collect_variables(l.atom(), out);
        }
    }
    return out;
}

unsigned nesting_level(const Term& t) {
    if (t.kind != Term::Kind::Function) return 0;
    unsigned deepest = 0;
    for (const auto& a : t.args) deepest = std::max(deepest, nesting_level(a));
    return deepest + 1;
}

std::string to_string(const Term& t) {
    if (t.kind != Term::Kind::Function) return t.name;
    std::string s = t.name + "(";
    join(s, t.args, ",", [](const Term& a) { return to_string(a); });
    return s + ")";
}

std::string predicate_text(const std::string& name) {
    if (!name.empty() && name.front() == '#') return "'" + name + "'";
    return name;
}

std::string to_string(const Atom& a) {
    std::string s = predicate_text(a.predicate);
    if (a.args.empty()) return s;
    s += "(";
    join(s, a.args, ",", [](const Term& t) { return to_string(t); });
    return s + ")";
}

std::string to_string(const Aggregate& a) {
    std::string s = a.bound_var + " = #count(";
    join(s, a.local_vars, ",", [](const std::string& v) { return v; });
    s += ": ";
    join(s, a.conjunction, ", ", [](const Atom& c) { return to_string(c); });
    return s + ")";
}

std::string to_string(const Literal& l) {
    if (l.is_aggregate()) return to_string(l.aggregate());
    return (l.negated ? "not " : "") + to_string(l.atom());
}

std::string to_string(const Rule& r) {
    std::string s;
    join(s, r.head, " v ", [](const Atom& a) { return to_string(a); });
    if (!r.body.empty()) {
        s += r.head.empty() ? ":- " : " :- ";
        join(s, r.body, ", ", [](const Literal& l) { return to_string(l); });
    }
    return s + ".";
}

std::string print_program(const Program& p) {
    std::string s;
    for (const auto& r : p.rules) {
        s += to_string(r);
        s += '\n';
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << to_string(r); }

} // namespace fground
