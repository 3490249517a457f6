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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fground/ast.hpp"
#include "fground/term_store.hpp"

namespace fground {

enum class Provenance { HeadOnly, BodyTouched };

/// Body atom `'#f'(Id, Args...)` standing for one application f(Args...).
/// The occurrence flags say where the application (or an application
/// enclosing it) appears in the source rule.
struct FunctionAtom {
    std::string symbol;
    Term id;
    std::vector<Term> args;
    bool in_head = false;
    bool in_positive_body = false;
    bool in_negative_body = false;

    Provenance provenance() const {
        return in_head && !in_positive_body && !in_negative_body ? Provenance::HeadOnly : Provenance::BodyTouched;
    }
    /// May mint a fresh id when the lookup misses: the term is being derived
    /// by the head and no positive body atom requires it to exist already.
    bool may_invent() const { return in_head && !in_positive_body; }

    Atom as_atom() const;

    friend bool operator==(const FunctionAtom&, const FunctionAtom&) = default;
};

using BodyItem = std::variant<Literal, FunctionAtom>;

/// Function-free rule; every application became a FunctionAtom.
struct FlatRule {
    std::vector<Atom> head;
    std::vector<BodyItem> body;
    SourcePos origin;

    friend bool operator==(const FlatRule& a, const FlatRule& b) { return a.head == b.head && a.body == b.body; }
};

/// Ground fact over interned terms.
struct InternedFact {
    std::string predicate;
    Tuple args;

    friend bool operator==(const InternedFact&, const InternedFact&) = default;
};

struct FlatProgram {
    std::vector<FlatRule> rules;
    std::vector<InternedFact> facts;
    std::vector<std::string> aux_predicates;
    /// `@k` labels read back from rewritten input, mapped to store ids.
    std::map<std::string, TermId> id_labels;
};

struct RewriteOptions {
    std::optional<unsigned> max_nesting;
};

inline const FunctionAtom* as_function(const BodyItem& item) { return std::get_if<FunctionAtom>(&item); }
inline const Literal* as_literal(const BodyItem& item) { return std::get_if<Literal>(&item); }
bool is_function_predicate(const std::string& predicate);

/// Moves each `#count` conjunction into a fresh rule `auxN(Locals, Globals) :- Conj`
/// and points the aggregate at it. Conjunctions that already are a single
/// function-free atom over local and global variables are left alone.
Program rewrite_aggregates(const Program& p, std::vector<std::string>* aux_names = nullptr);

/// Replaces every application, innermost first, by a fresh id variable FN_k
/// plus one FunctionAtom; identical applications share one atom. Function
/// atoms go right before the first negative or aggregate literal.
FlatRule flatten_rule(const Rule& r);

/// Recomputes the occurrence flags of every FunctionAtom in `fr`.
void classify_function_atoms(FlatRule& fr);

/// Every head, negative, aggregate and function-atom variable must be
/// bindable from positive atoms, aggregates and function atoms.
void check_safety(const FlatRule& fr);

/// Interns a ground fact inside-to-outside. Throws NestingExceeded.
InternedFact flatten_fact(const Atom& fact, TermStore& store, std::optional<unsigned> max_nesting,
                          const std::map<std::string, TermId>& id_labels = {});

/// Substitutes function atoms back into nested terms.
Rule unflatten_rule(const FlatRule& fr);

/// Whole pass: aggregates, then facts into the store, then rule flattening
/// and the safety check. Accepts already-flat input (`'#f'` atoms, `@k` ids).
FlatProgram rewrite_program(const Program& p, TermStore& store, const RewriteOptions& opts = {});

std::string to_string(const FunctionAtom& fa);
std::string to_string(const BodyItem& item);
std::string to_string(const FlatRule& fr);
std::string to_string(const InternedFact& f, const TermStore& store);
/// Table tuples, then facts, then rules; parseable by parse_program.
std::string print_flat_program(const FlatProgram& p, const TermStore& store);

} // namespace fground
