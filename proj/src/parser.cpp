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
#include "fground/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace fground {

namespace {

enum class Tok { Ident, Var, Number, Quoted, IdRef, LParen, RParen, Comma, Dot, If, Colon, Equals, Count, Bar, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blanks();
        SourcePos pos{line_, col_};
        if (at_end()) return {Tok::End, "", pos};
        char c = peek();
        auto single = [&](Tok k) {
            advance();
            return Token{k, std::string(1, c), pos};
        };
        if (std::islower(static_cast<unsigned char>(c))) return {Tok::Ident, word(), pos};
        if (std::isupper(static_cast<unsigned char>(c))) return {Tok::Var, word(), pos};
        if (std::isdigit(static_cast<unsigned char>(c))) return {Tok::Number, digits(), pos};
        switch (c) {
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        case ',': return single(Tok::Comma);
        case '.': return single(Tok::Dot);
        case '|': return single(Tok::Bar);
        case '=': return single(Tok::Equals);
        case ':':
            advance();
            if (!at_end() && peek() == '-') {
                advance();
                return {Tok::If, ":-", pos};
            }
            return {Tok::Colon, ":", pos};
        case '@': {
            advance();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError({line_, col_}, {"digit after '@'"}, at_end() ? "end of input" : std::string(1, peek()));
            return {Tok::IdRef, "@" + digits(), pos};
        }
        case '#': {
            advance();
            std::string w = at_end() ? "" : word();
            if (w != "count") throw ParseError(pos, {"#count"}, "'#" + w + "'");
            return {Tok::Count, "#count", pos};
        }
        case '\'': {
            advance();
            std::string s;
            while (!at_end() && peek() != '\'' && peek() != '\n') {
                s += peek();
                advance();
            }
            if (at_end() || peek() != '\'') throw ParseError({line_, col_}, {"closing quote"}, "end of line");
            advance();
            if (s.size() < 2 || s.front() != '#') throw ParseError(pos, {"quoted function predicate '#f'"}, "'" + s + "'");
            return {Tok::Quoted, s, pos};
        }
        default:
            break;
        }
        throw ParseError(pos, {"a term, atom or punctuation"}, "'" + std::string(1, c) + "'");
    }

private:
    bool at_end() const { return i_ >= src_.size(); }
    char peek() const { return src_[i_]; }
    void advance() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip_blanks() {
        while (!at_end()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }
    std::string word() {
        std::string w;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            w += peek();
            advance();
        }
        return w;
    }
    std::string digits() {
        std::string w;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            w += peek();
            advance();
        }
        return w;
    }

    std::string_view src_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

    Program program() {
        Program p;
        while (tok_.kind != Tok::End) p.rules.push_back(rule());
        return p;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(tok_.pos, std::move(expected), describe(tok_));
    }

    Token take() {
        Token t = tok_;
        tok_ = lex_.next();
        return t;
    }

    Token expect(Tok k, const char* what) {
        if (tok_.kind != k) fail({what});
        return take();
    }

    bool starts_atom() const { return tok_.kind == Tok::Ident || tok_.kind == Tok::Quoted; }

    bool disjunction_follows() const {
        return tok_.kind == Tok::Bar || (tok_.kind == Tok::Ident && tok_.text == "v");
    }

    Rule rule() {
        Rule r;
        r.pos = tok_.pos;
        if (starts_atom()) {
            r.head.push_back(atom());
            while (disjunction_follows()) {
                take();
                if (!starts_atom()) fail({"atom"});
                r.head.push_back(atom());
            }
        }
        if (tok_.kind == Tok::If) {
            take();
            r.body.push_back(literal());
            while (tok_.kind == Tok::Comma) {
                take();
                r.body.push_back(literal());
            }
        } else if (r.head.empty()) {
            fail({"atom", "':-'"});
        }
        if (tok_.kind != Tok::Dot) {
            if (r.body.empty())
                fail({"'v'", "':-'", "'.'"});
            fail({"','", "'.'"});
        }
        take();
        return r;
    }

    Literal literal() {
        if (tok_.kind == Tok::Var) return Literal::aggregate(aggregate());
        if (tok_.kind == Tok::Ident && tok_.text == "not") {
            Token not_tok = take();
            if (starts_atom()) return Literal::negative(atom());
            // a propositional atom called `not`
            return Literal::positive(Atom{not_tok.text, {}});
        }
        if (!starts_atom()) fail({"literal"});
        return Literal::positive(atom());
    }

    Aggregate aggregate() {
        Aggregate agg;
        agg.bound_var = take().text;
        expect(Tok::Equals, "'='");
        expect(Tok::Count, "'#count'");
        expect(Tok::LParen, "'('");
        do {
            if (!agg.local_vars.empty()) take();
            Token v = expect(Tok::Var, "variable");
            if (v.text == agg.bound_var)
                throw ParseError(v.pos, {"aggregate variable other than " + agg.bound_var}, describe(v));
            if (std::find(agg.local_vars.begin(), agg.local_vars.end(), v.text) == agg.local_vars.end())
                agg.local_vars.push_back(v.text);
        } while (tok_.kind == Tok::Comma);
        expect(Tok::Colon, "':'");
        if (!starts_atom()) fail({"atom"});
        agg.conjunction.push_back(atom());
        while (tok_.kind == Tok::Comma) {
            take();
            if (!starts_atom()) fail({"atom"});
            agg.conjunction.push_back(atom());
        }
        expect(Tok::RParen, "')'");
        return agg;
    }

    Atom atom() {
        Token name = take();
        Atom a{name.text, {}};
        if (tok_.kind == Tok::LParen) a.args = arguments();
        check_arity(predicates_, "predicate", name, a.args.size());
        return a;
    }

    std::vector<Term> arguments() {
        expect(Tok::LParen, "'('");
        std::vector<Term> args;
        args.push_back(term());
        while (tok_.kind == Tok::Comma) {
            take();
            args.push_back(term());
        }
        expect(Tok::RParen, "',' or ')'");
        return args;
    }

    Term term() {
        switch (tok_.kind) {
        case Tok::Var: return Term::variable(take().text);
        case Tok::IdRef: return Term::id_ref(take().text);
        case Tok::Number: {
            Token t = take();
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            if (ec != std::errc{}) throw ParseError(t.pos, {"integer in 64-bit range"}, describe(t));
            return Term::number(value);
        }
        case Tok::Ident: {
            Token name = take();
            if (tok_.kind != Tok::LParen) return Term::symbol(name.text);
            auto args = arguments();
            check_arity(functions_, "function symbol", name, args.size());
            return Term::function(name.text, std::move(args));
        }
        default:
            fail({"term"});
        }
    }

    void check_arity(std::map<std::string, std::size_t>& seen, const char* what, const Token& name,
                     std::size_t arity) {
        auto [it, fresh] = seen.emplace(name.text, arity);
        if (!fresh && it->second != arity)
            throw ParseError(name.pos, {std::string(what) + " " + name.text + "/" + std::to_string(it->second)},
                             name.text + "/" + std::to_string(arity));
    }

    Lexer lex_;
    Token tok_;
    std::map<std::string, std::size_t> predicates_;
    std::map<std::string, std::size_t> functions_;
};

} // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

} // namespace fground
