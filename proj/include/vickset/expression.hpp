// Copyright 2026 The vickset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vickset/error.hpp"
#include "vickset/quotient.hpp"
#include "vickset/relation.hpp"
#include "vickset/text.hpp"
#include "vickset/value.hpp"

// A small expression language over Values.
//
//   expr    := term (infix term)*            all infix operators share one
//                                            precedence and associate left
//   infix   := outside | -- | +* | +< | ,, | ,,, | O | ``
//   term    := ( expr ) | ( expr , expr )    pair literal
//            | { expr , ... }                set literal
//            | [ "pair" ... ] | [ "set" ... ]  Value encoding
//            | number | "symbol" | name ( expr , ... )
//
// `#` starts a comment running to the end of the line.

namespace vickset {

namespace expr_detail {

enum class Tok {
    End,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Infix,
    Name,
    Literal,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Value literal;
    std::size_t position = 0;
};

inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        Token t;
        t.position = pos_;
        if (pos_ >= text_.size()) {
            return t;
        }
        char c = text_[pos_];
        auto starts = [&](std::string_view s) {
            return text_.substr(pos_, s.size()) == s;
        };
        if (starts(",,,") || starts(",,") || starts("--") || starts("+*") ||
            starts("+<") || starts("``")) {
            std::size_t len = starts(",,,") ? 3 : 2;
            t.kind = Tok::Infix;
            t.text = std::string(text_.substr(pos_, len));
            pos_ += len;
            return t;
        }
        switch (c) {
            case '(':
                ++pos_;
                t.kind = Tok::LParen;
                return t;
            case ')':
                ++pos_;
                t.kind = Tok::RParen;
                return t;
            case '{':
                ++pos_;
                t.kind = Tok::LBrace;
                return t;
            case '}':
                ++pos_;
                t.kind = Tok::RBrace;
                return t;
            case ',':
                ++pos_;
                t.kind = Tok::Comma;
                return t;
            default:
                break;
        }
        if (c == '"' || c == '[' || c == '-' ||
            std::isdigit(static_cast<unsigned char>(c)) != 0) {
            ValueReader reader(text_, pos_);
            t.kind = Tok::Literal;
            t.literal = canonicalize(reader.read());
            return t;
        }
        if (is_name_char(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_name_char(text_[pos_])) {
                ++pos_;
            }
            t.text = std::string(text_.substr(start, pos_ - start));
            t.kind = (t.text == "O" || t.text == "outside") ? Tok::Infix : Tok::Name;
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    /// True when the next non-blank character is `c`.
    bool peek_char(char c) {
        skip_blank();
        return pos_ < text_.size() && text_[pos_] == c;
    }

  private:
    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Relation as_rel(const Value& v) { return Relation(v); }

using Builtin = std::function<Value(const std::vector<Value>&)>;

struct Signature {
    std::size_t min_args;
    std::size_t max_args;
    Builtin fn;
};

inline Value apply_infix(const std::string& op, const Value& lhs, const Value& rhs) {
    if (op == "outside") {
        return outside(as_rel(lhs), rhs).value();
    }
    if (op == "--") {
        return single_outside(as_rel(lhs), rhs).value();
    }
    if (op == "+*") {
        return paste(as_rel(lhs), as_rel(rhs)).value();
    }
    if (op == "+<") {
        if (!rhs.is_pair()) {
            throw TypeError("+< expects a pair on the right");
        }
        return single_paste(as_rel(lhs), rhs).value();
    }
    if (op == ",,") {
        return eval_rel(as_rel(lhs), rhs);
    }
    if (op == ",,,") {
        return eval_rel2(as_rel(lhs), rhs);
    }
    if (op == "O") {
        return compose(as_rel(lhs), as_rel(rhs)).value();
    }
    return image(as_rel(lhs), rhs);  // ``
}

inline const std::map<std::string, Signature>& builtins() {
    using Args = const std::vector<Value>&;
    static const std::map<std::string, Signature> table = {
        {"image", {2, 2, [](Args a) { return image(as_rel(a[0]), a[1]); }}},
        {"converse", {1, 1, [](Args a) { return converse(as_rel(a[0])).value(); }}},
        {"compose",
         {2, 2, [](Args a) { return compose(as_rel(a[0]), as_rel(a[1])).value(); }}},
        {"projector", {1, 1, [](Args a) { return projector(as_rel(a[0])).value(); }}},
        {"classes", {1, 1, [](Args a) { return classes(as_rel(a[0])); }}},
        {"quotient",
         {3, 3,
          [](Args a) {
              return quotient(as_rel(a[0]), as_rel(a[1]), as_rel(a[2])).value();
          }}},
        {"kernel", {1, 1, [](Args a) { return kernel(as_rel(a[0])).value(); }}},
        {"outside",
         {2, 2, [](Args a) { return outside(as_rel(a[0]), a[1]).value(); }}},
        {"paste",
         {2, 2, [](Args a) { return paste(as_rel(a[0]), as_rel(a[1])).value(); }}},
        {"single_paste",
         {2, 3,
          [](Args a) {
              if (a.size() == 3) {
                  return single_paste(as_rel(a[0]), a[1], a[2]).value();
              }
              if (!a[1].is_pair()) {
                  throw TypeError("single_paste expects a pair as second argument");
              }
              return single_paste(as_rel(a[0]), a[1]).value();
          }}},
        {"eval", {2, 2, [](Args a) { return eval_rel(as_rel(a[0]), a[1]); }}},
        {"eval2", {2, 2, [](Args a) { return eval_rel2(as_rel(a[0]), a[1]); }}},
        {"domain", {1, 1, [](Args a) { return domain(as_rel(a[0])); }}},
        {"range", {1, 1, [](Args a) { return range(as_rel(a[0])); }}},
        {"id", {1, 1, [](Args a) { return identity(a[0]).value(); }}},
        {"union", {2, 2, [](Args a) { return set_union(a[0], a[1]); }}},
        {"intersection", {2, 2, [](Args a) { return set_intersection(a[0], a[1]); }}},
        {"difference", {2, 2, [](Args a) { return set_difference(a[0], a[1]); }}},
        {"product", {2, 2, [](Args a) { return cartesian_product(a[0], a[1]); }}},
        {"the_elem", {1, 1, [](Args a) { return the_elem(a[0]); }}},
    };
    return table;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Value parse_all() {
        Value v = expression();
        if (current_.kind != Tok::End) {
            throw ParseError("trailing input", current_.position);
        }
        return v;
    }

  private:
    void advance() { current_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (current_.kind != kind) {
            throw ParseError(std::string("expected ") + what, current_.position);
        }
        advance();
    }

    Value expression() {
        Value lhs = term();
        while (current_.kind == Tok::Infix) {
            std::string op = current_.text;
            advance();
            Value rhs = term();
            lhs = apply_infix(op, lhs, rhs);
        }
        return lhs;
    }

    std::vector<Value> list_until(Tok close, const char* what) {
        std::vector<Value> items;
        if (current_.kind == close) {
            advance();
            return items;
        }
        while (true) {
            items.push_back(expression());
            if (current_.kind == Tok::Comma) {
                advance();
                continue;
            }
            expect(close, what);
            return items;
        }
    }

    Value term() {
        Token t = current_;
        switch (t.kind) {
            case Tok::Literal:
                advance();
                return t.literal;
            case Tok::LBrace:
                advance();
                return Value::set(list_until(Tok::RBrace, "',' or '}'"));
            case Tok::LParen: {
                advance();
                auto items = list_until(Tok::RParen, "',' or ')'");
                if (items.size() == 1) {
                    return items[0];
                }
                if (items.size() == 2) {
                    return Value::pair(items[0], items[1]);
                }
                throw ParseError("parenthesized list must hold one or two items",
                                 t.position);
            }
            case Tok::Name:
            case Tok::Infix:
                return call(t);
            default:
                throw ParseError("expected a term", t.position);
        }
    }

    Value call(const Token& name) {
        auto it = builtins().find(name.text);
        if (it == builtins().end() || !lexer_peek_lparen()) {
            throw ParseError("unknown name '" + name.text + "'", name.position);
        }
        advance();
        expect(Tok::LParen, "'('");
        auto args = list_until(Tok::RParen, "',' or ')'");
        const Signature& sig = it->second;
        if (args.size() < sig.min_args || args.size() > sig.max_args) {
            throw ParseError(name.text + " takes " + std::to_string(sig.min_args) +
                                 (sig.min_args == sig.max_args
                                      ? ""
                                      : "-" + std::to_string(sig.max_args)) +
                                 " argument(s), got " + std::to_string(args.size()),
                             name.position);
        }
        return sig.fn(args);
    }

    bool lexer_peek_lparen() { return lexer_.peek_char('('); }

    Lexer lexer_;
    Token current_;
};

}  // namespace expr_detail

/// Evaluates one expression. Syntax and arity problems raise ParseError;
/// ill-typed operands raise TypeError or DomainError.
inline Value eval_expression(std::string_view text) {
    return expr_detail::Parser(text).parse_all();
}

}  // namespace vickset
