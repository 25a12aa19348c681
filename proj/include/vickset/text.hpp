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
#include <charconv>
#include <ostream>
#include <string>
#include <string_view>

#include "vickset/error.hpp"
#include "vickset/value.hpp"

// Value text encoding:
//   integers   decimal, optional leading '-'           e.g. 12, -3
//   rationals  n/d, unquoted                            e.g. 1/2, -7/3
//   symbols    double-quoted strings                    e.g. "g1"
//   pairs      ["pair", v1, v2]
//   sets       ["set", v1, ...]   any order on input, canonical on output
// Canonical output uses ", " between array items and no other whitespace.

namespace vickset {

namespace detail {

inline void append_quoted(std::string& out, std::string_view s) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\t':
                out += "\\t";
                break;
            case '\r':
                out += "\\r";
                break;
            default:
                out.push_back(c);
        }
    }
    out.push_back('"');
}

inline void append_text(std::string& out, const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Number:
            out += v.as_number().to_string();
            break;
        case Value::Kind::Symbol:
            append_quoted(out, v.as_symbol());
            break;
        case Value::Kind::Pair:
            out += "[\"pair\", ";
            append_text(out, v.first());
            out += ", ";
            append_text(out, v.second());
            out += "]";
            break;
        case Value::Kind::Set:
            out += "[\"set\"";
            for (const auto& e : v.elements()) {
                out += ", ";
                append_text(out, e);
            }
            out += "]";
            break;
    }
}

}  // namespace detail

/// Canonical text of a Value.
inline std::string to_text(const Value& v) {
    std::string out;
    detail::append_text(out, v);
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Value& v) {
    return os << to_text(v);
}

/// Reads one Value-encoded item starting at `pos`, advancing `pos` past it.
/// Leading whitespace is skipped; trailing input is left alone.
class ValueReader {
  public:
    ValueReader(std::string_view text, std::size_t& pos)
        : text_(text), pos_(pos) {}

    RawValue read() {
        skip_ws();
        if (at_end()) {
            throw ParseError("unexpected end of input", pos_);
        }
        char c = text_[pos_];
        if (c == '"') {
            return RawValue{RawValue::Sym{read_string()}};
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            return read_number();
        }
        if (c == '[') {
            return read_array();
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string read_string() {
        std::size_t start = pos_;
        expect('"');
        std::string s;
        while (true) {
            if (at_end()) {
                throw ParseError("unterminated string", start);
            }
            char c = text_[pos_++];
            if (c == '"') {
                break;
            }
            if (c == '\\') {
                if (at_end()) {
                    throw ParseError("unterminated escape", pos_);
                }
                char e = text_[pos_++];
                switch (e) {
                    case '"':
                    case '\\':
                    case '/':
                        s.push_back(e);
                        break;
                    case 'n':
                        s.push_back('\n');
                        break;
                    case 't':
                        s.push_back('\t');
                        break;
                    case 'r':
                        s.push_back('\r');
                        break;
                    default:
                        throw ParseError("unknown escape", pos_ - 1);
                }
            } else {
                s.push_back(c);
            }
        }
        return s;
    }

    void skip_ws() {
        while (!at_end() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

  private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }

    void expect(char c) {
        skip_ws();
        if (at_end() || text_[pos_] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::int64_t read_integer(bool allow_sign) {
        std::size_t start = pos_;
        if (allow_sign && !at_end() && text_[pos_] == '-') {
            ++pos_;
        }
        std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (digits == pos_) {
            throw ParseError("expected digits", pos_);
        }
        std::int64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{}) {
            throw ParseError("integer out of range", start);
        }
        return value;
    }

    RawValue read_number() {
        std::int64_t num = read_integer(true);
        std::int64_t den = 1;
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            den = read_integer(false);
        }
        return RawValue{RawValue::Num{num, den}};
    }

    RawValue read_array() {
        std::size_t start = pos_;
        expect('[');
        skip_ws();
        if (at_end() || text_[pos_] != '"') {
            throw ParseError("array must start with \"pair\" or \"set\"", pos_);
        }
        std::string tag = read_string();
        std::vector<RawValue> items;
        while (true) {
            skip_ws();
            if (at_end()) {
                throw ParseError("unterminated array", start);
            }
            if (text_[pos_] == ']') {
                ++pos_;
                break;
            }
            expect(',');
            items.push_back(read());
        }
        if (tag == "pair") {
            if (items.size() != 2) {
                throw ParseError("pair needs exactly two components", start);
            }
            return RawValue{RawValue::PairNode{std::move(items)}};
        }
        if (tag == "set") {
            return RawValue{RawValue::SetNode{std::move(items)}};
        }
        throw ParseError("unknown array tag \"" + tag + "\"", start);
    }

    std::string_view text_;
    std::size_t& pos_;
};

/// Parses a whole string as exactly one Value.
inline Value parse_value(std::string_view text) {
    std::size_t pos = 0;
    ValueReader reader(text, pos);
    RawValue raw = reader.read();
    reader.skip_ws();
    if (pos != text.size()) {
        throw ParseError("trailing input", pos);
    }
    return canonicalize(raw);
}

}  // namespace vickset
